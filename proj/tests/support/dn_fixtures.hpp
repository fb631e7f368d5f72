#pragma once

#include <optional>
#include <random>

#include "ale/dn_ale.hpp"

namespace oracle {

struct DnCase {
  ale::MajoranaQuartic multiplet;
  ale::MonopoleConfig config;
  int multiple;  // S = 2 K multiple at the constructed x
};

// Random multiplet and 1 to 3 monopoles; x is then moved to where
// S(x) / 2K(x) crosses an integer, found on a grid of step 0.1 over x0 +- 3
// and refined by bisection. Brackets across a jump of S are rejected by the
// final residual check. Absent when no crossing is found.
std::optional<DnCase> inverse_engineer(std::mt19937_64& g, double residual_tol = 1e-12);

}  // namespace oracle
