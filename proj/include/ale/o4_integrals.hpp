#pragma once

#include <vector>

#include "ale/o4_curve.hpp"

namespace ale {

// Piecewise-linear path in the zeta-plane. The square root of eta4 starts on
// sheet * sqrt_eta(first waypoint) and is continued along the path.
struct OpenPath {
  std::vector<cplx> waypoints;
  int sheet = 1;
};

struct LiftedSample {
  cplx zeta;
  cplx s;  // continued sqrt(eta4)
  cplx u;  // continued Abel-Jacobi coordinate (not reduced)
};

// Samples along the path dense enough that u moves by less than a twentieth
// of a period between neighbours.
std::vector<LiftedSample> lift_path(const MajoranaQuartic& m, const std::vector<cplx>& waypoints,
                                    cplx s_start);

// Integral of zeta^(k-1) dzeta / (2 sqrt(eta4)) along the path, k in -2..2.
cplx I_incomplete(int k, const OpenPath& path, const MajoranaQuartic& m);

// Integral over the closed cycle Gamma_i, k in 0..2.
cplx I_complete(int k, int i, const MajoranaQuartic& m);

// Residue at zeta = 0 of zeta^(-k-1) / (2 sqrt(eta4)) on the sheet where
// sqrt(eta4) ~ conj(sqrt(z)) / zeta, k in 1..2.
cplx conjugation_residue(int k, const MajoranaQuartic& m);

// I_{-k} over a closed contour mapped to itself by the antipodal map, from
// value = I_k: (-1)^k conj(value) + side * 2 pi i * conjugation_residue(k).
// The two sides differ by which way the contour passes zeta = 0; summing them
// cancels the residue.
cplx conjugation_shift(int k, cplx value, const MajoranaQuartic& m, int side);

// pi_i at u_inf^+ and u_inf^- with u_inf taken in the band of Gamma_i.
struct PiPair {
  cplx plus;
  cplx minus;
};
PiPair pi_pair(const MajoranaQuartic& m, int i);

}  // namespace ale
