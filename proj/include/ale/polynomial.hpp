#pragma once

#include <vector>

#include "ale/special_functions.hpp"

namespace ale {

// coeffs[i] multiplies x^i.
cplx poly_eval(const std::vector<cplx>& coeffs, cplx x);

// All roots of a polynomial with nonzero leading coefficient, from the
// companion-matrix eigenvalues followed by Newton polishing.
std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs);

}  // namespace ale
