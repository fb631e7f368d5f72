#include "ale/polynomial.hpp"

#include <Eigen/Eigenvalues>

#include "ale/errors.hpp"

namespace ale {

cplx poly_eval(const std::vector<cplx>& coeffs, cplx x) {
  cplx r = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
  return r;
}

std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1) return {};
  const cplx lead = coeffs.back();
  if (lead == 0.0) throw Error(ErrorKind::Domain, "leading coefficient vanishes");
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -coeffs[i] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::Convergence, "companion eigenvalues failed");
  std::vector<cplx> roots(es.eigenvalues().data(), es.eigenvalues().data() + n);

  std::vector<cplx> deriv(n);
  for (int i = 1; i <= n; ++i) deriv[i - 1] = double(i) * coeffs[i];
  for (cplx& r : roots) {
    for (int it = 0; it < 3; ++it) {
      const cplx d = poly_eval(deriv, r);
      if (std::abs(d) == 0.0) break;
      const cplx step = poly_eval(coeffs, r) / d;
      if (!std::isfinite(std::abs(step)) || std::abs(step) > 1e-3 * (1.0 + std::abs(r))) break;
      r -= step;
    }
  }
  return roots;
}

}  // namespace ale
