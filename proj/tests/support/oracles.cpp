#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "quadrature.hpp"

namespace oracle {

std::vector<cplx> durand_kerner(const std::vector<cplx>& coeffs, int max_iter) {
  std::size_t deg = coeffs.size() - 1;
  while (deg > 0 && coeffs[deg] == 0.0) --deg;
  std::vector<cplx> monic(deg + 1);
  for (std::size_t i = 0; i <= deg; ++i) monic[i] = coeffs[i] / coeffs[deg];
  double bound = 1.0;
  for (std::size_t i = 0; i < deg; ++i) bound = std::max(bound, 1.0 + std::abs(monic[i]));
  std::vector<cplx> r(deg);
  const cplx seed(0.4, 0.9);
  for (std::size_t j = 0; j < deg; ++j) r[j] = 0.5 * bound * std::pow(seed, double(j));
  auto eval = [&](cplx x) {
    cplx s = 0.0;
    for (std::size_t i = deg + 1; i-- > 0;) s = s * x + monic[i];
    return s;
  };
  for (int it = 0; it < max_iter; ++it) {
    double change = 0.0;
    for (std::size_t j = 0; j < deg; ++j) {
      cplx den = 1.0;
      for (std::size_t l = 0; l < deg; ++l)
        if (l != j) den *= r[j] - r[l];
      const cplx d = eval(r[j]) / den;
      r[j] -= d;
      change = std::max(change, std::abs(d) / (1.0 + std::abs(r[j])));
    }
    if (change < 1e-16) break;
  }
  return r;
}

cplx wp_qseries(cplx u, double w1, double w3_im) {
  constexpr double pi = std::numbers::pi;
  // Shift into the centered strip so the cosine series converges fast.
  const double b = std::round(u.imag() / (2.0 * w3_im));
  u -= cplx(0.0, 2.0 * w3_im * b);
  const double q = std::exp(-pi * w3_im / w1);
  const cplx v = pi * u / (2.0 * w1);
  const double c = pi / (2.0 * w1);
  cplx sum = 0.0;
  double q2n = 1.0;
  for (int n = 1; n < 200; ++n) {
    q2n *= q * q;
    const double a = n * q2n / (1.0 - q2n);
    const cplx term = 8.0 * a * (1.0 - std::cos(2.0 * n * v));
    sum += term;
    if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum)) && n > 3) break;
  }
  const cplx s = std::sin(v);
  return c * c * (-1.0 / 3.0 + 1.0 / (s * s) + sum);
}

double F_quadrature(double phi, double k) {
  auto f = [k](double t) { return cplx(1.0 / std::sqrt(1.0 - k * k * std::sin(t) * std::sin(t))); };
  return gauss_kronrod(f, 0.0, phi, 1e-15).real();
}

double K_series(double k) {
  const double m = k * k;
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < 100000; ++n) {
    const double r = (2.0 * n - 1.0) / (2.0 * n);
    term *= r * r * m;
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return std::numbers::pi / 2.0 * sum;
}

std::vector<double> cubic_real_roots(double g2, double g3) {
  auto r = durand_kerner({cplx(-g3), cplx(-g2), 0.0, 1.0});
  std::vector<double> out;
  for (cplx x : r) out.push_back(x.real());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace oracle
