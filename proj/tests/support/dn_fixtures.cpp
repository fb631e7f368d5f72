#include "dn_fixtures.hpp"

#include <cmath>

#include "ale/errors.hpp"

namespace oracle {

namespace {

using ale::cplx;

std::optional<double> ratio(const ale::MajoranaQuartic& m0, const ale::MonopoleConfig& cfg, double x) {
  try {
    const auto m = ale::MajoranaQuartic::from_coefficients(m0.z(), m0.v(), x);
    return ale::es_residual(m, cfg).S / (2.0 * m.weierstrass().K());
  } catch (const ale::Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<DnCase> inverse_engineer(std::mt19937_64& g, double residual_tol) {
  std::normal_distribution<double> N;
  const cplx a(N(g), N(g));
  const cplx b(N(g), N(g));
  const double rho = 0.5 + std::abs(N(g));
  std::optional<ale::MajoranaQuartic> m0;
  try {
    m0 = ale::MajoranaQuartic::from_roots(rho, a, b);
  } catch (const ale::Error&) {
    return std::nullopt;
  }
  const int n = 1 + static_cast<int>(g() % 3);
  ale::MonopoleConfig cfg;
  for (int l = 0; l < n; ++l) {
    const double t = 0.5 * N(g);
    const double wr = N(g);
    const double wi = N(g);
    cfg.multiplets.push_back({t, 0.5 * cplx(wr, wi)});
  }

  const double x0 = m0->x() - 3.0;
  double lo = x0;
  std::optional<double> flo = ratio(*m0, cfg, lo);
  for (int j = 1; j <= 60; ++j) {
    const double hi = x0 + 0.1 * j;
    const std::optional<double> fhi = ratio(*m0, cfg, hi);
    if (flo && fhi && std::abs(*fhi - *flo) < 0.3 && std::floor(*fhi) != std::floor(*flo)) {
      const double target = std::max(std::floor(*fhi), std::floor(*flo));
      double l = lo, h = hi, fl = *flo - target;
      for (int it = 0; it < 200 && h - l > 1e-15 * (1.0 + std::abs(l)); ++it) {
        const double mid = 0.5 * (l + h);
        const std::optional<double> fm = ratio(*m0, cfg, mid);
        if (!fm) break;
        if ((*fm - target) * fl > 0.0) {
          l = mid;
          fl = *fm - target;
        } else {
          h = mid;
        }
      }
      try {
        const auto m = ale::MajoranaQuartic::from_coefficients(m0->z(), m0->v(), 0.5 * (l + h));
        const ale::EsResidual es = ale::es_residual(m, cfg);
        if (es.residual < residual_tol) return DnCase{m, cfg, es.nearest_multiple};
      } catch (const ale::Error&) {
      }
    }
    lo = hi;
    flo = fhi;
  }
  return std::nullopt;
}

}  // namespace oracle
