#pragma once

#include <optional>

#include "ale/o4_curve.hpp"
#include "quadrature.hpp"

namespace oracle {

// Cycle Gamma_i in the X-plane: thin ellipses around [e3, e2] and [e2, e1],
// and for i = 2 a tube around the arc wp(omega_3 + 2 t omega_2), t in [0, 1/2],
// drawn with the q-series. The optional pole is kept outside.
Contour x_cycle(const ale::WeierstrassModel& w, int i, std::optional<cplx> pole = std::nullopt);

// eta4 from its Majorana coefficients.
cplx eta4(const ale::MajoranaQuartic& m, cplx zeta);

// Moebius map X -> zeta sending X_inf to infinity and the e_i to the roots of
// zeta^2 eta4 other than beta, matched on Durand-Kerner roots.
struct ZetaMap {
  cplx beta;
  cplx X_inf;
  cplx q;
  cplx zeta(cplx X) const { return (beta * X + q) / (X - X_inf); }
  cplx dzeta(cplx X) const { return (-beta * X_inf - q) / ((X - X_inf) * (X - X_inf)); }
};
std::optional<ZetaMap> zeta_map(const ale::MajoranaQuartic& m);

Contour to_zeta(const Contour& c, const ZetaMap& zm);

}  // namespace oracle
