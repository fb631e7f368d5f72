#include "ale/o4_integrals.hpp"

#include <cmath>
#include <utility>
#include <numbers>

#include "ale/errors.hpp"

namespace ale {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

struct Frame {
  const MajoranaQuartic& m;
  const WeierstrassModel& w;
  CurvePoint at(cplx zeta, cplx s) const {
    const cplx X = *zeta_to_X(m, SpherePoint::from_zeta(zeta));
    const cplx db = zeta - m.beta();
    return {X, zeta * s * m.rho() * m.c0() * (m.alpha() - m.beta()) / (db * db)};
  }
};

cplx nearest_translate(const Lattice& lat, cplx u, cplx ref) {
  auto [a, b] = lat.frac(u - ref);
  return u - lat.from_frac(std::round(a), std::round(b));
}

double frac_step(const Lattice& lat, cplx du) {
  auto [a, b] = lat.frac(du);
  return std::hypot(a, b);
}

void require_z(const MajoranaQuartic& m) {
  const double scale = std::abs(m.z()) + std::abs(m.v()) + std::abs(m.x());
  if (std::abs(m.z()) <= 1e-14 * scale) throw Error(ErrorKind::Domain, "integrals with k >= 1 need z != 0");
}

// Continues log sigma(u - u_inf) - log sigma(u + u_inf) along the samples.
std::vector<cplx> log_ratio(const WeierstrassModel& w, const std::vector<LiftedSample>& pts, cplx uinf) {
  std::vector<cplx> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    cplx l = w.log_sigma(p.u - uinf) - w.log_sigma(p.u + uinf);
    if (!out.empty()) {
      const double k = std::round((l - out.back()).imag() / (2.0 * kPi));
      l -= kI * (2.0 * kPi * k);
    }
    out.push_back(l);
  }
  return out;
}

cplx positive_incomplete(int k, const MajoranaQuartic& m, const std::vector<LiftedSample>& pts) {
  const WeierstrassModel& w = m.weierstrass();
  const cplx u0 = pts.front().u;
  const cplx u1 = pts.back().u;
  if (k == 0) return u1 - u0;
  require_z(m);
  const InfinityData d = infinity_data(m);
  const cplx sz = std::sqrt(m.z());
  const cplx Z = w.zeta_w(d.u_plus) + w.zeta_w(d.u_minus);
  const auto L = log_ratio(w, pts, d.u_inf);
  const cplx lin0 = L.front() + Z * u0;
  const cplx lin1 = L.back() + Z * u1;
  if (k == 1) return -(lin1 - lin0) / (2.0 * sz);
  const CayleyPair c = cayley_pair(m);
  auto H = [&](cplx u, cplx lin) {
    return w.zeta_w(u - d.u_inf) + w.zeta_w(u + d.u_inf) + (c.x_plus + c.x_minus) * u + m.v() / sz * lin;
  };
  return -(H(u1, lin1) - H(u0, lin0)) / (4.0 * m.z());
}

}  // namespace

std::vector<LiftedSample> lift_path(const MajoranaQuartic& m, const std::vector<cplx>& waypoints,
                                    cplx s_start) {
  if (waypoints.size() < 2) throw Error(ErrorKind::Domain, "path needs at least two waypoints");
  const WeierstrassModel& w = m.weierstrass();
  const Lattice& lat = w.lattice();
  const Frame f{m, w};
  auto sample = [&](cplx zeta, cplx s_prev, cplx u_prev, bool first) {
    if (zeta == 0.0 || zeta == m.beta()) throw Error(ErrorKind::Domain, "path passes through a pole of the map");
    cplx s = first ? s_prev : std::sqrt(m.eta(zeta));
    if (!first && std::abs(s - s_prev) > std::abs(s + s_prev)) s = -s;
    const CurvePoint p = f.at(zeta, s);
    cplx u = w.abel_jacobi(p.X, p.Y).u();
    if (!first) u = nearest_translate(lat, u, u_prev);
    return LiftedSample{zeta, s, u};
  };
  std::vector<LiftedSample> out;
  out.push_back(sample(waypoints[0], s_start, 0.0, true));
  for (std::size_t j = 1; j < waypoints.size(); ++j) {
    const cplx a = waypoints[j - 1];
    const cplx b = waypoints[j];
    // March with step halving whenever u or the root moves too far.
    double t = 0.0;
    double h = 1.0 / 16.0;
    while (t < 1.0) {
      const double tn = std::min(1.0, t + h);
      const LiftedSample& prev = out.back();
      const LiftedSample next = sample(a + (b - a) * tn, prev.s, prev.u, false);
      const double ds = std::abs(next.s - prev.s) / (std::abs(prev.s) + std::abs(next.s) + 1e-300);
      if ((frac_step(lat, next.u - prev.u) > 0.05 || ds > 0.2) && h > 1e-9) {
        h /= 2.0;
        continue;
      }
      out.push_back(next);
      t = tn;
      h = std::min(h * 1.5, 1.0 / 16.0);
    }
  }
  return out;
}

cplx I_incomplete(int k, const OpenPath& path, const MajoranaQuartic& m) {
  if (k < -2 || k > 2) throw Error(ErrorKind::Domain, "k must lie in -2..2");
  if (path.sheet != 1 && path.sheet != -1) throw Error(ErrorKind::Domain, "sheet tag must be +1 or -1");
  if (path.waypoints.empty()) throw Error(ErrorKind::Domain, "empty path");
  const cplx s0 = double(path.sheet) * sqrt_eta(m, path.waypoints.front());
  if (k >= 0) return positive_incomplete(k, m, lift_path(m, path.waypoints, s0));
  // zeta -> -1/conj(zeta) turns the k < 0 integrand into the conjugate of the
  // -k one on the antipodal path, whose root is conj(s).
  // The image of a segment is a circular arc, so the path is refined until
  // the chords of the image hug that arc.
  for (cplx z : path.waypoints)
    if (z == 0.0) throw Error(ErrorKind::Domain, "path passes through zeta = 0");
  auto antipode = [](cplx z) { return -1.0 / std::conj(z); };
  std::vector<cplx> anti{antipode(path.waypoints.front())};
  for (std::size_t j = 1; j < path.waypoints.size(); ++j) {
    std::vector<std::pair<cplx, cplx>> stack{{path.waypoints[j - 1], path.waypoints[j]}};
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      const cplx mid = 0.5 * (a + b);
      if (mid == 0.0) throw Error(ErrorKind::Domain, "path passes through zeta = 0");
      const cplx ia = antipode(a);
      const cplx ib = antipode(b);
      if (std::abs(antipode(mid) - 0.5 * (ia + ib)) > 1e-3 * std::abs(ib - ia)) {
        stack.push_back({mid, b});
        stack.push_back({a, mid});
      } else {
        anti.push_back(ib);
      }
    }
  }
  const cplx val = positive_incomplete(-k, m, lift_path(m, anti, std::conj(s0)));
  return ((-k + 1) % 2 == 0 ? 1.0 : -1.0) * std::conj(val);
}

PiPair pi_pair(const MajoranaQuartic& m, int i) {
  const WeierstrassModel& w = m.weierstrass();
  const InfinityData d = infinity_data(m);
  const cplx ub = w.reduce_to_band(d.u_inf, i);
  return {w.pi_det(ub + d.u_zero, i), w.pi_det(ub - d.u_zero, i)};
}

cplx I_complete(int k, int i, const MajoranaQuartic& m) {
  if (i < 1 || i > 3) throw Error(ErrorKind::Domain, "cycle index must be 1, 2 or 3");
  const WeierstrassModel& w = m.weierstrass();
  if (k == 0) return 2.0 * w.half_period(i);
  if (k != 1 && k != 2) throw Error(ErrorKind::Domain, "complete integrals are for k in 0..2");
  require_z(m);
  const cplx sz = std::sqrt(m.z());
  const PiPair p = pi_pair(m, i);
  if (k == 1) return (p.plus + p.minus) / sz;
  const CayleyPair c = cayley_pair(m);
  return -(2.0 * w.eta(i) + (c.x_plus + c.x_minus) * w.half_period(i) - m.v() / sz * (p.plus + p.minus)) /
         (2.0 * m.z());
}

cplx conjugation_residue(int k, const MajoranaQuartic& m) {
  if (k != 1 && k != 2) throw Error(ErrorKind::Domain, "conjugation shift is for k in 1..2");
  require_z(m);
  const cplx szb = std::conj(std::sqrt(m.z()));
  if (k == 1) return 1.0 / (2.0 * szb);
  return -std::conj(m.v()) / (4.0 * std::conj(m.z()) * szb);
}

cplx conjugation_shift(int k, cplx value, const MajoranaQuartic& m, int side) {
  if (side != 1 && side != -1) throw Error(ErrorKind::Domain, "side must be +1 or -1");
  const cplx res = 2.0 * kPi * kI * conjugation_residue(k, m);
  return (k % 2 == 0 ? 1.0 : -1.0) * std::conj(value) + double(side) * res;
}

}  // namespace ale
