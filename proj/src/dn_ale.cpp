#include "ale/dn_ale.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/LU>

#include "ale/conic_pencil.hpp"
#include "ale/errors.hpp"
#include "ale/polynomial.hpp"

namespace ale {

namespace {

constexpr double kPi = std::numbers::pi;
using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 tangent_towards(const Vec3& n, const Vec3& p) {
  const double c = dot(n, p);
  Vec3 t{p[0] - c * n[0], p[1] - c * n[1], p[2] - c * n[2]};
  const double len = std::sqrt(dot(t, t));
  if (len < 1e-12) throw Error(ErrorKind::Degenerate, "point coincides with a root or its antipode");
  for (double& x : t) x /= len;
  return t;
}

double wrap_pi(double a) { return a - 2.0 * kPi * std::round(a / (2.0 * kPi)); }

SpherePoint alpha_point(const MajoranaQuartic& m) { return SpherePoint::from_zeta(m.alpha()); }
SpherePoint beta_point(const MajoranaQuartic& m) { return SpherePoint::from_zeta(m.beta()); }

std::vector<SpherePoint> quartic_roots(const DeformedCoefficients& d) {
  const double scale = std::abs(d.z) + std::abs(d.v) + std::abs(d.x);
  std::vector<SpherePoint> out;
  if (std::abs(d.z) <= 1e-14 * scale) {
    // zeta^2 (eta4 - chi^2) loses its extreme coefficients: roots 0 and infinity.
    out.push_back(SpherePoint::from_zeta(0.0));
    out.push_back(SpherePoint::infinity());
    for (cplx r : polynomial_roots({std::conj(d.v), cplx(d.x), -d.v})) out.push_back(SpherePoint::from_zeta(r));
    return out;
  }
  for (cplx r : polynomial_roots({std::conj(d.z), std::conj(d.v), cplx(d.x), -d.v, d.z}))
    out.push_back(SpherePoint::from_zeta(r));
  return out;
}

struct Lifted {
  cplx u;        // u_zeta
  cplx u_minus;  // u^-_zeta, so u_{-1/conj zeta} = u - u_minus
};

std::vector<Lifted> lifted_roots(const MajoranaQuartic& m, const MonopoleConfig& cfg) {
  std::vector<Lifted> out;
  for (const O2Multiplet& chi : cfg.multiplets) {
    const DeformedRoots r = deformed_roots(m, chi);
    for (const SpherePoint& p : {r.a, r.b})
      out.push_back({jacobian_coordinate(m, p).u.u(), u_minus_representative(m, p)});
  }
  return out;
}

}  // namespace

O2Multiplet O2Multiplet::from_coherent(double sigma, const SpherePoint& gamma) {
  const auto& k = gamma.ket();
  return {sigma * (std::norm(k[0]) - std::norm(k[1])), -sigma * std::conj(k[1]) * k[0]};
}

double O2Multiplet::sigma() const { return std::sqrt(t * t + 4.0 * std::norm(w)); }

SpherePoint O2Multiplet::gamma() const {
  const double s = sigma();
  if (s == 0.0) return SpherePoint::from_zeta(0.0);
  if (t >= 0.0) return SpherePoint::from_zeta(-2.0 * std::conj(w) / (s + t));
  if (w == 0.0) return SpherePoint::infinity();
  return SpherePoint::from_zeta(-(s - t) / (2.0 * w));
}

cplx O2Multiplet::eval(cplx zeta) const { return std::conj(w) / zeta + t - w * zeta; }

DeformedCoefficients deformed_coefficients(const MajoranaQuartic& m, const O2Multiplet& chi) {
  return {m.z() - chi.w * chi.w, m.v() - 2.0 * chi.t * chi.w, m.x() - chi.t * chi.t + 2.0 * std::norm(chi.w)};
}

DeformedRoots deformed_roots(const MajoranaQuartic& m, const O2Multiplet& chi) {
  const std::vector<SpherePoint> r = quartic_roots(deformed_coefficients(m, chi));
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j)
      if (fs_distance(r[i], r[j]) < 1e-8) throw Error(ErrorKind::Degenerate, "deformed roots collide");

  // Partner of r[0] under the antipodal map; the other two form the second pair.
  std::size_t partner = 1;
  for (std::size_t j = 2; j < 4; ++j)
    if (fs_distance(r[j], r[0].antipode()) < fs_distance(r[partner], r[0].antipode())) partner = j;
  std::array<SpherePoint, 2> p{r[0], r[partner]};
  std::array<SpherePoint, 2> q;
  for (std::size_t j = 1, n = 0; j < 4; ++j)
    if (j != partner) q[n++] = r[j];
  if (fs_distance(p[1], p[0].antipode()) > 1e-6 || fs_distance(q[1], q[0].antipode()) > 1e-6)
    throw Error(ErrorKind::Contract, "deformed roots are not antipodally paired");

  const SpherePoint al = alpha_point(m);
  const SpherePoint be = beta_point(m);
  double best = INFINITY;
  DeformedRoots out;
  for (int swap = 0; swap < 2; ++swap) {
    const auto& pa = swap ? q : p;
    const auto& pb = swap ? p : q;
    for (const SpherePoint& a : pa) {
      for (const SpherePoint& b : pb) {
        const double cost = fs_distance(a, al) + fs_distance(b, be);
        // Near-ties resolve towards the smaller argument of a.
        const bool tie = std::abs(cost - best) <= 1e-12;
        if (cost < best - 1e-12 || (tie && std::arg(a.zeta()) < std::arg(out.a.zeta()))) {
          best = std::min(best, cost);
          out = {a, b};
        }
      }
    }
  }
  // Antipodal images are exact by construction.
  return out;
}

SphericalResiduals spherical_residuals(const MajoranaQuartic& m, const O2Multiplet& chi,
                                       const SpherePoint& zeta) {
  const SpherePoint g = chi.gamma();
  const SpherePoint al = alpha_point(m);
  const SpherePoint be = beta_point(m);
  const double s = chi.sigma();
  const double sg = std::sin(fs_distance(g, zeta));
  const double norm =
      m.rho() * std::sin(fs_distance(al, zeta)) * std::sin(fs_distance(be, zeta)) - s * s * sg * sg;
  const double phase = vertex_angle(zeta, g, al) + vertex_angle(zeta, g, be);
  return {norm, std::abs(wrap_pi(phase))};
}

std::vector<SpherePoint> gamma_from_zeta(const MajoranaQuartic& m, const SpherePoint& zeta,
                                         double sigma) {
  const SpherePoint al = alpha_point(m);
  const SpherePoint be = beta_point(m);
  const double lhs = m.rho() * std::sin(fs_distance(al, zeta)) * std::sin(fs_distance(be, zeta));
  if (sigma <= 0.0) return {};
  const double s2 = lhs / (sigma * sigma);
  if (s2 > 1.0) return {};
  const Vec3 n = zeta.unit_vector();
  const Vec3 ta = tangent_towards(n, al.unit_vector());
  const Vec3 tb = tangent_towards(n, be.unit_vector());
  Vec3 d{ta[0] + tb[0], ta[1] + tb[1], ta[2] + tb[2]};
  const double len = std::sqrt(dot(d, d));
  if (len < 1e-12) throw Error(ErrorKind::Degenerate, "zeta lies on the geodesic segment between the roots");
  for (double& x : d) x /= len;
  const double d1 = std::asin(std::sqrt(std::max(0.0, s2)));
  auto at = [&](double delta, double dir) {
    const double c = std::cos(delta);
    const double s = std::sin(delta) * dir;
    return SpherePoint::from_vector({c * n[0] + s * d[0], c * n[1] + s * d[1], c * n[2] + s * d[2]});
  };
  return {at(d1, 1.0), at(kPi - d1, -1.0), at(d1, -1.0), at(kPi - d1, 1.0)};
}

cplx u_minus_representative(const MajoranaQuartic& m, const SpherePoint& zeta) {
  const UMinus um = u_minus_via_F(m, zeta);
  return um.F / std::sqrt(m.rho()) + m.weierstrass().omega_prime();
}

cplx dF_dx(const MajoranaQuartic& m, const MonopoleConfig& cfg, int winding, int winding_prime) {
  const WeierstrassModel& w = m.weierstrass();
  cplx out = 2.0 * double(winding) * w.omega() + 2.0 * double(winding_prime) * w.omega_prime();
  for (const O2Multiplet& chi : cfg.multiplets) {
    const DeformedRoots r = deformed_roots(m, chi);
    out -= u_minus_representative(m, r.a) + u_minus_representative(m, r.b);
  }
  return out;
}

EsResidual es_residual(const MajoranaQuartic& m, const MonopoleConfig& cfg) {
  double S = 0.0;
  for (const O2Multiplet& chi : cfg.multiplets) {
    const DeformedRoots r = deformed_roots(m, chi);
    S += u_minus_via_F(m, r.a).F + u_minus_via_F(m, r.b).F;
  }
  const double twoK = 2.0 * m.weierstrass().K();
  const int mult = static_cast<int>(std::lround(S / twoK));
  return {std::abs(S - twoK * mult), mult, S};
}

cplx log_sigma_quotient(const MajoranaQuartic& m, const MonopoleConfig& cfg, cplx U, int winding,
                        int winding_prime) {
  const WeierstrassModel& w = m.weierstrass();
  const cplx p = 2.0 * double(winding) * w.omega();
  const cplx pp = 2.0 * double(winding_prime) * w.omega_prime();
  cplx L = w.log_sigma(p - U) - w.log_sigma(p + U) + w.log_sigma(pp - U) - w.log_sigma(pp + U);
  for (const Lifted& l : lifted_roots(m, cfg)) {
    const cplx ua = l.u - l.u_minus;
    L += w.log_sigma(l.u + U) + w.log_sigma(ua - U) - w.log_sigma(l.u - U) - w.log_sigma(ua + U);
  }
  return L;
}

QuotientDivisor quotient_divisor(const MajoranaQuartic& m, const MonopoleConfig& cfg, int winding,
                                 int winding_prime) {
  const WeierstrassModel& w = m.weierstrass();
  const cplx p = 2.0 * double(winding) * w.omega();
  const cplx pp = 2.0 * double(winding_prime) * w.omega_prime();
  QuotientDivisor d{{p, pp}, {-p, -pp}};
  for (const Lifted& l : lifted_roots(m, cfg)) {
    const cplx ua = l.u - l.u_minus;
    d.zeros.push_back(-l.u);
    d.zeros.push_back(ua);
    d.poles.push_back(l.u);
    d.poles.push_back(-ua);
  }
  return d;
}

cplx dF_dv(const MajoranaQuartic& m, const MonopoleConfig& cfg, int winding, int winding_prime) {
  const WeierstrassModel& w = m.weierstrass();
  const InfinityData d = infinity_data(m);
  const cplx sz = std::sqrt(m.z());
  cplx L = log_sigma_quotient(m, cfg, d.u_inf, winding, winding_prime);
  L = {L.real(), wrap_pi(L.imag())};
  const cplx Z = w.zeta_w(d.u_plus) + w.zeta_w(d.u_minus);
  return (L + Z * dF_dx(m, cfg, winding, winding_prime)) / (2.0 * sz);
}

double LegendreResiduals::norm() const {
  return std::max({std::abs(fx), std::abs(fv.real()), std::abs(fv.imag())});
}

LegendreResiduals legendre_residuals(const MajoranaQuartic& m, const MonopoleConfig& cfg, cplx u,
                                     int winding) {
  const cplx fx = dF_dx(m, cfg, winding);
  const cplx q = 2.0 * std::sqrt(m.z()) * (dF_dv(m, cfg, winding) - u);
  return {fx.real(), {q.real(), wrap_pi(q.imag())}};
}

LegendreSolution solve_legendre_relations(const MonopoleConfig& cfg, cplx z, cplx u,
                                          const MajoranaQuartic& seed, const SolverOptions& opt) {
  if (std::abs(seed.z() - z) > 1e-12 * (1.0 + std::abs(z)))
    throw Error(ErrorKind::Contract, "seed multiplet must carry the requested z");
  const int winding = es_residual(seed, cfg).nearest_multiple;
  using V3 = Eigen::Vector3d;
  auto build = [&](const V3& p) { return MajoranaQuartic::from_coefficients(z, cplx(p[0], p[1]), p[2]); };
  auto residual = [&](const MajoranaQuartic& m) {
    const LegendreResiduals r = legendre_residuals(m, cfg, u, winding);
    return V3(r.fx, r.fv.real(), r.fv.imag());
  };

  V3 p(seed.v().real(), seed.v().imag(), seed.x());
  MajoranaQuartic cur = build(p);
  V3 r = residual(cur);
  LegendreSolution sol{cur, winding, 0, false, {r.lpNorm<Eigen::Infinity>()}, {}};
  for (int it = 1; it <= opt.max_iterations && r.lpNorm<Eigen::Infinity>() >= opt.tol; ++it) {
    Eigen::Matrix3d J;
    for (int j = 0; j < 3; ++j) {
      const double h = 1e-6 * (1.0 + std::abs(p[j]));
      V3 hi = p, lo = p;
      hi[j] += h;
      lo[j] -= h;
      J.col(j) = (residual(build(hi)) - residual(build(lo))) / (2.0 * h);
    }
    const Eigen::FullPivLU<Eigen::Matrix3d> lu(J);
    const V3 step = lu.isInvertible() ? V3(lu.solve(r)) : V3(J.transpose() * r);
    double lambda = 1.0;
    bool accepted = false;
    for (int half = 0; half < 30 && !accepted; ++half, lambda /= 2.0) {
      const V3 trial = p - lambda * step;
      try {
        const MajoranaQuartic m = build(trial);
        const V3 rt = residual(m);
        if (rt.lpNorm<Eigen::Infinity>() < r.lpNorm<Eigen::Infinity>()) {
          p = trial;
          cur = m;
          r = rt;
          accepted = true;
        }
      } catch (const Error&) {
        // Leaving the admissible region counts as a rejected step.
      }
    }
    sol.iterations = it;
    sol.residual_trace.push_back(r.lpNorm<Eigen::Infinity>());
    if (!accepted) break;
  }
  sol.multiplet = cur;
  sol.converged = r.lpNorm<Eigen::Infinity>() < opt.tol;
  sol.residuals = legendre_residuals(cur, cfg, u, winding);
  return sol;
}

CorrespondenceReport poncelet_correspondence(const MajoranaQuartic& m, const MonopoleConfig& cfg,
                                             int starts, std::uint64_t seed, double tol) {
  if (cfg.multiplets.empty()) throw Error(ErrorKind::Domain, "correspondence needs at least one monopole");
  if (starts < 1) throw Error(ErrorKind::Domain, "need at least one start");
  const CayleyPair c = cayley_pair(m);
  const Pencil pencil(Conic(c.A.cast<cplx>()), Conic(c.B.cast<cplx>()));
  CorrespondenceReport rep;
  for (const Lifted& l : lifted_roots(m, cfg)) rep.steps.push_back(l.u_minus);
  const Lattice& lat = m.weierstrass().lattice();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  rep.max_residual = 0.0;
  rep.real = true;
  for (int s = 0; s < starts; ++s) {
    const double a = unit(rng);
    const double b = unit(rng);
    const GeneralizedChain g = generalized_chain_steps(pencil, rep.steps, lat.from_frac(a, b), tol);
    rep.start_residuals.push_back(g.geometric_residual);
    rep.max_residual = std::max(rep.max_residual, g.geometric_residual);
    rep.algebraic_residual = g.algebraic_residual;
    rep.real = rep.real && g.real;
  }
  rep.closes = rep.max_residual < tol;
  return rep;
}

}  // namespace ale
