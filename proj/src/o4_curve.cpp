#include "ale/o4_curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "ale/errors.hpp"
#include "ale/polynomial.hpp"

namespace ale {

namespace {

constexpr double kPi = std::numbers::pi;
using Vec3 = std::array<double, 3>;

double dot(const Vec3& x, const Vec3& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }

Vec3 cross(const Vec3& x, const Vec3& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

Vec3 unit_tangent(const Vec3& n, const Vec3& p) {
  const double d = dot(n, p);
  Vec3 t{p[0] - d * n[0], p[1] - d * n[1], p[2] - d * n[2]};
  const double len = std::sqrt(dot(t, t));
  if (len > 0.0) {
    for (double& c : t) c /= len;
  }
  return t;
}

WeierstrassModel model_for(double rho, cplx alpha, cplx beta) {
  const SpherePoint a = SpherePoint::from_zeta(alpha);
  const SpherePoint b = SpherePoint::from_zeta(beta);
  const double k = chordal_k(a, b);
  const double kp = chordal_k_prime(a, b);
  if (kp < 1e-10) throw Error(ErrorKind::Degenerate, "coincident roots");
  if (k < 1e-10) throw Error(ErrorKind::Degenerate, "antipodal roots");
  if (!(rho > 0.0) || !std::isfinite(rho)) throw Error(ErrorKind::Domain, "rho must be positive");
  return WeierstrassModel::from_rho_k(rho, k);
}

// Coefficients of zeta^2 eta4 for unit rho, index = power of zeta.
std::array<cplx, 5> unit_coefficients(cplx a, cplx b) {
  const double na = std::norm(a);
  const double nb = std::norm(b);
  const double inv = 1.0 / ((1.0 + na) * (1.0 + nb));
  const cplx c4 = std::conj(a) * std::conj(b);
  const cplx c3 = std::conj(a) * (1.0 - nb) + std::conj(b) * (1.0 - na);
  const cplx c2 = -std::conj(a) * b - a * std::conj(b) + (1.0 - na) * (1.0 - nb);
  const cplx c1 = -a * (1.0 - nb) - b * (1.0 - na);
  const cplx c0 = a * b;
  return {c0 * inv, c1 * inv, c2 * inv, c3 * inv, c4 * inv};
}

bool less_zeta(cplx a, cplx b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

MajoranaQuartic::MajoranaQuartic(double rho, cplx alpha, cplx beta)
    : rho_(rho), alpha_(alpha), beta_(beta), w_(model_for(rho, alpha, beta)) {
  const auto c = unit_coefficients(alpha, beta);
  z_ = rho * c[4];
  v_ = -rho * c[3];
  x_ = rho * c[2].real();
  c0_ = (1.0 + std::conj(alpha) * beta) / (1.0 + std::norm(alpha));
}

MajoranaQuartic MajoranaQuartic::from_roots(double rho, cplx alpha, cplx beta) {
  return MajoranaQuartic(rho, alpha, beta);
}

MajoranaQuartic MajoranaQuartic::from_root_points(double rho, const SpherePoint& alpha,
                                                  const SpherePoint& beta) {
  if (alpha.is_infinity() || beta.is_infinity()) {
    const SpherePoint a = alpha.antipode();
    const SpherePoint b = beta.antipode();
    if (a.is_infinity() || b.is_infinity()) throw Error(ErrorKind::Degenerate, "antipodal roots");
    return MajoranaQuartic(rho, a.zeta(), b.zeta());
  }
  return MajoranaQuartic(rho, alpha.zeta(), beta.zeta());
}

MajoranaQuartic MajoranaQuartic::from_coefficients(cplx z, cplx v, double x) {
  const double scale = std::abs(z) + std::abs(v) + std::abs(x);
  if (!(scale > 0.0) || !std::isfinite(scale)) throw Error(ErrorKind::Degenerate, "vanishing multiplet");
  std::vector<SpherePoint> roots;
  if (std::abs(z) <= 1e-14 * scale) {
    roots.push_back(SpherePoint::from_zeta(0.0));
    roots.push_back(SpherePoint::infinity());
    if (std::abs(v) <= 1e-14 * scale) throw Error(ErrorKind::Degenerate, "quartic has double roots at 0 and infinity");
    for (cplx r : polynomial_roots({std::conj(v), cplx(x), -v})) roots.push_back(SpherePoint::from_zeta(r));
  } else {
    for (cplx r : polynomial_roots({std::conj(z), std::conj(v), cplx(x), -v, z})) {
      roots.push_back(SpherePoint::from_zeta(r));
    }
  }
  // Antipodal pairing: the partition minimizing the summed mismatch |<a|b>|.
  const int parts[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  int best = 0;
  double best_cost = 1e300;
  for (int p = 0; p < 3; ++p) {
    const double cost = chordal_k(roots[parts[p][0]], roots[parts[p][1]]) +
                        chordal_k(roots[parts[p][2]], roots[parts[p][3]]);
    if (cost < best_cost) {
      best_cost = cost;
      best = p;
    }
  }
  auto inner = [&](int i, int j) {
    const SpherePoint& a = roots[parts[best][i]];
    const SpherePoint& b = roots[parts[best][j]];
    if (a.is_infinity()) return b.zeta();
    if (b.is_infinity()) return a.zeta();
    return std::abs(a.zeta()) <= std::abs(b.zeta()) ? a.zeta() : b.zeta();
  };
  cplx alpha = inner(0, 1);
  cplx beta = inner(2, 3);
  if (less_zeta(beta, alpha)) std::swap(alpha, beta);

  const auto u = unit_coefficients(alpha, beta);
  const std::array<cplx, 5> c{std::conj(z), std::conj(v), cplx(x), -v, z};
  double num = 0.0;
  double den = 0.0;
  for (int i = 0; i < 5; ++i) {
    num += (std::conj(u[i]) * c[i]).real();
    den += std::norm(u[i]);
  }
  double rho = num / den;
  if (rho < 0.0) {
    rho = -rho;
    cplx& far = std::abs(alpha) > std::abs(beta) ? alpha : beta;
    far = -1.0 / std::conj(far);
  }
  return MajoranaQuartic(rho, alpha, beta);
}

double MajoranaQuartic::delta_ab() const {
  return fs_distance(SpherePoint::from_zeta(alpha_), SpherePoint::from_zeta(beta_));
}

std::array<cplx, 5> MajoranaQuartic::coefficients() const {
  return {std::conj(z_), std::conj(v_), cplx(x_), -v_, z_};
}

cplx MajoranaQuartic::eta(cplx zeta) const {
  if (zeta == 0.0) throw Error(ErrorKind::Pole, "eta4 has a pole at zeta = 0");
  const cplx iz = 1.0 / zeta;
  return z_ * zeta * zeta - v_ * zeta + x_ + std::conj(v_) * iz + std::conj(z_) * iz * iz;
}

ChordalInvariants chordal_invariants(const MajoranaQuartic& m) {
  const SpherePoint a = SpherePoint::from_zeta(m.alpha());
  const SpherePoint b = SpherePoint::from_zeta(m.beta());
  return {chordal_k(a, b), chordal_k_prime(a, b), fs_distance(a, b)};
}

G2G3 g2_g3(cplx z, cplx v, double x) {
  const double z2 = std::norm(z);
  const double v2 = std::norm(v);
  const double g2 = 4.0 * z2 + v2 + x * x / 3.0;
  const double g3 = 8.0 / 3.0 * z2 * x - v2 * x / 3.0 - 2.0 / 27.0 * x * x * x -
                    2.0 * (z * std::conj(v) * std::conj(v)).real();
  const double disc = 4.0 * g2 * g2 * g2 - 27.0 * g3 * g3;
  return {g2, g3, disc <= 1e-12 * std::max(1.0, g2 * g2 * g2)};
}

G2G3 g2_g3(const MajoranaQuartic& m) { return g2_g3(m.z(), m.v(), m.x()); }

std::optional<cplx> zeta_to_X(const MajoranaQuartic& m, const SpherePoint& zeta) {
  const double e3 = m.weierstrass().e3();
  if (zeta.is_infinity()) return e3 + m.rho() * m.c0();
  const cplx d = zeta.zeta() - m.beta();
  if (d == 0.0) return std::nullopt;
  return e3 + m.rho() * m.c0() * (zeta.zeta() - m.alpha()) / d;
}

SpherePoint X_to_zeta(const MajoranaQuartic& m, cplx X) {
  const cplx nu = (X - m.weierstrass().e3()) / m.rho();
  const cplx d = nu - m.c0();
  if (d == 0.0) return SpherePoint::infinity();
  return SpherePoint::from_zeta((nu * m.beta() - m.c0() * m.alpha()) / d);
}

SpherePoint X_infinity_to_zeta(const MajoranaQuartic& m) { return SpherePoint::from_zeta(m.beta()); }

cplx sqrt_eta(const MajoranaQuartic& m, cplx zeta) {
  const cplx r = std::sqrt(m.eta(zeta));
  if (r == 0.0) return r;
  const SpherePoint p = SpherePoint::from_zeta(zeta);
  const Vec3 n = p.unit_vector();
  const Vec3 ta = unit_tangent(n, SpherePoint::from_zeta(m.alpha()).unit_vector());
  const Vec3 tb = unit_tangent(n, SpherePoint::from_zeta(m.beta()).unit_vector());
  Vec3 bis{ta[0] + tb[0], ta[1] + tb[1], ta[2] + tb[2]};
  if (dot(bis, bis) < 1e-20) bis = cross(n, ta);
  const SpherePoint g = SpherePoint::from_vector(bis);
  const cplx pg = overlap(p.antipode(), g) * overlap(g, p);
  return (r * std::conj(-pg)).real() >= 0.0 ? r : -r;
}

InfinityData infinity_data(const MajoranaQuartic& m) {
  const WeierstrassModel& w = m.weierstrass();
  InfinityData d;
  d.X_inf = w.e3() + m.rho() * m.c0();
  d.Y_inf = m.rho() * m.c0() * (m.alpha() - m.beta()) * std::sqrt(m.z());
  d.X_zero = m.beta() == 0.0 ? cplx(INFINITY, 0.0) : w.e3() + m.rho() * m.c0() * m.alpha() / m.beta();
  d.u_inf = w.abel_jacobi(d.X_inf, d.Y_inf).u();
  d.u_zero = w.lattice().reduce(w.lattice().omega2() - std::conj(d.u_inf));
  d.u_plus = d.u_inf + d.u_zero;
  d.u_minus = d.u_inf - d.u_zero;
  return d;
}

std::optional<CurvePoint> curve_point(const MajoranaQuartic& m, const SpherePoint& zeta) {
  if (zeta.is_infinity()) {
    return CurvePoint{m.weierstrass().e3() + m.rho() * m.c0(),
                      m.rho() * m.c0() * (m.alpha() - m.beta()) * std::sqrt(m.z())};
  }
  const cplx z = zeta.zeta();
  if (z == m.beta()) return std::nullopt;
  if (z == 0.0) {
    const InfinityData d = infinity_data(m);
    return m.weierstrass().curve_point(d.u_zero);
  }
  const cplx X = *zeta_to_X(m, zeta);
  const cplx db = z - m.beta();
  const cplx dX = m.rho() * m.c0() * (m.alpha() - m.beta()) / (db * db);
  return CurvePoint{X, z * sqrt_eta(m, z) * dX};
}

JacobianCoordinate jacobian_coordinate(const MajoranaQuartic& m, const SpherePoint& zeta) {
  const WeierstrassModel& w = m.weierstrass();
  const double scale = std::abs(m.z()) + std::abs(m.v()) + std::abs(m.x());
  bool branch = false;
  if (zeta.is_infinity() || (!zeta.is_infinity() && zeta.zeta() == 0.0)) {
    branch = std::abs(m.z()) <= 1e-12 * scale;
  } else {
    branch = std::abs(m.eta(zeta.zeta())) <= 1e-12 * scale;
  }
  if (!zeta.is_infinity() && zeta.zeta() == m.beta()) return {w.point(0.0), true};
  if (zeta.is_infinity()) return {w.point(infinity_data(m).u_inf), branch};
  if (zeta.zeta() == 0.0) return {w.point(infinity_data(m).u_zero), branch};
  const CurvePoint p = *curve_point(m, zeta);
  return {w.abel_jacobi(p.X, p.Y), branch};
}

double sin_D(const MajoranaQuartic& m, const SpherePoint& zeta) {
  const double da = fs_distance(SpherePoint::from_zeta(m.alpha()), zeta);
  const double db = fs_distance(SpherePoint::from_zeta(m.beta()), zeta);
  return std::sin((kPi - da - db) / 2.0) / m.k();
}

UMinus u_minus_via_F(const MajoranaQuartic& m, const SpherePoint& zeta) {
  double s = sin_D(m, zeta);
  if (std::abs(s) > 1.0 + 1e-12) throw Error(ErrorKind::Geometry, "sin D exceeds one");
  s = std::clamp(s, -1.0, 1.0);
  const WeierstrassModel& w = m.weierstrass();
  const double F = incomplete_F_sin(s, m.k());
  return {w.point(F / std::sqrt(m.rho()) + w.omega_prime()), s, F};
}

CayleyPair cayley_pair(const MajoranaQuartic& m) {
  const double scale = std::abs(m.z()) + std::abs(m.v()) + std::abs(m.x());
  if (std::abs(m.z()) <= 1e-14 * scale) throw Error(ErrorKind::Degenerate, "Cayley form needs z != 0");
  const double az = std::abs(m.z());
  const double sz = std::sqrt(az);
  const cplx wv = m.v() / std::sqrt(m.z());
  CayleyPair c;
  c.x_plus = (m.x() + 6.0 * az) / 3.0;
  c.x_minus = (m.x() - 6.0 * az) / 3.0;
  c.v_plus = wv.imag();
  c.v_minus = wv.real();
  c.A << -c.x_plus, sz * c.v_plus, 0.0,
         sz * c.v_plus, c.x_plus + c.x_minus, sz * c.v_minus,
         0.0, sz * c.v_minus, -c.x_minus;
  c.B = Eigen::Matrix3d::Identity();
  return c;
}

std::array<CurvePoint, 4> four_points(const CayleyPair& c) {
  const double h = (c.x_plus - c.x_minus) / 2.0;
  const cplx ym(c.v_minus * h, 0.0);
  const cplx yp(0.0, c.v_plus * h);
  return {CurvePoint{c.x_minus, ym}, CurvePoint{c.x_minus, -ym}, CurvePoint{c.x_plus, yp},
          CurvePoint{c.x_plus, -yp}};
}

}  // namespace ale
