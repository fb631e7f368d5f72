#include "ale/coherent_sphere.hpp"

#include <cmath>
#include <numbers>

#include "ale/errors.hpp"

namespace ale {

namespace {

constexpr double kPi = std::numbers::pi;

using Vec3 = std::array<double, 3>;

double dot(const Vec3& x, const Vec3& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }

Vec3 cross(const Vec3& x, const Vec3& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

Vec3 tangent(const Vec3& n, const Vec3& p) {
  const double d = dot(n, p);
  return {p[0] - d * n[0], p[1] - d * n[1], p[2] - d * n[2]};
}

SpherePoint from_homogeneous(cplx down, cplx up) {
  if (std::abs(down) <= 1e-300 * std::abs(up)) return SpherePoint::infinity();
  return SpherePoint::from_zeta(up / down);
}

}  // namespace

SpherePoint SpherePoint::from_zeta(cplx zeta) {
  if (!std::isfinite(zeta.real()) || !std::isfinite(zeta.imag())) return infinity();
  SpherePoint p;
  p.zeta_ = zeta;
  const double n = std::sqrt(1.0 + std::norm(zeta));
  p.ket_ = {cplx(1.0 / n), zeta / n};
  return p;
}

SpherePoint SpherePoint::infinity() {
  SpherePoint p;
  p.inf_ = true;
  p.ket_ = {cplx(0.0), cplx(1.0)};
  return p;
}

SpherePoint SpherePoint::from_vector(const Vec3& v) {
  const double len = std::sqrt(dot(v, v));
  if (!(len > 0.0)) throw Error(ErrorKind::Domain, "zero vector has no direction");
  const double x = v[0] / len;
  const double y = v[1] / len;
  const double z = v[2] / len;
  if (z >= 0.0) return from_zeta(cplx(x, y) / (1.0 + z));
  const cplx d(x, -y);
  if (std::abs(d) == 0.0) return infinity();
  return from_zeta((1.0 - z) / d);
}

cplx SpherePoint::zeta() const {
  if (inf_) throw Error(ErrorKind::Domain, "point at infinity has no finite coordinate");
  return zeta_;
}

SpherePoint SpherePoint::antipode() const {
  if (inf_) return from_zeta(0.0);
  if (zeta_ == 0.0) return infinity();
  return from_zeta(-1.0 / std::conj(zeta_));
}

Vec3 SpherePoint::unit_vector() const {
  if (inf_) return {0.0, 0.0, -1.0};
  const double r2 = std::norm(zeta_);
  const double d = 1.0 + r2;
  return {2.0 * zeta_.real() / d, 2.0 * zeta_.imag() / d, (1.0 - r2) / d};
}

cplx overlap(const SpherePoint& a, const SpherePoint& b) {
  return std::conj(a.ket()[0]) * b.ket()[0] + std::conj(a.ket()[1]) * b.ket()[1];
}

double chordal_k(const SpherePoint& a, const SpherePoint& b) { return std::abs(overlap(a, b)); }

double chordal_k_prime(const SpherePoint& a, const SpherePoint& b) {
  return std::abs(a.ket()[0] * b.ket()[1] - a.ket()[1] * b.ket()[0]);
}

double fs_distance(const SpherePoint& a, const SpherePoint& b) {
  return 2.0 * std::atan2(chordal_k_prime(a, b), chordal_k(a, b));
}

double vertex_angle(const SpherePoint& v, const SpherePoint& p, const SpherePoint& q) {
  const Vec3 n = v.unit_vector();
  const Vec3 tp = tangent(n, p.unit_vector());
  const Vec3 tq = tangent(n, q.unit_vector());
  return std::atan2(dot(n, cross(tp, tq)), dot(tp, tq));
}

cplx cross_ratio(cplx z1, cplx z2, cplx z3, cplx z4) {
  return (z1 - z3) * (z2 - z4) / ((z1 - z4) * (z2 - z3));
}

cplx cross_ratio_coherent(const SpherePoint& z1, const SpherePoint& z2, const SpherePoint& z3,
                          const SpherePoint& z4) {
  const SpherePoint a1 = z1.antipode();
  const SpherePoint a2 = z2.antipode();
  return overlap(a1, z3) * overlap(a2, z4) / (overlap(a1, z4) * overlap(a2, z3));
}

AreaPhase polygon_area_phase(const std::vector<SpherePoint>& pts) {
  if (pts.size() < 3) throw Error(ErrorKind::Domain, "polygon needs at least three vertices");
  cplx prod = 1.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const cplx o = overlap(pts[i], pts[(i + 1) % pts.size()]);
    if (std::abs(o) < 1e-14) throw Error(ErrorKind::Geometry, "consecutive vertices are antipodal");
    prod *= o;
  }
  double area = 2.0 * std::arg(prod);
  if (area < 0.0) area += 4.0 * kPi;
  return {std::abs(prod), area};
}

LunePhase lune_phase(const SpherePoint& alpha, const SpherePoint& beta) {
  const cplx p = overlap(alpha.antipode(), beta) * overlap(beta, alpha);
  if (std::abs(p) < 1e-14) throw Error(ErrorKind::Geometry, "degenerate lune");
  return {std::arg(p), std::abs(p)};
}

SpherePoint SU2::apply(const SpherePoint& p) const {
  const auto& k = p.ket();
  const cplx down = std::conj(a) * k[0] - std::conj(b) * k[1];
  const cplx up = b * k[0] + a * k[1];
  return from_homogeneous(down, up);
}

SU2 SU2::to_origin(const SpherePoint& p) {
  if (p.is_infinity()) return {0.0, 1.0};
  const double n = std::sqrt(1.0 + std::norm(p.zeta()));
  return {1.0 / n, -p.zeta() / n};
}

SphericalTriangle SphericalTriangle::from_vertices(const SpherePoint& pa, const SpherePoint& pb,
                                                   const SpherePoint& pc) {
  SphericalTriangle t;
  t.a = fs_distance(pb, pc);
  t.b = fs_distance(pa, pc);
  t.c = fs_distance(pa, pb);
  for (double s : {t.a, t.b, t.c}) {
    if (s < 1e-12 || s > kPi - 1e-12) throw Error(ErrorKind::Geometry, "vertices coincide or are antipodal");
  }
  t.A = std::abs(vertex_angle(pa, pb, pc));
  t.B = std::abs(vertex_angle(pb, pc, pa));
  t.C = std::abs(vertex_angle(pc, pa, pb));
  return t;
}

SphericalTriangle SphericalTriangle::from_sides_angles(double a, double b, double c, double A,
                                                       double B, double C) {
  for (double x : {a, b, c, A, B, C}) {
    if (!(x >= 0.0 && x <= kPi)) throw Error(ErrorKind::Geometry, "sides and angles must lie in [0, pi]");
  }
  return {a, b, c, A, B, C};
}

LegendreReport legendre_addition_check(const SphericalTriangle& t) {
  double ks[3];
  {
    const double sides[3] = {t.a, t.b, t.c};
    const double angles[3] = {t.A, t.B, t.C};
    for (int i = 0; i < 3; ++i) {
      const double sA = std::sin(angles[i]);
      if (sA <= 1e-300) throw Error(ErrorKind::Geometry, "degenerate triangle angle");
      ks[i] = std::sin(sides[i]) / sA;
    }
  }
  double k = ks[0];
  for (int i = 1; i < 3; ++i) {
    if (std::abs(ks[i] - k) > 1e-10 * std::max(1.0, k)) {
      throw Error(ErrorKind::Geometry, "sine-theorem ratios disagree");
    }
  }
  // The polar triangle has the reciprocal ratio.
  SphericalTriangle p = t;
  const bool polar = k > 1.0;
  if (polar) {
    p = {kPi - t.A, kPi - t.B, kPi - t.C, kPi - t.a, kPi - t.b, kPi - t.c};
    k = 1.0 / k;
  }
  if (!(k > 0.0 && k < 1.0)) throw Error(ErrorKind::Domain, "sine-theorem ratio is not a modulus in (0,1)");
  const double sides[3] = {p.a, p.b, p.c};

  SphericalTriangle u = p;
  int obtuse = 0;
  for (double s : sides) obtuse += s > kPi / 2.0;
  bool colunar = false;
  if (obtuse == 2) {
    colunar = true;
    double* us[3] = {&u.a, &u.b, &u.c};
    double* ua[3] = {&u.A, &u.B, &u.C};
    for (int i = 0; i < 3; ++i) {
      if (sides[i] > kPi / 2.0) {
        *us[i] = kPi - *us[i];
        *ua[i] = kPi - *ua[i];
      }
    }
  } else if (obtuse != 0) {
    throw Error(ErrorKind::Geometry, "triangle has an odd number of obtuse sides");
  }
  const EllipticModulus mod = EllipticModulus::from_k(k);
  const double sum = incomplete_F(Amplitude::from_phi(u.A), mod) +
                     incomplete_F(Amplitude::from_phi(u.B), mod) +
                     incomplete_F(Amplitude::from_phi(u.C), mod);
  return {std::abs(sum - 2.0 * complete_K(mod)), k, colunar, polar, u};
}

}  // namespace ale
