#pragma once

#include <array>
#include <complex>
#include <vector>

#include "ale/special_functions.hpp"

namespace ale {

// A point of the Riemann sphere, stored as its spin-1/2 coherent ket
// (1, zeta)/sqrt(1+|zeta|^2); infinity is the ket (0, 1).
class SpherePoint {
 public:
  SpherePoint() = default;
  static SpherePoint from_zeta(cplx zeta);
  static SpherePoint infinity();
  // Unit vector with zeta = 0 at the north pole.
  static SpherePoint from_vector(const std::array<double, 3>& n);

  bool is_infinity() const { return inf_; }
  cplx zeta() const;
  SpherePoint antipode() const;
  const std::array<cplx, 2>& ket() const { return ket_; }
  std::array<double, 3> unit_vector() const;

 private:
  bool inf_ = false;
  cplx zeta_ = 0.0;
  std::array<cplx, 2> ket_{cplx(1.0), cplx(0.0)};
};

// <a|b>
cplx overlap(const SpherePoint& a, const SpherePoint& b);
double chordal_k(const SpherePoint& a, const SpherePoint& b);
double chordal_k_prime(const SpherePoint& a, const SpherePoint& b);
// Fubini-Study distance 2*arccos(k), evaluated as 2*atan2(k', k).
double fs_distance(const SpherePoint& a, const SpherePoint& b);

// Oriented angle at vertex v from the geodesic towards p to the one towards q,
// counterclockwise seen from outside the sphere, in (-pi, pi].
double vertex_angle(const SpherePoint& v, const SpherePoint& p, const SpherePoint& q);

// [z1,z2,z3,z4] = (z1-z3)(z2-z4) / ((z1-z4)(z2-z3)), directly and via overlaps.
cplx cross_ratio(cplx z1, cplx z2, cplx z3, cplx z4);
cplx cross_ratio_coherent(const SpherePoint& z1, const SpherePoint& z2, const SpherePoint& z3,
                          const SpherePoint& z4);

struct AreaPhase {
  double modulus;  // product of consecutive chordal k
  double area;     // in [0, 4 pi)
};
AreaPhase polygon_area_phase(const std::vector<SpherePoint>& pts);

struct LunePhase {
  double phase;    // arg <-1/conj(alpha)|beta><beta|alpha>
  double modulus;  // k' k
};
LunePhase lune_phase(const SpherePoint& alpha, const SpherePoint& beta);

// SU(2) rotation zeta -> (a zeta + b) / (-conj(b) zeta + conj(a)), |a|^2+|b|^2 = 1.
struct SU2 {
  cplx a = 1.0;
  cplx b = 0.0;
  SpherePoint apply(const SpherePoint& p) const;
  // Rotation taking p to zeta = 0.
  static SU2 to_origin(const SpherePoint& p);
  SU2 inverse() const { return {std::conj(a), -b}; }
};

struct SphericalTriangle {
  double a = 0, b = 0, c = 0;  // sides, radians
  double A = 0, B = 0, C = 0;  // opposite angles, radians

  static SphericalTriangle from_vertices(const SpherePoint& pa, const SpherePoint& pb,
                                         const SpherePoint& pc);
  static SphericalTriangle from_sides_angles(double a, double b, double c, double A, double B,
                                             double C);
};

struct LegendreReport {
  double residual;
  double k;
  bool colunar;  // two obtuse sides were traded for their supplements
  bool polar;    // sin a / sin A > 1, the polar triangle was used
  SphericalTriangle used;
};

// |F(A,k)+F(B,k)+F(C,k) - 2K(k)| with k = sin a / sin A, on the polar
// triangle when that ratio exceeds 1.
LegendreReport legendre_addition_check(const SphericalTriangle& t);

}  // namespace ale
