#pragma once

#include <array>
#include <optional>

#include <Eigen/Core>

#include "ale/coherent_sphere.hpp"
#include "ale/weierstrass.hpp"

namespace ale {

// eta4(zeta) = z zeta^2 - v zeta + x + conj(v)/zeta + conj(z)/zeta^2
//            = rho/zeta^2 (zeta-a)(conj(a) zeta+1)(zeta-b)(conj(b) zeta+1) / N.
class MajoranaQuartic {
 public:
  static MajoranaQuartic from_roots(double rho, cplx alpha, cplx beta);
  // Infinite roots are traded for their antipodes (both at once keeps rho > 0).
  static MajoranaQuartic from_root_points(double rho, const SpherePoint& alpha,
                                          const SpherePoint& beta);
  // Roots are recovered by a quartic solve and paired antipodally. The member
  // of each pair with |zeta| <= 1 is preferred, pairs are ordered by that
  // member, and beta is swapped to its antipode if that is needed for rho > 0.
  static MajoranaQuartic from_coefficients(cplx z, cplx v, double x);

  cplx z() const { return z_; }
  cplx v() const { return v_; }
  double x() const { return x_; }
  double rho() const { return rho_; }
  cplx alpha() const { return alpha_; }
  cplx beta() const { return beta_; }
  double k() const { return w_.k(); }
  double k_prime() const { return w_.modulus().k_prime(); }
  double delta_ab() const;
  cplx c0() const { return c0_; }
  const WeierstrassModel& weierstrass() const { return w_; }

  // Coefficients of zeta^2 eta4, index = power of zeta.
  std::array<cplx, 5> coefficients() const;
  cplx eta(cplx zeta) const;

 private:
  MajoranaQuartic(double rho, cplx alpha, cplx beta);
  double rho_;
  cplx alpha_;
  cplx beta_;
  cplx z_;
  cplx v_;
  double x_;
  cplx c0_;
  WeierstrassModel w_;
};

struct ChordalInvariants {
  double k;
  double k_prime;
  double delta_ab;
};
ChordalInvariants chordal_invariants(const MajoranaQuartic& m);

struct G2G3 {
  double g2;
  double g3;
  bool degenerate;  // the cubic has a repeated root
};
// The Majorana-coefficient formulas.
G2G3 g2_g3(cplx z, cplx v, double x);
G2G3 g2_g3(const MajoranaQuartic& m);

// Image of a sphere point on the cubic. X is absent at zeta = beta.
std::optional<cplx> zeta_to_X(const MajoranaQuartic& m, const SpherePoint& zeta);
SpherePoint X_to_zeta(const MajoranaQuartic& m, cplx X);
SpherePoint X_infinity_to_zeta(const MajoranaQuartic& m);

// sqrt(eta4) on the sheet cut along the geodesic segments [alpha, beta] and
// [-1/conj(alpha), -1/conj(beta)]: its phase is opposite to that of
// <-1/conj(zeta)|g><g|zeta> for g on the internal bisector of the angle
// alpha-zeta-beta.
cplx sqrt_eta(const MajoranaQuartic& m, cplx zeta);

// Curve point over zeta using the sheet above; zeta = infinity uses
// Y = rho c0 (alpha - beta) sqrt(z) with the principal root.
std::optional<CurvePoint> curve_point(const MajoranaQuartic& m, const SpherePoint& zeta);

struct JacobianCoordinate {
  JacobianPoint u;
  bool branch_point;
};
// u at zeta = 0 follows from u_inf through the real structure.
JacobianCoordinate jacobian_coordinate(const MajoranaQuartic& m, const SpherePoint& zeta);

struct UMinus {
  JacobianPoint u;
  double sin_D;
  double F;
};
UMinus u_minus_via_F(const MajoranaQuartic& m, const SpherePoint& zeta);

// sin D_zeta = sin((pi - d_az - d_bz)/2) / k.
double sin_D(const MajoranaQuartic& m, const SpherePoint& zeta);

struct InfinityData {
  cplx X_inf;
  cplx Y_inf;
  cplx X_zero;
  cplx u_inf;    // Abel-Jacobi image of (X_inf, Y_inf), centered cell
  cplx u_zero;   // omega_2 - conj(u_inf)
  cplx u_plus;   // u_inf + u_zero, not reduced, so that u_plus + u_minus = 2 u_inf
  cplx u_minus;  // u_inf - u_zero
};
InfinityData infinity_data(const MajoranaQuartic& m);

struct CayleyPair {
  Eigen::Matrix3d A;
  Eigen::Matrix3d B;
  double x_plus;
  double x_minus;
  double v_plus;
  double v_minus;
};
CayleyPair cayley_pair(const MajoranaQuartic& m);

// (x-, v-(x+-x-)/2), (x+, i v+(x+-x-)/2) and their images under Y -> -Y.
std::array<CurvePoint, 4> four_points(const CayleyPair& c);

}  // namespace ale
