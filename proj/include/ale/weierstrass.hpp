#pragma once

#include <complex>
#include <utility>

#include "ale/special_functions.hpp"

namespace ale {

// Rectangular lattice 2w1*Z + 2w3*Z with w1 real and w3 = i*w3_im.
struct Lattice {
  double w1 = 1.0;
  double w3_im = 1.0;

  cplx omega1() const { return {w1, 0.0}; }
  cplx omega3() const { return {0.0, w3_im}; }
  cplx omega2() const { return -omega1() - omega3(); }

  // Fractional coordinates (a, b) with u = 2*w1*a + 2*w3*b.
  std::pair<double, double> frac(cplx u) const {
    return {u.real() / (2.0 * w1), u.imag() / (2.0 * w3_im)};
  }
  cplx from_frac(double a, double b) const { return {2.0 * w1 * a, 2.0 * w3_im * b}; }

  // Representative with both fractional coordinates in [-1/2, 1/2).
  cplx reduce(cplx u) const;

  // Scale-free distance on C/Lambda, measured in fractional coordinates.
  double distance(cplx u, cplx v) const;
};

class JacobianPoint {
 public:
  JacobianPoint(cplx u, const Lattice& lat) : lat_(lat), u_(lat.reduce(u)) {}

  cplx u() const { return u_; }
  const Lattice& lattice() const { return lat_; }

  JacobianPoint operator+(const JacobianPoint& o) const { return {u_ + o.u_, lat_}; }
  JacobianPoint operator-(const JacobianPoint& o) const { return {u_ - o.u_, lat_}; }
  JacobianPoint operator-() const { return {-u_, lat_}; }
  JacobianPoint scaled(int n) const { return {static_cast<double>(n) * u_, lat_}; }
  double distance(const JacobianPoint& o) const { return lat_.distance(u_, o.u_); }

 private:
  Lattice lat_;
  cplx u_;
};

struct CurvePoint {
  cplx X;
  cplx Y;
};

// The cubic Y^2 = X^3 - g2 X - g3 with X = wp(u; 4g2, 4g3) and 2Y = wp'(u).
class WeierstrassModel {
 public:
  static WeierstrassModel from_rho_k(double rho, double k);
  static WeierstrassModel from_g2_g3(double g2, double g3);

  double rho() const { return rho_; }
  const EllipticModulus& modulus() const { return mod_; }
  double k() const { return mod_.k(); }
  double g2() const { return g2_; }
  double g3() const { return g3_; }
  double e1() const { return e_[0]; }
  double e2() const { return e_[1]; }
  double e3() const { return e_[2]; }
  double e(int i) const { return e_[i - 1]; }
  double K() const { return K_; }
  double K_prime() const { return Kp_; }

  double omega() const { return lat_.w1; }
  cplx omega_prime() const { return lat_.omega3(); }
  cplx half_period(int i) const;
  cplx eta(int i) const;
  const Lattice& lattice() const { return lat_; }
  JacobianPoint point(cplx u) const { return {u, lat_}; }

  cplx cubic(cplx X) const { return X * X * X - g2_ * X - g3_; }

  cplx wp(cplx u) const;
  cplx wp_prime(cplx u) const;
  CurvePoint curve_point(cplx u) const;
  CurvePoint wp(const JacobianPoint& p) const { return curve_point(p.u()); }

  cplx sigma(cplx u) const;
  // log sigma with the branch fixed by the principal log in the centered
  // cell plus the exact quasi-periodicity exponent.
  cplx log_sigma(cplx u) const;
  cplx zeta_w(cplx u) const;

  JacobianPoint abel_jacobi(cplx X, cplx Y, double tol = 1e-8) const;

  // The determinant u0*eta_i - omega_i*zeta(u0) for the given representative.
  cplx pi_det(cplx u0, int i) const;
  // Representative of u in the strip complementary to the cycle Gamma_i.
  cplx reduce_to_band(cplx u, int i) const;

  struct PiValue {
    cplx value;
    cplx u0;  // representative used, sheet fixed by the given Y0
  };
  PiValue pi_i(cplx X0, cplx Y0, int i) const;

 private:
  WeierstrassModel() = default;
  void init_theta();

  double rho_ = 1.0;
  EllipticModulus mod_ = EllipticModulus::from_k(0.5);
  double g2_ = 0.0;
  double g3_ = 0.0;
  double e_[3] = {0, 0, 0};
  double K_ = 0.0;
  double Kp_ = 0.0;
  Lattice lat_;
  bool rotated_ = false;
  double theta_w1_ = 1.0;
  double theta_t_ = 1.0;
  double q_ = 0.0;
  double theta_eta1_ = 0.0;
  cplx eta1_;
  cplx eta3_;

  cplx theta_sigma(cplx u) const;
  cplx theta_zeta(cplx u) const;
  void split(cplx u, cplx& ur, int& m, int& n) const;
};

}  // namespace ale
