#pragma once

#include <complex>

namespace ale {

using cplx = std::complex<double>;

// Modulus pair (k, k') with k^2 + k'^2 = 1. Both components are stored so
// that the complementary one never has to be recovered by cancellation.
class EllipticModulus {
 public:
  static EllipticModulus from_k(double k);
  static EllipticModulus from_k_prime(double k_prime);

  double k() const { return k_; }
  double k_prime() const { return kp_; }
  double m() const { return k_ * k_; }
  EllipticModulus complement() const { return EllipticModulus(kp_, k_); }

 private:
  EllipticModulus(double k, double kp) : k_(k), kp_(kp) {}
  double k_;
  double kp_;
};

// Amplitude phi with its sine; F is also written as F(sin phi, k).
class Amplitude {
 public:
  static Amplitude from_phi(double phi);
  static Amplitude from_sin(double sin_phi);

  double phi() const { return phi_; }
  double sin_phi() const { return s_; }
  double cos_phi() const { return c_; }

 private:
  Amplitude(double phi, double s, double c) : phi_(phi), s_(s), c_(c) {}
  double phi_;
  double s_;
  double c_;
};

struct SnCnDn {
  double sn;
  double cn;
  double dn;
};

struct CSnCnDn {
  cplx sn;
  cplx cn;
  cplx dn;
};

double agm(double a, double b);

double carlson_rf(double x, double y, double z);
cplx carlson_rf(cplx x, cplx y, cplx z);

double complete_K(const EllipticModulus& k);
double complete_K(double k);

// F(phi, k). The contract covers |phi| <= pi/2; outside it the quasi-periodic
// extension F(phi + j*pi) = F(phi) + 2jK is used.
double incomplete_F(const Amplitude& amp, const EllipticModulus& k);
double incomplete_F_sin(double sin_phi, double k);

SnCnDn jacobi_sn_cn_dn(double u, const EllipticModulus& k);
CSnCnDn jacobi_sn_cn_dn(cplx u, const EllipticModulus& k);

}  // namespace ale
