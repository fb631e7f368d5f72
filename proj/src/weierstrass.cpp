#include "ale/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ale/errors.hpp"

namespace ale {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

double frac_dist(double x) { return std::abs(x - std::round(x)); }

}  // namespace

cplx Lattice::reduce(cplx u) const {
  auto [a, b] = frac(u);
  a -= std::floor(a + 0.5);
  b -= std::floor(b + 0.5);
  return from_frac(a, b);
}

double Lattice::distance(cplx u, cplx v) const {
  auto [a, b] = frac(u - v);
  return std::hypot(frac_dist(a), frac_dist(b));
}

WeierstrassModel WeierstrassModel::from_rho_k(double rho, double k) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw Error(ErrorKind::Domain, "rho must be positive");
  if (!(k > 1e-12 && k < 1.0 - 1e-12)) throw Error(ErrorKind::Domain, "modulus must lie strictly inside (0,1)");
  WeierstrassModel w;
  w.rho_ = rho;
  w.mod_ = EllipticModulus::from_k(k);
  const double k2 = k * k;
  w.e_[0] = -rho / 3.0 * (k2 - 2.0);
  w.e_[1] = rho / 3.0 * (2.0 * k2 - 1.0);
  w.e_[2] = -rho / 3.0 * (k2 + 1.0);
  w.g2_ = -(w.e_[0] * w.e_[1] + w.e_[1] * w.e_[2] + w.e_[2] * w.e_[0]);
  w.g3_ = w.e_[0] * w.e_[1] * w.e_[2];
  w.K_ = complete_K(w.mod_);
  w.Kp_ = complete_K(w.mod_.complement());
  const double sr = std::sqrt(rho);
  w.lat_ = Lattice{w.K_ / sr, w.Kp_ / sr};
  w.init_theta();
  return w;
}

WeierstrassModel WeierstrassModel::from_g2_g3(double g2, double g3) {
  const double disc = 4.0 * g2 * g2 * g2 - 27.0 * g3 * g3;
  if (!(g2 > 0.0) || !(disc > 0.0)) throw Error(ErrorKind::Domain, "cubic needs three distinct real roots");
  const double r = 2.0 * std::sqrt(g2 / 3.0);
  const double c = std::clamp(3.0 * std::sqrt(3.0) * g3 / (2.0 * g2 * std::sqrt(g2)), -1.0, 1.0);
  const double th = std::acos(c);
  double e[3];
  for (int j = 0; j < 3; ++j) e[j] = r * std::cos((th - 2.0 * kPi * j) / 3.0);
  std::sort(e, e + 3, [](double x, double y) { return x > y; });
  const double rho = e[0] - e[2];
  WeierstrassModel w = from_rho_k(rho, std::sqrt((e[1] - e[2]) / rho));
  w.g2_ = g2;
  w.g3_ = g3;
  std::copy(e, e + 3, w.e_);
  return w;
}

void WeierstrassModel::init_theta() {
  rotated_ = Kp_ < K_;
  const double sr = std::sqrt(rho_);
  theta_w1_ = (rotated_ ? Kp_ : K_) / sr;
  theta_t_ = (rotated_ ? K_ : Kp_) / sr;
  q_ = std::exp(-kPi * theta_t_ / theta_w1_);
  double s = 0.0;
  double q2n = 1.0;
  for (int n = 1; n < 60; ++n) {
    q2n *= q_ * q_;
    s += n * q2n / (1.0 - q2n);
    if (q2n < 1e-18) break;
  }
  theta_eta1_ = kPi * kPi / (12.0 * theta_w1_) * (1.0 - 24.0 * s);
  const cplx th_eta3 = (theta_eta1_ * cplx(0.0, theta_t_) - kI * (kPi / 2.0)) / theta_w1_;
  if (rotated_) {
    eta1_ = kI * th_eta3;
    eta3_ = -kI * theta_eta1_;
  } else {
    eta1_ = theta_eta1_;
    eta3_ = th_eta3;
  }
}

cplx WeierstrassModel::half_period(int i) const {
  switch (i) {
    case 1: return lat_.omega1();
    case 2: return lat_.omega2();
    case 3: return lat_.omega3();
  }
  throw Error(ErrorKind::Domain, "half-period index must be 1, 2 or 3");
}

cplx WeierstrassModel::eta(int i) const {
  switch (i) {
    case 1: return eta1_;
    case 2: return -eta1_ - eta3_;
    case 3: return eta3_;
  }
  throw Error(ErrorKind::Domain, "half-period index must be 1, 2 or 3");
}

void WeierstrassModel::split(cplx u, cplx& ur, int& m, int& n) const {
  auto [a, b] = lat_.frac(u);
  const double fa = std::floor(a + 0.5);
  const double fb = std::floor(b + 0.5);
  m = static_cast<int>(fa);
  n = static_cast<int>(fb);
  ur = lat_.from_frac(a - fa, b - fb);
}

cplx WeierstrassModel::theta_sigma(cplx u) const {
  const cplx v = kPi * u / (2.0 * theta_w1_);
  cplx prod = std::sin(v);
  const cplx c2v = std::cos(2.0 * v);
  double q2n = 1.0;
  double qn = 1.0;
  for (int n = 1; n < 80; ++n) {
    q2n *= q_ * q_;
    qn *= q_;
    const double d = 1.0 - q2n;
    prod *= (1.0 - 2.0 * q2n * c2v + q2n * q2n) / (d * d);
    if (qn < 1e-18) break;
  }
  return (2.0 * theta_w1_ / kPi) * std::exp(theta_eta1_ * u * u / (2.0 * theta_w1_)) * prod;
}

cplx WeierstrassModel::theta_zeta(cplx u) const {
  const cplx v = kPi * u / (2.0 * theta_w1_);
  cplx s = std::cos(v) / std::sin(v);
  double q2n = 1.0;
  double qn = 1.0;
  for (int n = 1; n < 80; ++n) {
    q2n *= q_ * q_;
    qn *= q_;
    s += 4.0 * q2n / (1.0 - q2n) * std::sin(2.0 * n * v);
    if (qn < 1e-18) break;
  }
  return theta_eta1_ * u / theta_w1_ + (kPi / (2.0 * theta_w1_)) * s;
}

cplx WeierstrassModel::wp(cplx u) const {
  const cplx ur = lat_.reduce(u);
  if (lat_.distance(ur, 0.0) < 1e-12) throw Error(ErrorKind::Pole, "wp evaluated at a lattice point");
  const CSnCnDn f = jacobi_sn_cn_dn(std::sqrt(rho_) * ur, mod_);
  return e_[2] + rho_ / (f.sn * f.sn);
}

cplx WeierstrassModel::wp_prime(cplx u) const {
  const cplx ur = lat_.reduce(u);
  if (lat_.distance(ur, 0.0) < 1e-12) throw Error(ErrorKind::Pole, "wp' evaluated at a lattice point");
  const CSnCnDn f = jacobi_sn_cn_dn(std::sqrt(rho_) * ur, mod_);
  return -2.0 * rho_ * std::sqrt(rho_) * f.cn * f.dn / (f.sn * f.sn * f.sn);
}

CurvePoint WeierstrassModel::curve_point(cplx u) const {
  const cplx ur = lat_.reduce(u);
  if (lat_.distance(ur, 0.0) < 1e-12) throw Error(ErrorKind::Pole, "wp evaluated at a lattice point");
  const CSnCnDn f = jacobi_sn_cn_dn(std::sqrt(rho_) * ur, mod_);
  const cplx s2 = f.sn * f.sn;
  return {e_[2] + rho_ / s2, -rho_ * std::sqrt(rho_) * f.cn * f.dn / (s2 * f.sn)};
}

cplx WeierstrassModel::sigma(cplx u) const {
  cplx ur;
  int m = 0;
  int n = 0;
  split(u, ur, m, n);
  const cplx base = rotated_ ? kI * theta_sigma(-kI * ur) : theta_sigma(ur);
  if (m == 0 && n == 0) return base;
  const cplx lam = double(m) * lat_.omega1() + double(n) * lat_.omega3();
  const cplx el = double(m) * eta1_ + double(n) * eta3_;
  const double sign = ((m + n + m * n) % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(2.0 * el * (ur + lam)) * base;
}

cplx WeierstrassModel::log_sigma(cplx u) const {
  cplx ur;
  int m = 0;
  int n = 0;
  split(u, ur, m, n);
  const cplx base = rotated_ ? kI * theta_sigma(-kI * ur) : theta_sigma(ur);
  if (base == 0.0) throw Error(ErrorKind::Pole, "log sigma at a lattice point");
  const cplx lam = double(m) * lat_.omega1() + double(n) * lat_.omega3();
  const cplx el = double(m) * eta1_ + double(n) * eta3_;
  const int parity = ((m + n + m * n) % 2 + 2) % 2;
  return std::log(base) + 2.0 * el * (ur + lam) + kI * (kPi * parity);
}

cplx WeierstrassModel::zeta_w(cplx u) const {
  cplx ur;
  int m = 0;
  int n = 0;
  split(u, ur, m, n);
  if (lat_.distance(ur, 0.0) < 1e-14) throw Error(ErrorKind::Pole, "zeta evaluated at a lattice point");
  const cplx base = rotated_ ? -kI * theta_zeta(-kI * ur) : theta_zeta(ur);
  return base + 2.0 * (double(m) * eta1_ + double(n) * eta3_);
}

JacobianPoint WeierstrassModel::abel_jacobi(cplx X, cplx Y, double tol) const {
  const double scale = 1.0 + std::abs(X) * std::abs(X) * std::abs(X) + g2_ * std::abs(X) + std::abs(g3_);
  if (std::abs(Y * Y - cubic(X)) > tol * scale) {
    throw Error(ErrorKind::Contract, "point is not on the cubic");
  }
  cplx u = carlson_rf(X - e_[0], X - e_[1], X - e_[2]);
  for (int it = 0; it < 4; ++it) {
    const CurvePoint p = curve_point(u);
    const cplx d = 2.0 * p.Y;
    if (std::abs(d) < 1e-7 * std::sqrt(scale)) break;
    const cplx step = (p.X - X) / d;
    u -= step;
    if (std::abs(step) < 1e-16 * (1.0 + std::abs(u))) break;
  }
  const cplx y = curve_point(u).Y;
  if (std::abs(y - Y) > std::abs(y + Y)) u = -u;
  return point(u);
}

cplx WeierstrassModel::pi_det(cplx u0, int i) const {
  return u0 * eta(i) - half_period(i) * zeta_w(u0);
}

cplx WeierstrassModel::reduce_to_band(cplx u, int i) const {
  if (i == 1 || i == 3) return lat_.reduce(u);
  if (i != 2) throw Error(ErrorKind::Domain, "cycle index must be 1, 2 or 3");
  auto [a, b] = lat_.frac(u);
  b -= std::floor(b - a + 0.5);
  return lat_.from_frac(a, b);
}

WeierstrassModel::PiValue WeierstrassModel::pi_i(cplx X0, cplx Y0, int i) const {
  for (int j = 0; j < 3; ++j) {
    if (std::abs(X0 - e_[j]) < 1e-14 * (1.0 + rho_) && std::abs(Y0) > 1e-10) {
      throw Error(ErrorKind::Contract, "branch point with nonzero Y");
    }
  }
  const cplx u0 = reduce_to_band(abel_jacobi(X0, Y0).u(), i);
  return {pi_det(u0, i), u0};
}

}  // namespace ale
