#include "ale/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "ale/errors.hpp"

namespace ale {

namespace {

constexpr double kDegenerate = 1e-8;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw Error(ErrorKind::Domain, std::string(what) + " must be finite");
}

// Bulirsch's descending Landen scheme for 0 < k' <= 1.
SnCnDn landen(double u, double kp) {
  std::array<double, 24> em{};
  std::array<double, 24> en{};
  double emc = kp * kp;
  double a = 1.0;
  double dn = 1.0;
  double c = 1.0;
  int l = 0;
  for (int i = 0; i < 24; ++i) {
    l = i;
    em[i] = a;
    emc = std::sqrt(emc);
    en[i] = emc;
    c = 0.5 * (a + emc);
    if (std::abs(a - emc) <= 1e-9 * a) break;
    emc *= a;
    a = c;
  }
  u *= c;
  double sn = std::sin(u);
  double cn = std::cos(u);
  if (sn != 0.0) {
    a = cn / sn;
    c *= a;
    for (int ii = l; ii >= 0; --ii) {
      const double b = em[ii];
      a *= c;
      c *= dn;
      dn = (en[ii] + a) / (b + a);
      a = c / b;
    }
    a = 1.0 / std::sqrt(c * c + 1.0);
    sn = sn >= 0.0 ? a : -a;
    cn = c * sn;
  }
  return {sn, cn, dn};
}

template <typename T>
T rf_impl(T x, T y, T z) {
  const double r = std::numeric_limits<double>::epsilon();
  T a0 = (x + y + z) / 3.0;
  double q = std::pow(3.0 * r, -1.0 / 6.0) *
             std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)});
  T a = a0;
  double scale = 1.0;
  for (int it = 0; it < 100 && q * scale >= std::abs(a); ++it) {
    const T sx = std::sqrt(x);
    const T sy = std::sqrt(y);
    const T sz = std::sqrt(z);
    const T lam = sx * sy + sy * sz + sz * sx;
    x = 0.25 * (x + lam);
    y = 0.25 * (y + lam);
    z = 0.25 * (z + lam);
    a = 0.25 * (a + lam);
    scale *= 0.25;
  }
  const T X = 1.0 - x / a;
  const T Y = 1.0 - y / a;
  const T Z = -(X + Y);
  const T e2 = X * Y - Z * Z;
  const T e3 = X * Y * Z;
  return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / std::sqrt(a);
}

}  // namespace

EllipticModulus EllipticModulus::from_k(double k) {
  if (!(k >= 0.0 && k <= 1.0)) throw Error(ErrorKind::Domain, "modulus k must lie in [0,1]");
  return EllipticModulus(k, std::sqrt((1.0 - k) * (1.0 + k)));
}

EllipticModulus EllipticModulus::from_k_prime(double kp) {
  if (!(kp >= 0.0 && kp <= 1.0)) throw Error(ErrorKind::Domain, "complementary modulus must lie in [0,1]");
  return EllipticModulus(std::sqrt((1.0 - kp) * (1.0 + kp)), kp);
}

Amplitude Amplitude::from_phi(double phi) {
  require_finite(phi, "amplitude");
  return Amplitude(phi, std::sin(phi), std::cos(phi));
}

Amplitude Amplitude::from_sin(double s) {
  if (!(s >= -1.0 && s <= 1.0)) throw Error(ErrorKind::Domain, "sine of amplitude must lie in [-1,1]");
  return Amplitude(std::asin(s), s, std::sqrt((1.0 - s) * (1.0 + s)));
}

double agm(double a, double b) {
  for (int i = 0; i < 64 && std::abs(a - b) > 1e-16 * std::abs(a); ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return 0.5 * (a + b);
}

double carlson_rf(double x, double y, double z) {
  if (x < 0 || y < 0 || z < 0) throw Error(ErrorKind::Domain, "R_F needs nonnegative arguments");
  if ((x == 0) + (y == 0) + (z == 0) > 1) throw Error(ErrorKind::Domain, "R_F diverges with two zero arguments");
  return rf_impl<double>(x, y, z);
}

cplx carlson_rf(cplx x, cplx y, cplx z) { return rf_impl<cplx>(x, y, z); }

double complete_K(const EllipticModulus& k) {
  if (k.k_prime() <= 0.0) throw Error(ErrorKind::Domain, "K(k) diverges at k = 1");
  return std::numbers::pi / (2.0 * agm(1.0, k.k_prime()));
}

double complete_K(double k) {
  if (k < 0.0) throw Error(ErrorKind::Domain, "modulus must be nonnegative");
  if (k >= 1.0) throw Error(ErrorKind::Domain, "K(k) diverges at k = 1");
  return complete_K(EllipticModulus::from_k(k));
}

double incomplete_F(const Amplitude& amp, const EllipticModulus& k) {
  const double phi = amp.phi();
  const double half = std::numbers::pi / 2.0;
  if (std::abs(phi) <= half) {
    const double s = amp.sin_phi();
    if (s == 0.0) return 0.0;
    if (k.k_prime() == 0.0) {
      if (std::abs(s) >= 1.0) throw Error(ErrorKind::Domain, "F(pi/2, 1) diverges");
      return std::atanh(s);
    }
    const double c = amp.cos_phi();
    const double d = (1.0 - k.k() * s) * (1.0 + k.k() * s);
    return s * carlson_rf(c * c, d, 1.0);
  }
  const double j = std::round(phi / std::numbers::pi);
  const double rest = phi - j * std::numbers::pi;
  return incomplete_F(Amplitude::from_phi(rest), k) + 2.0 * j * complete_K(k);
}

double incomplete_F_sin(double sin_phi, double k) {
  return incomplete_F(Amplitude::from_sin(sin_phi), EllipticModulus::from_k(k));
}

SnCnDn jacobi_sn_cn_dn(double u, const EllipticModulus& k) {
  require_finite(u, "argument");
  if (k.k() < kDegenerate) {
    return {std::sin(u), std::cos(u), 1.0 - 0.5 * k.m() * std::sin(u) * std::sin(u)};
  }
  if (k.k_prime() < kDegenerate) {
    const double sech = 1.0 / std::cosh(u);
    return {std::tanh(u), sech, sech};
  }
  const double K = complete_K(k);
  const double period = 4.0 * K;
  const double ur = u - period * std::round(u / period);
  return landen(ur, k.k_prime());
}

CSnCnDn jacobi_sn_cn_dn(cplx u, const EllipticModulus& k) {
  const SnCnDn a = jacobi_sn_cn_dn(u.real(), k);
  if (u.imag() == 0.0) return {a.sn, a.cn, a.dn};
  const SnCnDn b = jacobi_sn_cn_dn(u.imag(), k.complement());
  const double den = b.cn * b.cn + k.m() * a.sn * a.sn * b.sn * b.sn;
  if (den == 0.0) throw Error(ErrorKind::Pole, "sn/cn/dn pole");
  return {cplx(a.sn * b.dn, a.cn * a.dn * b.sn * b.cn) / den,
          cplx(a.cn * b.cn, -a.sn * a.dn * b.sn * b.dn) / den,
          cplx(a.dn * b.cn * b.dn, -k.m() * a.sn * a.cn * b.sn) / den};
}

}  // namespace ale
