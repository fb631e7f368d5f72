#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ale/coherent_sphere.hpp"
#include "ale/o4_curve.hpp"

namespace ale {

// chi(zeta) = conj(w)/zeta + t - w zeta. The coherent form is
// sigma <-1/conj(zeta)|gamma><gamma|zeta> up to the common norm factor,
// with sigma = sqrt(t^2 + 4|w|^2).
struct O2Multiplet {
  double t = 0.0;
  cplx w = 0.0;

  static O2Multiplet from_coherent(double sigma, const SpherePoint& gamma);
  double sigma() const;
  SpherePoint gamma() const;  // north pole when sigma = 0
  cplx eval(cplx zeta) const;
};

struct MonopoleConfig {
  std::vector<O2Multiplet> multiplets;
  int n() const { return static_cast<int>(multiplets.size()); }
};

// Roots of zeta^2 (eta4 - chi^2); a sits next to alpha, b next to beta.
struct DeformedRoots {
  SpherePoint a;
  SpherePoint b;
  SpherePoint a_anti() const { return a.antipode(); }
  SpherePoint b_anti() const { return b.antipode(); }
};

// Coefficients (z', v', x') of the deformed multiplet eta4 - chi^2.
struct DeformedCoefficients {
  cplx z;
  cplx v;
  double x;
};
DeformedCoefficients deformed_coefficients(const MajoranaQuartic& m, const O2Multiplet& chi);

DeformedRoots deformed_roots(const MajoranaQuartic& m, const O2Multiplet& chi);

// Residuals of the norm and dihedral equations at zeta for the monopole chi.
struct SphericalResiduals {
  double norm;      // rho sin d_az sin d_bz - sigma^2 sin^2 d_gz
  double dihedral;  // distance of phi_gza + phi_gzb to 2 pi Z
};
SphericalResiduals spherical_residuals(const MajoranaQuartic& m, const O2Multiplet& chi,
                                       const SpherePoint& zeta);

// gamma on the bisecting meridian of the angle alpha-zeta-beta at the two
// supplementary distances solving the norm equation; antipodal pairs are
// adjacent. Empty when the norm equation has no solution.
std::vector<SpherePoint> gamma_from_zeta(const MajoranaQuartic& m, const SpherePoint& zeta,
                                         double sigma);

// u^-_zeta = F(sin D_zeta, k)/sqrt(rho) + omega', the representative used in
// the derivative formulas.
cplx u_minus_representative(const MajoranaQuartic& m, const SpherePoint& zeta);

// 2 m omega + 2 m' omega' - sum_l (u^-_{a_l} + u^-_{b_l}).
cplx dF_dx(const MajoranaQuartic& m, const MonopoleConfig& cfg, int winding, int winding_prime);
inline cplx dF_dx(const MajoranaQuartic& m, const MonopoleConfig& cfg, int winding) {
  return dF_dx(m, cfg, winding, cfg.n());
}

struct EsResidual {
  double residual;       // |S - 2 K nearest_multiple|
  int nearest_multiple;
  double S;              // sum of F(sin D, k) over all deformed roots a_l, b_l
};
EsResidual es_residual(const MajoranaQuartic& m, const MonopoleConfig& cfg);

// The elliptic function of U whose value at U = u_inf enters dF_dv:
// sigma(2m w - U) sigma(2m' w' - U) / (sigma(2m w + U) sigma(2m' w' + U))
// times prod sigma(u_z + U) sigma(u_{-1/conj z} - U) / (sigma(u_z - U) sigma(u_{-1/conj z} + U)),
// returned as a logarithm with unwrapped imaginary part.
cplx log_sigma_quotient(const MajoranaQuartic& m, const MonopoleConfig& cfg, cplx U, int winding,
                        int winding_prime);

// Zeros and poles of the quotient as functions of U (with multiplicity).
struct QuotientDivisor {
  std::vector<cplx> zeros;
  std::vector<cplx> poles;
};
QuotientDivisor quotient_divisor(const MajoranaQuartic& m, const MonopoleConfig& cfg, int winding,
                                 int winding_prime);

// Log(quotient at u_inf)/(2 sqrt z) + (zeta(u+) + zeta(u-)) dF_dx / (2 sqrt z),
// with the principal logarithm of the quotient.
cplx dF_dv(const MajoranaQuartic& m, const MonopoleConfig& cfg, int winding, int winding_prime);
inline cplx dF_dv(const MajoranaQuartic& m, const MonopoleConfig& cfg, int winding) {
  return dF_dv(m, cfg, winding, cfg.n());
}

// Residuals of the Legendre relations: dF_dx, and the phase mismatch of
// exp(2 sqrt z dF_dv) against exp(2 sqrt z u) wrapped to (-pi, pi].
struct LegendreResiduals {
  double fx;
  cplx fv;
  double norm() const;
};
LegendreResiduals legendre_residuals(const MajoranaQuartic& m, const MonopoleConfig& cfg, cplx u,
                                     int winding);

struct LegendreSolution {
  MajoranaQuartic multiplet;
  int winding;  // m in dF_dx, fixed from the seed
  int iterations;
  bool converged;
  std::vector<double> residual_trace;
  LegendreResiduals residuals;
};

struct SolverOptions {
  double tol = 1e-10;
  int max_iterations = 50;
};

// Newton over (v, x) at fixed z and u. Step halving whenever a step does not
// reduce the residual; non-convergence is reported in the solution.
LegendreSolution solve_legendre_relations(const MonopoleConfig& cfg, cplx z, cplx u,
                                          const MajoranaQuartic& seed, const SolverOptions& opt = {});

struct CorrespondenceReport {
  std::vector<cplx> steps;            // u^-_{a_l}, u^-_{b_l} in monopole order
  std::vector<double> start_residuals;  // geometric gap per start
  double max_residual;
  double algebraic_residual;          // lattice distance of the summed steps
  bool closes;
  bool real;
};

// Generalized Poncelet chain on the Cayley pencil of m, one side per deformed
// root, from `starts` pseudo-random points of B drawn from `seed`.
CorrespondenceReport poncelet_correspondence(const MajoranaQuartic& m, const MonopoleConfig& cfg,
                                             int starts = 5, std::uint64_t seed = 1,
                                             double tol = 1e-7);

}  // namespace ale
