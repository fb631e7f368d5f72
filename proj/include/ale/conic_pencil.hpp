#pragma once

#include <array>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "ale/weierstrass.hpp"

namespace ale {

using Vec3c = Eigen::Vector3cd;
using Mat3c = Eigen::Matrix3cd;

// Homogeneous triple, unit norm, first non-negligible component real positive.
class ProjPoint {
 public:
  ProjPoint() = default;
  explicit ProjPoint(const Vec3c& v);
  static ProjPoint affine(double x, double y) { return ProjPoint(Vec3c(x, y, 1.0)); }
  const Vec3c& v() const { return v_; }
  bool is_real(double tol = 1e-12) const { return v_.imag().norm() <= tol; }
  // Affine chart w = 1; absent for points at infinity.
  std::optional<std::array<cplx, 2>> affine_xy() const;

 private:
  Vec3c v_ = Vec3c(0.0, 0.0, 1.0);
};

using ProjLine = ProjPoint;

// sqrt(1 - |<a,b>|^2), zero iff a and b are the same projective point.
double proj_distance(const ProjPoint& a, const ProjPoint& b);

// (y, x) with the bilinear pairing.
cplx incidence(const ProjLine& l, const ProjPoint& p);

class Conic {
 public:
  Conic() = default;
  explicit Conic(const Mat3c& q);
  static Conic circle(double cx, double cy, double r);
  const Mat3c& Q() const { return q_; }
  cplx det() const { return det_; }
  Mat3c adjugate() const;
  bool is_smooth(double tol = 1e-12) const;
  cplx eval(const ProjPoint& p) const;      // (x, Q x)
  cplx eval_dual(const ProjLine& l) const;  // (l, adj(Q) l)
  ProjLine polar(const ProjPoint& p) const;

 private:
  Mat3c q_ = Mat3c::Identity();
  cplx det_ = 1.0;
};

std::array<ProjLine, 2> tangents_from(const ProjPoint& p, const Conic& c);

struct SecondIntersection {
  ProjPoint point;
  bool tangent;  // L touches C at P
};
SecondIntersection second_intersection(const ProjLine& l, const Conic& c, const ProjPoint& p,
                                       double tol = 1e-10);

// Cubic det(A + X B) made monic and depressed: W = X + shift.
struct CayleyCubic {
  std::array<cplx, 4> coeffs;  // det(A + X B), index = power of X
  cplx shift;
  cplx g2;
  cplx g3;
  std::array<cplx, 3> roots;  // singular parameters in the pencil variable X
};

class Pencil {
 public:
  Pencil(const Conic& a, const Conic& b);
  const Conic& A() const { return a_; }
  const Conic& B() const { return b_; }
  Conic member(cplx X) const;
  const CayleyCubic& cubic() const { return cubic_; }
  const std::array<cplx, 3>& singular_params() const { return cubic_.roots; }
  // Two of the singular parameters coincide (tangential contact, as for
  // concentric circles); the group is then C* instead of a torus.
  bool nodal() const { return nodal_; }
  bool has_torus() const { return model_.has_value(); }
  const WeierstrassModel& model() const;

  // The four points of A and B, ordered lexicographically; the first is P_{e0}.
  std::array<ProjPoint, 4> base_points() const;
  // Second intersection with B of the tangent at P_{e0} to C_X.
  ProjPoint param_point(cplx X) const;
  // Inverse of param_point; absent for P_{e0} itself.
  std::optional<cplx> param_of(const ProjPoint& p) const;

  // Jacobian coordinate of a pencil member: wp(u) = X + shift.
  JacobianPoint u_of(cplx X) const;
  ProjPoint point_at(cplx u) const;  // P_{wp(u)}

 private:
  Conic a_;
  Conic b_;
  CayleyCubic cubic_;
  bool nodal_ = false;
  std::optional<WeierstrassModel> model_;
  std::array<ProjPoint, 4> base_;
  bool base_ok_ = false;
};

CayleyCubic cayley_cubic(const Pencil& p);

struct IncidencePoint {
  ProjPoint P;
  ProjLine L;
  cplx X0;
  bool branch = false;  // both tangents from P coincide
};

// The tangent through P is chosen by index among tangents_from.
IncidencePoint make_incidence(const Pencil& pencil, cplx X0, const ProjPoint& P, int which);
// j = i1 o i2: swap to the other tangent, then to the other point of B on it.
IncidencePoint poncelet_step(const Pencil& pencil, const IncidencePoint& s, double tol = 1e-10);

struct Chain {
  std::vector<IncidencePoint> states;  // n + 1 states, states[0] is the start
  double residual;                     // projective distance of the end state to the start
  bool real;
};
Chain poncelet_chain(const Pencil& pencil, cplx X0, const ProjPoint& start, int which, int n);

struct ClosureResult {
  bool closes;
  double residual;
};
// n u0 against the lattice (or the unit circle for nodal pencils), wp(u0) = X0.
ClosureResult closure_algebraic(const Pencil& pencil, cplx X0, int n, double tol = 1e-8);
ClosureResult closure_geometric(const Pencil& pencil, cplx X0, const ProjPoint& start, int n,
                                double tol = 1e-8);

// Incidence point at Jacobian coordinate u: P_{wp(u)} with the tangent
// pointing back to P_{wp(u - u0)}, so that stepping moves u -> u + u0.
IncidencePoint incidence_at(const Pencil& pencil, cplx X0, cplx u0, cplx u);

struct GeneralizedChain {
  std::vector<ProjPoint> points;
  double geometric_residual;
  double algebraic_residual;  // lattice distance of sum u_i to zero
  bool closes;
  bool real;
};
// Chain over C_{X_i}; at every step the tangent is the one leading to
// P_{wp(w + u_i)}, u_i the Abel-Jacobi image of (X_i + shift, +sqrt(cubic)).
GeneralizedChain generalized_chain(const Pencil& pencil, const std::vector<cplx>& Xs, cplx u_start,
                                   double tol = 1e-8);
// The same chain driven by Jacobian steps u_i directly, on C_{wp(u_i) - shift}.
// Needed when the sign of u_i matters, which the conic alone does not fix.
GeneralizedChain generalized_chain_steps(const Pencil& pencil, const std::vector<cplx>& steps,
                                         cplx u_start, double tol = 1e-8);

}  // namespace ale
