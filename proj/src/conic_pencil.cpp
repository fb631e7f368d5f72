#include "ale/conic_pencil.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "ale/errors.hpp"
#include "ale/polynomial.hpp"

namespace ale {

namespace {

constexpr double kPi = std::numbers::pi;

cplx bilinear(const Vec3c& a, const Mat3c& m, const Vec3c& b) { return (a.transpose() * m * b)(0, 0); }

Vec3c cross(const Vec3c& a, const Vec3c& b) {
  return {a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0)};
}

// Both projective roots (s, t) of a s^2 + 2 b s t + c t^2 = 0.
std::array<std::array<cplx, 2>, 2> binary_quadratic(cplx a, cplx b, cplx c) {
  const bool flip = std::abs(a) < std::abs(c);
  if (flip) std::swap(a, c);
  if (a == 0.0) return {{{1.0, 0.0}, {1.0, 0.0}}};
  cplx sq = std::sqrt(b * b - a * c);
  if ((std::conj(b) * sq).real() < 0.0) sq = -sq;
  const cplx q = -(b + sq);
  const cplx r1 = q / a;
  const cplx r2 = q == 0.0 ? cplx(0.0) : c / q;
  if (flip) return {{{1.0, r1}, {1.0, r2}}};
  return {{{r1, 1.0}, {r2, 1.0}}};
}

// Hermitian-orthonormal basis of the lines through p (l with l . p = 0).
std::array<Vec3c, 2> lines_through(const Vec3c& p) {
  const Vec3c e = p.conjugate().normalized();
  int axis = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(e(i)) < std::abs(e(axis))) axis = i;
  }
  Vec3c l1 = Vec3c::Zero();
  l1(axis) = 1.0;
  l1 -= e * e.dot(l1);
  l1.normalize();
  const Vec3c l2 = cross(e, l1).conjugate();
  return {l1, l2};
}

bool lex_less(const ProjPoint& a, const ProjPoint& b) {
  for (int i = 0; i < 3; ++i) {
    for (double d : {a.v()(i).real() - b.v()(i).real(), a.v()(i).imag() - b.v()(i).imag()}) {
      if (std::abs(d) > 1e-9) return d < 0.0;
    }
  }
  return false;
}

cplx det3(const Mat3c& m) { return m.determinant(); }

}  // namespace

ProjPoint::ProjPoint(const Vec3c& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw Error(ErrorKind::Domain, "projective point needs a nonzero finite triple");
  v_ = v / n;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(v_(i)) > 1e-9) {
      v_ *= std::conj(v_(i)) / std::abs(v_(i));
      v_(i) = std::abs(v_(i));
      break;
    }
  }
}

std::optional<std::array<cplx, 2>> ProjPoint::affine_xy() const {
  if (std::abs(v_(2)) < 1e-14) return std::nullopt;
  return std::array<cplx, 2>{v_(0) / v_(2), v_(1) / v_(2)};
}

double proj_distance(const ProjPoint& a, const ProjPoint& b) {
  return (b.v() - a.v() * a.v().dot(b.v())).norm();
}

cplx incidence(const ProjLine& l, const ProjPoint& p) { return (l.v().transpose() * p.v())(0, 0); }

Conic::Conic(const Mat3c& q) : q_((q + q.transpose()) / 2.0), det_(det3(q_)) {
  if (!q_.allFinite()) throw Error(ErrorKind::Domain, "conic matrix is not finite");
  if ((q - q.transpose()).norm() > 1e-12 * (1.0 + q.norm())) {
    throw Error(ErrorKind::Contract, "conic matrix must be symmetric");
  }
}

Conic Conic::circle(double cx, double cy, double r) {
  Mat3c q;
  q << 1.0, 0.0, -cx, 0.0, 1.0, -cy, -cx, -cy, cx * cx + cy * cy - r * r;
  return Conic(q);
}

Mat3c Conic::adjugate() const {
  const Mat3c& m = q_;
  Mat3c a;
  a(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  a(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
  a(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  a(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
  a(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  a(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
  a(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  a(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
  a(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return a;
}

bool Conic::is_smooth(double tol) const {
  const double s = q_.norm();
  return std::abs(det_) > tol * s * s * s;
}

cplx Conic::eval(const ProjPoint& p) const { return bilinear(p.v(), q_, p.v()); }

cplx Conic::eval_dual(const ProjLine& l) const { return bilinear(l.v(), adjugate(), l.v()); }

ProjLine Conic::polar(const ProjPoint& p) const { return ProjLine(q_ * p.v()); }

std::array<ProjLine, 2> tangents_from(const ProjPoint& p, const Conic& c) {
  if (!c.is_smooth()) throw Error(ErrorKind::Degenerate, "tangents need a smooth conic");
  const Mat3c d = c.adjugate();
  const auto [l1, l2] = lines_through(p.v());
  const auto r = binary_quadratic(bilinear(l1, d, l1), bilinear(l1, d, l2), bilinear(l2, d, l2));
  return {ProjLine(r[0][0] * l1 + r[0][1] * l2), ProjLine(r[1][0] * l1 + r[1][1] * l2)};
}

SecondIntersection second_intersection(const ProjLine& l, const Conic& c, const ProjPoint& p,
                                       double tol) {
  const double scale = c.Q().norm();
  if (std::abs(incidence(l, p)) > tol || std::abs(c.eval(p)) > tol * scale) {
    throw Error(ErrorKind::Contract, "point is not on both the line and the conic");
  }
  // Direction on L independent of P.
  const Vec3c dir = cross(l.v(), p.v().conjugate());
  if (dir.norm() < 1e-300) throw Error(ErrorKind::Degenerate, "line and point are degenerate");
  const Vec3c d = dir.normalized();
  const cplx dcd = bilinear(d, c.Q(), d);
  const cplx pcd = bilinear(p.v(), c.Q(), d);
  const Vec3c x = dcd * p.v() - 2.0 * pcd * d;
  if (x.norm() < 1e-14 * scale || std::abs(dcd) < 1e-300) {
    // L lies on a degenerate conic or the second root is P itself
    return {p, true};
  }
  ProjPoint q(x);
  return {q, proj_distance(q, p) < 1e-9};
}

Pencil::Pencil(const Conic& a, const Conic& b) : a_(a), b_(b) {
  const Mat3c& A = a.Q();
  const Mat3c& B = b.Q();
  cubic_.coeffs = {a.det(), (a.adjugate() * B).trace(), (A * b.adjugate()).trace(), b.det()};
  const double scale = std::pow(A.norm() + B.norm(), 3);
  if (std::abs(b.det()) <= 1e-12 * scale) throw Error(ErrorKind::Degenerate, "B must be a smooth conic");
  const cplx c2 = cubic_.coeffs[2] / cubic_.coeffs[3];
  const cplx c1 = cubic_.coeffs[1] / cubic_.coeffs[3];
  const cplx c0 = cubic_.coeffs[0] / cubic_.coeffs[3];
  cubic_.shift = c2 / 3.0;
  cubic_.g2 = -(c1 - c2 * c2 / 3.0);
  cubic_.g3 = -(c0 - c1 * c2 / 3.0 + 2.0 * c2 * c2 * c2 / 27.0);
  std::vector<cplx> r = polynomial_roots({c0, c1, c2, 1.0});
  std::sort(r.begin(), r.end(), [](cplx x, cplx y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  std::copy(r.begin(), r.end(), cubic_.roots.begin());

  const cplx g2 = cubic_.g2;
  const cplx g3 = cubic_.g3;
  const cplx disc = 4.0 * g2 * g2 * g2 - 27.0 * g3 * g3;
  const double dscale = std::max({std::norm(g2) * std::abs(g2), std::norm(g3), 1e-300});
  if (std::abs(disc) <= 1e-10 * dscale) {
    if (std::abs(g2) <= 1e-10 * (1.0 + std::abs(cubic_.shift))) {
      throw Error(ErrorKind::Degenerate, "pencil cubic has a triple root");
    }
    nodal_ = true;
    return;
  }
  const double im_tol = 1e-12 * std::sqrt(dscale) + 1e-300;
  if (std::abs(g2.imag()) <= im_tol && std::abs(g3.imag()) <= im_tol && disc.real() > 0.0) {
    model_ = WeierstrassModel::from_g2_g3(g2.real(), g3.real());
  }

  // Split the singular member farthest from the others into its line pair.
  int best = 0;
  double sep = -1.0;
  for (int i = 0; i < 3; ++i) {
    const double s = std::min(std::abs(r[i] - r[(i + 1) % 3]), std::abs(r[i] - r[(i + 2) % 3]));
    if (s > sep) {
      sep = s;
      best = i;
    }
  }
  const Mat3c M = A + r[best] * B;
  Eigen::JacobiSVD<Mat3c> svd(M, Eigen::ComputeFullV);
  const Vec3c p = svd.matrixV().col(2);
  const Vec3c q1 = svd.matrixV().col(0);
  const Vec3c q2 = svd.matrixV().col(1);
  const auto dirs = binary_quadratic(bilinear(q1, M, q1), bilinear(q1, M, q2), bilinear(q2, M, q2));
  int k = 0;
  for (const auto& st : dirs) {
    const Vec3c d = st[0] * q1 + st[1] * q2;
    const auto mu = binary_quadratic(bilinear(p, B, p), bilinear(p, B, d), bilinear(d, B, d));
    for (const auto& ml : mu) base_[k++] = ProjPoint(ml[0] * p + ml[1] * d);
  }
  std::sort(base_.begin(), base_.end(), lex_less);
  base_ok_ = true;
}

Conic Pencil::member(cplx X) const { return Conic(a_.Q() + X * b_.Q()); }

const WeierstrassModel& Pencil::model() const {
  if (!model_) throw Error(ErrorKind::Domain, "pencil cubic has no real rectangular lattice");
  return *model_;
}

std::array<ProjPoint, 4> Pencil::base_points() const {
  if (!base_ok_) throw Error(ErrorKind::Degenerate, "pencil base points are not in general position");
  return base_;
}

ProjPoint Pencil::param_point(cplx X) const {
  const ProjPoint pe = base_points()[0];
  const Vec3c l = (a_.Q() + X * b_.Q()) * pe.v();
  if (l.norm() < 1e-14 * (a_.Q().norm() + std::abs(X) * b_.Q().norm())) {
    throw Error(ErrorKind::Degenerate, "P_e0 is the vertex of this member");
  }
  return second_intersection(ProjLine(l), b_, pe, 1e-8).point;
}

std::optional<cplx> Pencil::param_of(const ProjPoint& p) const {
  const ProjPoint pe = base_points()[0];
  if (proj_distance(p, pe) < 1e-12) return std::nullopt;
  const Vec3c l = cross(pe.v(), p.v());
  const Vec3c a = cross(a_.Q() * pe.v(), l);
  const Vec3c b = cross(b_.Q() * pe.v(), l);
  return -b.dot(a) / b.squaredNorm();
}

JacobianPoint Pencil::u_of(cplx X) const {
  const WeierstrassModel& w = model();
  const cplx W = X + cubic_.shift;
  return w.abel_jacobi(W, std::sqrt(w.cubic(W)));
}

ProjPoint Pencil::point_at(cplx u) const {
  const WeierstrassModel& w = model();
  if (w.lattice().distance(u, 0.0) < 1e-12) return base_points()[0];
  return param_point(w.wp(u) - cubic_.shift);
}

CayleyCubic cayley_cubic(const Pencil& p) { return p.cubic(); }

IncidencePoint make_incidence(const Pencil& pencil, cplx X0, const ProjPoint& P, int which) {
  const Conic c = pencil.member(X0);
  const double scale = pencil.B().Q().norm();
  if (std::abs(pencil.B().eval(P)) > 1e-8 * scale) throw Error(ErrorKind::Contract, "start point is not on B");
  const auto t = tangents_from(P, c);
  return {P, t[which & 1], X0, proj_distance(t[0], t[1]) < 1e-9};
}

IncidencePoint poncelet_step(const Pencil& pencil, const IncidencePoint& s, double tol) {
  const Conic c = pencil.member(s.X0);
  const auto t = tangents_from(s.P, c);
  const bool branch = proj_distance(t[0], t[1]) < 1e-9;
  const ProjLine& L = proj_distance(t[0], s.L) >= proj_distance(t[1], s.L) ? t[0] : t[1];
  const SecondIntersection si = second_intersection(L, pencil.B(), s.P, tol);
  return {si.point, L, s.X0, branch};
}

Chain poncelet_chain(const Pencil& pencil, cplx X0, const ProjPoint& start, int which, int n) {
  if (n < 1) throw Error(ErrorKind::Domain, "chain length must be positive");
  if (!pencil.member(X0).is_smooth()) throw Error(ErrorKind::Degenerate, "working conic is singular");
  Chain ch;
  ch.states.push_back(make_incidence(pencil, X0, start, which));
  for (int i = 0; i < n; ++i) ch.states.push_back(poncelet_step(pencil, ch.states.back(), 1e-8));
  const IncidencePoint& a = ch.states.front();
  const IncidencePoint& b = ch.states.back();
  ch.residual = std::max(proj_distance(a.P, b.P), proj_distance(a.L, b.L));
  ch.real = std::all_of(ch.states.begin(), ch.states.end(),
                        [](const IncidencePoint& s) { return s.P.is_real(1e-9) && s.L.is_real(1e-9); });
  return ch;
}

ClosureResult closure_algebraic(const Pencil& pencil, cplx X0, int n, double tol) {
  if (n < 1) throw Error(ErrorKind::Domain, "closure order must be positive");
  for (cplx e : pencil.singular_params()) {
    if (std::abs(X0 - e) < 1e-12 * (1.0 + std::abs(e))) {
      throw Error(ErrorKind::Degenerate, "working conic is a singular member of the pencil");
    }
  }
  const cplx W = X0 + pencil.cubic().shift;
  if (pencil.nodal()) {
    // Y^2 = (W - a)^2 (W - b): t = Y/(W - a) and lambda = (t - s)/(t + s) in C*.
    const cplx a = -1.5 * pencil.cubic().g3 / pencil.cubic().g2;
    const cplx b = -2.0 * a;
    const cplx t = std::sqrt(W - b);
    const cplx s = std::sqrt(a - b);
    const cplx lam = (t - s) / (t + s);
    const cplx nu = std::log(lam) / cplx(0.0, 2.0 * kPi);
    const double re = n * nu.real();
    const double res = std::hypot(re - std::round(re), n * nu.imag());
    return {res < tol, res};
  }
  const WeierstrassModel& w = pencil.model();
  const JacobianPoint u0 = w.abel_jacobi(W, std::sqrt(w.cubic(W)));
  const double res = u0.scaled(n).distance(w.point(0.0));
  return {res < tol, res};
}

ClosureResult closure_geometric(const Pencil& pencil, cplx X0, const ProjPoint& start, int n,
                                double tol) {
  const Chain ch = poncelet_chain(pencil, X0, start, 0, n);
  return {ch.residual < tol, ch.residual};
}

IncidencePoint incidence_at(const Pencil& pencil, cplx X0, cplx u0, cplx u) {
  const ProjPoint P = pencil.point_at(u);
  const ProjPoint back = pencil.point_at(u - u0);
  const auto t = tangents_from(P, pencil.member(X0));
  const int pick = std::abs(incidence(t[0], back)) <= std::abs(incidence(t[1], back)) ? 0 : 1;
  return {P, t[pick], X0, proj_distance(t[0], t[1]) < 1e-9};
}

GeneralizedChain generalized_chain_steps(const Pencil& pencil, const std::vector<cplx>& steps,
                                         cplx u_start, double tol) {
  if (steps.empty()) throw Error(ErrorKind::Domain, "chain needs at least one step");
  const WeierstrassModel& w = pencil.model();
  const cplx shift = pencil.cubic().shift;
  GeneralizedChain g;
  g.points.push_back(pencil.point_at(u_start));
  cplx wsum = u_start;
  cplx usum = 0.0;
  for (cplx ui : steps) {
    const cplx X = w.wp(ui) - shift;
    const ProjPoint target = pencil.point_at(wsum + ui);
    const ProjPoint& P = g.points.back();
    const auto t = tangents_from(P, pencil.member(X));
    const int pick = std::abs(incidence(t[0], target)) <= std::abs(incidence(t[1], target)) ? 0 : 1;
    g.points.push_back(second_intersection(t[pick], pencil.B(), P, 1e-8).point);
    wsum += ui;
    usum += ui;
  }
  g.geometric_residual = proj_distance(g.points.front(), g.points.back());
  g.algebraic_residual = w.lattice().distance(usum, 0.0);
  g.closes = g.algebraic_residual < tol;
  g.real = std::all_of(g.points.begin(), g.points.end(), [](const ProjPoint& p) { return p.is_real(1e-9); });
  return g;
}

GeneralizedChain generalized_chain(const Pencil& pencil, const std::vector<cplx>& Xs, cplx u_start,
                                   double tol) {
  if (Xs.empty()) throw Error(ErrorKind::Domain, "chain needs at least one conic");
  std::vector<cplx> steps;
  steps.reserve(Xs.size());
  for (cplx X : Xs) steps.push_back(pencil.u_of(X).u());
  return generalized_chain_steps(pencil, steps, u_start, tol);
}

}  // namespace ale
