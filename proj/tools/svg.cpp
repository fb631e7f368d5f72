#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

namespace ale::cli {

namespace {

std::string num(double x) {
  if (std::abs(x) < 5e-10) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

struct Box {
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
  bool empty = true;
  void add(double x, double y) {
    if (empty) {
      x0 = x1 = x;
      y0 = y1 = y;
      empty = false;
      return;
    }
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
};

const char* kHeader =
    "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"";

}  // namespace

std::optional<SvgEllipse> ellipse_of(const Conic& c) {
  const Mat3c& q = c.Q();
  if (q.imag().norm() > 1e-12 * q.norm()) return std::nullopt;
  const Eigen::Matrix3d r = q.real();
  const Eigen::Matrix2d m = r.topLeftCorner<2, 2>();
  const Eigen::Vector2d b = r.topRightCorner<2, 1>();
  if (std::abs(m.determinant()) < 1e-14 * m.squaredNorm()) return std::nullopt;
  const Eigen::Vector2d center = -m.lu().solve(b);
  const double f = r(2, 2) + b.dot(center);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(m);
  const Eigen::Vector2d lam = es.eigenvalues();
  if (!(lam(0) * lam(1) > 0.0) || !(f * lam(0) < 0.0)) return std::nullopt;
  SvgEllipse e;
  e.cx = center(0);
  e.cy = center(1);
  e.rx = std::sqrt(-f / lam(0));
  e.ry = std::sqrt(-f / lam(1));
  const Eigen::Vector2d v = es.eigenvectors().col(0);
  e.angle_deg = std::atan2(v(1), v(0)) * 180.0 / std::numbers::pi;
  if (e.angle_deg > 90.0) e.angle_deg -= 180.0;
  if (e.angle_deg <= -90.0) e.angle_deg += 180.0;
  if (std::abs(e.rx - e.ry) <= 1e-12 * e.rx) e.angle_deg = 0.0;
  return e;
}

std::string emit_svg(const Scene& s) {
  Box box;
  for (const SvgEllipse& e : s.ellipses) {
    const double t = e.angle_deg * std::numbers::pi / 180.0;
    const double hx = std::hypot(e.rx * std::cos(t), e.ry * std::sin(t));
    const double hy = std::hypot(e.rx * std::sin(t), e.ry * std::cos(t));
    box.add(e.cx - hx, e.cy - hy);
    box.add(e.cx + hx, e.cy + hy);
  }
  for (const auto& p : s.chain) box.add(p[0], p[1]);

  if (box.empty) return std::string(kHeader) + " width=\"1\" height=\"1\" viewBox=\"0 0 1 1\"/>\n";

  const double size = std::max({box.x1 - box.x0, box.y1 - box.y0, 1e-9});
  const double margin = 0.05 * size;
  const double vx = box.x0 - margin;
  const double vy = -box.y1 - margin;
  const double vw = box.x1 - box.x0 + 2.0 * margin;
  const double vh = box.y1 - box.y0 + 2.0 * margin;
  const double stroke = size / 400.0;

  std::string out = kHeader;
  out += " width=\"" + num(400.0 * vw / size) + "\" height=\"" + num(400.0 * vh / size) + "\" viewBox=\"" +
         num(vx) + " " + num(vy) + " " + num(vw) + " " + num(vh) + "\">\n";
  out += "<g fill=\"none\" stroke-width=\"" + num(stroke) + "\">\n";
  for (const SvgEllipse& e : s.ellipses) {
    out += "<ellipse cx=\"" + num(e.cx) + "\" cy=\"" + num(-e.cy) + "\" rx=\"" + num(e.rx) + "\" ry=\"" +
           num(e.ry) + "\" stroke=\"" + e.stroke + "\"";
    if (e.angle_deg != 0.0) {
      out += " transform=\"rotate(" + num(-e.angle_deg) + " " + num(e.cx) + " " + num(-e.cy) + ")\"";
    }
    out += "/>\n";
  }
  if (!s.chain.empty()) {
    const std::string dash = s.complex ? " stroke-dasharray=\"" + num(4.0 * stroke) + "," + num(3.0 * stroke) + "\"" : "";
    if (s.complex) out += "<!-- warning: complex chain, real parts of the vertices drawn -->\n";
    if (s.closed) {
      for (std::size_t i = 0; i + 1 < s.chain.size(); ++i) {
        out += "<path d=\"M " + num(s.chain[i][0]) + " " + num(-s.chain[i][1]) + " L " + num(s.chain[i + 1][0]) +
               " " + num(-s.chain[i + 1][1]) + "\" stroke=\"blue\"" + dash + "/>\n";
      }
    } else {
      out += "<polyline points=\"";
      for (std::size_t i = 0; i < s.chain.size(); ++i) {
        if (i) out += " ";
        out += num(s.chain[i][0]) + "," + num(-s.chain[i][1]);
      }
      out += "\" stroke=\"blue\"" + dash + "/>\n";
      const auto& a = s.chain.back();
      const auto& b = s.chain.front();
      out += "<line x1=\"" + num(a[0]) + "\" y1=\"" + num(-a[1]) + "\" x2=\"" + num(b[0]) + "\" y2=\"" + num(-b[1]) +
             "\" stroke=\"red\"/>\n";
      out += "<text x=\"" + num(0.5 * (a[0] + b[0])) + "\" y=\"" + num(-0.5 * (a[1] + b[1])) + "\" font-size=\"" +
             num(0.04 * size) + "\" fill=\"red\" stroke=\"none\">gap " + num(s.gap) + "</text>\n";
    }
    for (std::size_t i = 0; i < s.chain.size(); ++i) {
      if (s.closed && i + 1 == s.chain.size()) break;
      out += "<circle cx=\"" + num(s.chain[i][0]) + "\" cy=\"" + num(-s.chain[i][1]) + "\" r=\"" + num(2.0 * stroke) +
             "\" fill=\"blue\" stroke=\"none\"/>\n";
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace ale::cli
