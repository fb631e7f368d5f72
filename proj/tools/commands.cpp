#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include <Eigen/LU>
#include <json.hpp>

#include "ale/coherent_sphere.hpp"
#include "ale/conic_pencil.hpp"
#include "ale/dn_ale.hpp"
#include "ale/errors.hpp"
#include "ale/o4_curve.hpp"
#include "ale/o4_integrals.hpp"
#include "ale/special_functions.hpp"
#include "ale/weierstrass.hpp"
#include "svg.hpp"

namespace ale::cli {

namespace {

using json = nlohmann::ordered_json;

json cj(cplx z) {
  if (std::isinf(z.real()) || std::isinf(z.imag())) return "inf";
  return json::array({z.real(), z.imag()});
}

cplx to_cplx(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw Error(ErrorKind::Contract, "expected a number or [re, im], got " + j.dump());
}

SpherePoint to_point(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return SpherePoint::infinity();
  return SpherePoint::from_zeta(to_cplx(j));
}

json pj(const SpherePoint& p) { return p.is_infinity() ? json("inf") : cj(p.zeta()); }

Mat3c to_matrix(const json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorKind::Contract, "conic matrix must be 3x3");
  Mat3c m;
  for (int r = 0; r < 3; ++r) {
    if (!j[r].is_array() || j[r].size() != 3) throw Error(ErrorKind::Contract, "conic matrix must be 3x3");
    for (int c = 0; c < 3; ++c) m(r, c) = to_cplx(j[r][c]);
  }
  return m;
}

json matrix_json(const Eigen::Matrix3d& m) {
  json a = json::array();
  for (int r = 0; r < 3; ++r) a.push_back({m(r, 0), m(r, 1), m(r, 2)});
  return a;
}

MajoranaQuartic to_multiplet(const json& j) {
  if (j.contains("z")) {
    return MajoranaQuartic::from_coefficients(to_cplx(j.at("z")), to_cplx(j.at("v")), j.at("x").get<double>());
  }
  if (j.contains("rho")) {
    return MajoranaQuartic::from_root_points(j.at("rho").get<double>(), to_point(j.at("alpha")),
                                             to_point(j.at("beta")));
  }
  throw Error(ErrorKind::Contract, "multiplet needs z, v, x or rho, alpha, beta");
}

json multiplet_json(const MajoranaQuartic& m) {
  return {{"z", cj(m.z())}, {"v", cj(m.v())}, {"x", m.x()}};
}

MonopoleConfig to_config(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Contract, "monopoles must be an array");
  MonopoleConfig cfg;
  for (const json& e : j) {
    if (e.contains("sigma")) {
      cfg.multiplets.push_back(O2Multiplet::from_coherent(e.at("sigma").get<double>(), to_point(e.at("gamma"))));
    } else {
      cfg.multiplets.push_back({e.at("t").get<double>(), to_cplx(e.at("w"))});
    }
  }
  if (cfg.multiplets.empty()) throw Error(ErrorKind::Contract, "at least one monopole is needed");
  return cfg;
}

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Domain, "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// A report fed back in is unwrapped to the input it echoes.
json load_input(const Options& o) {
  if (o.in.empty()) return json::object();
  json j = json::parse(read_all(o.in));
  if (j.is_object() && j.contains("schema") && j.contains("input")) return j["input"];
  if (!j.is_object()) throw Error(ErrorKind::Contract, "input must be a JSON object");
  return j;
}

json require_input(const Options& o, const char* what) {
  if (o.in.empty()) throw Error(ErrorKind::Contract, std::string(what) + " needs --in");
  return load_input(o);
}

Tolerances tolerances(const Options& o) {
  Tolerances t = tolerance_profile(std::getenv("ALE_TOLERANCE_PROFILE"));
  if (o.closure_tol) t.closure = *o.closure_tol;
  if (o.incidence_tol) t.incidence = *o.incidence_tol;
  if (!(t.closure > 0.0) || !(t.incidence > 0.0)) throw Error(ErrorKind::Domain, "tolerances must be positive");
  return t;
}

RunManifest manifest(const std::string& sub, const json& input, const Options& o) {
  return {sub, digest(input.dump()), tolerances(o), o.seed, tool_version()};
}

json envelope(const std::string& sub, const json& input, const Options& o) {
  json j;
  j["schema"] = 1;
  j["manifest"] = manifest(sub, input, o).to_json();
  j["input"] = input;
  return j;
}

std::string finish(const json& j) { return j.dump(2) + "\n"; }

void write_manifest(const std::string& sub, const json& input, const Options& o) {
  if (o.manifest.empty()) return;
  json j;
  j["schema"] = 1;
  j["manifest"] = manifest(sub, input, o).to_json();
  std::ofstream f(o.manifest, std::ios::binary);
  if (!f) throw Error(ErrorKind::Domain, "cannot write '" + o.manifest + "'");
  f << finish(j);
}

// Contiguous blocks per worker, so the result does not depend on the job count.
template <class F>
void parallel_for(std::size_t n, int jobs, F&& f) {
  if (jobs < 1) throw Error(ErrorKind::Domain, "--jobs must be at least 1");
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w * n / workers; i < (w + 1) * n / workers; ++i) f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double unit_from(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

// Point of B on the ray from its center (or the origin) at angle theta.
ProjPoint point_on(const Conic& b, double theta) {
  const Mat3c& q = b.Q();
  Vec3c c(0.0, 0.0, 1.0);
  const Eigen::Matrix2cd m = q.topLeftCorner<2, 2>();
  if (std::abs(m.determinant()) > 1e-12 * m.squaredNorm()) {
    const Eigen::Vector2cd ctr = -m.lu().solve(q.topRightCorner<2, 1>());
    c << ctr(0), ctr(1), 1.0;
  }
  const Vec3c d(std::cos(theta), std::sin(theta), 0.0);
  const cplx a = d.transpose() * q * d;
  const cplx bb = c.transpose() * q * d;
  const cplx c0 = c.transpose() * q * c;
  cplx t;
  if (std::abs(a) < 1e-14 * q.norm()) {
    if (std::abs(bb) < 1e-300) throw Error(ErrorKind::Degenerate, "no start point on B along this ray");
    t = -c0 / (2.0 * bb);
  } else {
    t = (-bb + std::sqrt(bb * bb - a * c0)) / a;
  }
  return ProjPoint(c + t * d);
}

json affine_json(const ProjPoint& p) {
  const auto xy = p.affine_xy();
  if (!xy) return "inf";
  return json::array({cj((*xy)[0]), cj((*xy)[1])});
}

}  // namespace

std::string special_eval(const Options& o) {
  json in = load_input(o);
  std::vector<double> ks = o.ks;
  if (in.contains("k")) ks = in["k"].is_array() ? in["k"].get<std::vector<double>>() : std::vector<double>{in["k"].get<double>()};
  if (ks.empty()) ks = {0.5};
  std::vector<double> us;
  if (in.contains("u")) {
    us = in["u"].get<std::vector<double>>();
  } else {
    const double a = in.value("u_min", o.u_min);
    const double b = in.value("u_max", o.u_max);
    const int n = in.value("n", o.n);
    if (n < 1) throw Error(ErrorKind::Domain, "grid size must be positive");
    for (int i = 0; i < n; ++i) us.push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
  }
  json canon = {{"k", ks}, {"u", us}};
  std::vector<EllipticModulus> mods;
  for (double k : ks) mods.push_back(EllipticModulus::from_k(k));

  std::vector<std::string> rows(ks.size() * us.size());
  parallel_for(rows.size(), o.jobs, [&](std::size_t r) {
    const std::size_t ik = r / us.size();
    const double u = us[r % us.size()];
    const SnCnDn s = jacobi_sn_cn_dn(u, mods[ik]);
    rows[r] = fmt(u) + "," + fmt(ks[ik]) + "," + fmt(s.sn) + "," + fmt(s.cn) + "," + fmt(s.dn) + "\n";
  });
  write_manifest("special eval", canon, o);
  std::string out = "u,k,sn,cn,dn\n";
  for (const auto& r : rows) out += r;
  return out;
}

std::string weier_report(const Options& o) {
  json in = load_input(o);
  if (in.empty()) {
    if (o.g2 && o.g3) in = {{"g2", *o.g2}, {"g3", *o.g3}};
    else if (o.rho && o.k) in = {{"rho", *o.rho}, {"k", *o.k}};
  }
  std::optional<WeierstrassModel> w;
  if (in.contains("g2")) w = WeierstrassModel::from_g2_g3(in.at("g2").get<double>(), in.at("g3").get<double>());
  else if (in.contains("rho")) w = WeierstrassModel::from_rho_k(in.at("rho").get<double>(), in.at("k").get<double>());
  else throw Error(ErrorKind::Contract, "weier report needs g2, g3 or rho, k");

  json j = envelope("weier report", in, o);
  j["g2"] = w->g2();
  j["g3"] = w->g3();
  j["rho"] = w->rho();
  j["k"] = w->k();
  j["k_prime"] = w->modulus().k_prime();
  j["roots"] = {w->e1(), w->e2(), w->e3()};
  j["K"] = w->K();
  j["K_prime"] = w->K_prime();
  j["omega"] = w->omega();
  j["omega_prime"] = cj(w->omega_prime());
  json hp = json::array(), eta = json::array();
  for (int i = 1; i <= 3; ++i) {
    hp.push_back(cj(w->half_period(i)));
    eta.push_back(cj(w->eta(i)));
  }
  j["half_periods"] = hp;
  j["eta"] = eta;
  j["eta1_omega3_minus_eta3_omega1"] = cj(w->eta(1) * w->omega_prime() - w->eta(3) * w->omega());
  if (in.contains("at")) {
    json vals = json::array();
    for (const json& uj : in["at"]) {
      const cplx u = to_cplx(uj);
      vals.push_back({{"u", cj(u)}, {"wp", cj(w->wp(u))}, {"wp_prime", cj(w->wp_prime(u))},
                      {"zeta", cj(w->zeta_w(u))}, {"sigma", cj(w->sigma(u))}});
    }
    j["values"] = vals;
  }
  return finish(j);
}

std::string curve_report(const Options& o) {
  const json in = require_input(o, "curve report");
  const MajoranaQuartic m = to_multiplet(in.contains("multiplet") ? in["multiplet"] : in);
  const WeierstrassModel& w = m.weierstrass();
  json j = envelope("curve report", in, o);
  j["multiplet"] = multiplet_json(m);
  j["rho"] = m.rho();
  j["alpha"] = cj(m.alpha());
  j["beta"] = cj(m.beta());
  const ChordalInvariants ci = chordal_invariants(m);
  j["k"] = ci.k;
  j["k_prime"] = ci.k_prime;
  j["delta_ab"] = ci.delta_ab;
  const G2G3 gg = g2_g3(m);
  j["g2"] = gg.g2;
  j["g3"] = gg.g3;
  j["degenerate"] = gg.degenerate;
  j["roots"] = {w.e1(), w.e2(), w.e3()};
  j["omega"] = w.omega();
  j["omega_prime"] = cj(w.omega_prime());
  json coeffs = json::array();
  for (cplx c : m.coefficients()) coeffs.push_back(cj(c));
  j["coefficients"] = coeffs;

  const CayleyPair cp = cayley_pair(m);
  j["cayley"] = {{"A", matrix_json(cp.A)}, {"B", matrix_json(cp.B)}, {"x_plus", cp.x_plus},
                 {"x_minus", cp.x_minus}, {"v_plus", cp.v_plus}, {"v_minus", cp.v_minus}};
  json fp = json::array();
  for (const CurvePoint& p : four_points(cp)) fp.push_back({{"X", cj(p.X)}, {"Y", cj(p.Y)}});
  j["four_points"] = fp;

  const InfinityData id = infinity_data(m);
  j["infinity"] = {{"X_inf", cj(id.X_inf)},   {"Y_inf", cj(id.Y_inf)},     {"X_zero", cj(id.X_zero)},
                   {"u_inf", cj(id.u_inf)},   {"u_zero", cj(id.u_zero)},   {"u_plus", cj(id.u_plus)},
                   {"u_minus", cj(id.u_minus)}, {"wp_u_plus", cj(w.wp(id.u_plus))},
                   {"wp_u_minus", cj(w.wp(id.u_minus))}};
  return finish(j);
}

std::string poncelet_run(const Options& o) {
  const json in = require_input(o, "poncelet run");
  const Tolerances tol = tolerances(o);
  std::optional<Conic> A, B;
  if (in.contains("circles")) {
    const auto inner = in["circles"].at("inner").get<std::vector<double>>();
    const auto outer = in["circles"].at("outer").get<std::vector<double>>();
    if (inner.size() != 3 || outer.size() != 3) throw Error(ErrorKind::Contract, "circles are [cx, cy, r]");
    A = Conic::circle(inner[0], inner[1], inner[2]);
    B = Conic::circle(outer[0], outer[1], outer[2]);
  } else {
    A = Conic(to_matrix(in.at("A")));
    B = Conic(to_matrix(in.at("B")));
  }
  const Pencil pencil(*A, *B);
  const cplx X0 = in.contains("X0") ? to_cplx(in["X0"]) : cplx(0.0);
  const int n = in.at("n").get<int>();
  const int which = in.value("which", 0);
  if (n < 1) throw Error(ErrorKind::Domain, "chain length must be positive");
  if (!pencil.member(X0).is_smooth()) throw Error(ErrorKind::Degenerate, "working conic is singular");

  ProjPoint start;
  if (in.contains("start")) {
    const json& s = in["start"];
    if (!s.is_array() || s.size() != 2) throw Error(ErrorKind::Contract, "start is [x, y]");
    start = ProjPoint(Vec3c(to_cplx(s[0]), to_cplx(s[1]), 1.0));
  } else {
    std::mt19937_64 g(o.seed);
    start = point_on(*B, 2.0 * std::numbers::pi * unit_from(g));
  }

  std::vector<IncidencePoint> states{make_incidence(pencil, X0, start, which)};
  for (int i = 0; i < n; ++i) states.push_back(poncelet_step(pencil, states.back(), tol.incidence));
  const double residual = std::max(proj_distance(states.front().P, states.back().P),
                                   proj_distance(states.front().L, states.back().L));
  bool real = true;
  for (const auto& s : states) real = real && s.P.is_real(1e-9) && s.L.is_real(1e-9);
  const bool geo_closes = residual < tol.closure;

  json j = envelope("poncelet run", in, o);
  j["n"] = n;
  j["X0"] = cj(X0);
  j["nodal"] = pencil.nodal();
  const CayleyCubic& cc = pencil.cubic();
  json coeffs = json::array(), sing = json::array();
  for (cplx c : cc.coeffs) coeffs.push_back(cj(c));
  for (cplx r : cc.roots) sing.push_back(cj(r));
  j["cubic"] = {{"coefficients", coeffs}, {"shift", cj(cc.shift)}, {"g2", cj(cc.g2)}, {"g3", cj(cc.g3)},
                {"singular_params", sing}};
  j["geometric"] = {{"closes", geo_closes}, {"residual", residual}};
  try {
    const ClosureResult a = closure_algebraic(pencil, X0, n, tol.closure);
    j["algebraic"] = {{"closes", a.closes}, {"residual", a.residual}};
    j["agree"] = a.closes == geo_closes;
  } catch (const Error& e) {
    j["algebraic"] = {{"error", e.kind_name()}, {"message", e.what()}};
    j["agree"] = nullptr;
  }
  j["real"] = real;
  json pts = json::array();
  for (const auto& s : states) pts.push_back(affine_json(s.P));
  j["points"] = pts;

  if (!o.svg.empty()) {
    Scene sc;
    if (auto e = ellipse_of(*B)) sc.ellipses.push_back(*e);
    if (auto e = ellipse_of(pencil.member(X0))) {
      e->stroke = "gray";
      sc.ellipses.push_back(*e);
    }
    for (const auto& s : states) {
      if (const auto xy = s.P.affine_xy()) sc.chain.push_back({(*xy)[0].real(), (*xy)[1].real()});
    }
    sc.closed = geo_closes;
    sc.complex = !real;
    sc.gap = residual;
    std::ofstream f(o.svg, std::ios::binary);
    if (!f) throw Error(ErrorKind::Domain, "cannot write '" + o.svg + "'");
    f << emit_svg(sc);
  }
  return finish(j);
}

std::string sphere_legendre_check(const Options& o) {
  json in = load_input(o);
  if (in.empty() && o.random > 0) in = {{"random", o.random}, {"seed", o.seed}};
  std::vector<SphericalTriangle> tris;
  if (in.contains("random")) {
    const int count = in["random"].get<int>();
    std::mt19937_64 g(in.value("seed", o.seed));
    auto gauss = [&] {
      // Box-Muller on the portable uniform generator
      const double u1 = 1.0 - unit_from(g);
      const double u2 = unit_from(g);
      return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    };
    for (int i = 0; i < count; ++i) {
      std::array<SpherePoint, 3> v;
      for (auto& p : v) {
        std::array<double, 3> n{gauss(), gauss(), gauss()};
        const double r = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
        for (double& c : n) c /= r;
        p = SpherePoint::from_vector(n);
      }
      tris.push_back(SphericalTriangle::from_vertices(v[0], v[1], v[2]));
    }
  } else {
    json list = in.contains("triangles") ? in["triangles"] : json::array({in});
    for (const json& t : list) {
      if (t.contains("vertices")) {
        const json& v = t["vertices"];
        if (!v.is_array() || v.size() != 3) throw Error(ErrorKind::Contract, "a triangle has three vertices");
        tris.push_back(SphericalTriangle::from_vertices(to_point(v[0]), to_point(v[1]), to_point(v[2])));
      } else if (t.contains("sides")) {
        const auto s = t["sides"].get<std::vector<double>>();
        const auto a = t.at("angles").get<std::vector<double>>();
        if (s.size() != 3 || a.size() != 3) throw Error(ErrorKind::Contract, "sides and angles have three entries");
        tris.push_back(SphericalTriangle::from_sides_angles(s[0], s[1], s[2], a[0], a[1], a[2]));
      } else {
        throw Error(ErrorKind::Contract, "triangle needs vertices or sides and angles");
      }
    }
  }
  std::vector<LegendreReport> reps(tris.size());
  parallel_for(tris.size(), o.jobs, [&](std::size_t i) { reps[i] = legendre_addition_check(tris[i]); });

  json j = envelope("sphere legendre-check", in, o);
  json out = json::array();
  double worst = 0.0;
  for (const auto& r : reps) {
    worst = std::max(worst, r.residual);
    const auto& t = r.used;
    out.push_back({{"residual", r.residual}, {"k", r.k}, {"colunar", r.colunar}, {"polar", r.polar},
                   {"sides", {t.a, t.b, t.c}}, {"angles", {t.A, t.B, t.C}}});
  }
  j["count"] = reps.size();
  j["max_residual"] = worst;
  j["passes"] = worst < tolerances(o).closure;
  j["triangles"] = out;
  return finish(j);
}

std::string integrals_table(const Options& o) {
  const json in = require_input(o, "integrals table");
  const MajoranaQuartic m = to_multiplet(in.contains("multiplet") ? in["multiplet"] : in);
  std::string out = "quantity,m,cycle,re,im\n";
  auto row = [&](const char* q, const std::string& mm, const std::string& cyc, cplx v) {
    out += std::string(q) + "," + mm + "," + cyc + "," + fmt(v.real()) + "," + fmt(v.imag()) + "\n";
  };
  for (int i = 1; i <= 3; ++i) {
    for (int k = 0; k <= 2; ++k) row("I_complete", std::to_string(k), std::to_string(i), I_complete(k, i, m));
  }
  for (int k = 1; k <= 2; ++k) row("conjugation_residue", std::to_string(k), "", conjugation_residue(k, m));
  for (int i = 1; i <= 3; ++i) {
    const PiPair p = pi_pair(m, i);
    row("pi_plus", "", std::to_string(i), p.plus);
    row("pi_minus", "", std::to_string(i), p.minus);
  }
  if (in.contains("paths")) {
    int idx = 0;
    for (const json& pj : in["paths"]) {
      OpenPath path;
      for (const json& w : pj.at("waypoints")) path.waypoints.push_back(to_cplx(w));
      path.sheet = pj.value("sheet", 1);
      for (int k = -2; k <= 2; ++k) {
        row("I_open", std::to_string(k), "path" + std::to_string(idx), I_incomplete(k, path, m));
      }
      ++idx;
    }
  }
  write_manifest("integrals table", in, o);
  return out;
}

std::string dn_check(const Options& o) {
  const json in = require_input(o, "dn check");
  const Tolerances tol = tolerances(o);
  const MajoranaQuartic m = to_multiplet(in.at("multiplet"));
  const MonopoleConfig cfg = to_config(in.at("monopoles"));
  const EsResidual es = es_residual(m, cfg);

  json j = envelope("dn check", in, o);
  j["residual"] = es.residual;
  j["nearest_multiple"] = es.nearest_multiple;
  j["closes"] = es.residual < tol.closure;
  j["S"] = es.S;
  j["two_K"] = 2.0 * m.weierstrass().K();
  j["dF_dx"] = cj(dF_dx(m, cfg, es.nearest_multiple));

  json roots = json::array();
  for (const O2Multiplet& chi : cfg.multiplets) {
    const DeformedRoots r = deformed_roots(m, chi);
    const SphericalResiduals ra = spherical_residuals(m, chi, r.a);
    const SphericalResiduals rb = spherical_residuals(m, chi, r.b);
    roots.push_back({{"a", pj(r.a)}, {"b", pj(r.b)}, {"norm", {ra.norm, rb.norm}}, {"dihedral", {ra.dihedral, rb.dihedral}}});
  }
  j["deformed_roots"] = roots;

  // The geometric gap scales like the lattice residual; one decade of slack.
  const double geo_tol = 10.0 * tol.closure;
  try {
    const CorrespondenceReport rep = poncelet_correspondence(m, cfg, o.starts, o.seed, geo_tol);
    const bool gc = rep.max_residual < geo_tol;
    j["geometric"] = {{"closes", gc}, {"max_residual", rep.max_residual}, {"tolerance", geo_tol},
                      {"starts", rep.start_residuals}, {"real", rep.real}};
    j["agree"] = gc == (es.residual < tol.closure);
  } catch (const Error& e) {
    j["geometric"] = {{"error", e.kind_name()}, {"message", e.what()}};
    j["agree"] = nullptr;
  }
  return finish(j);
}

std::string dn_solve(const Options& o) {
  const json in = require_input(o, "dn solve");
  const MajoranaQuartic seed = to_multiplet(in.at("multiplet"));
  const MonopoleConfig cfg = to_config(in.at("monopoles"));
  const cplx u = to_cplx(in.at("u"));
  SolverOptions opt;
  opt.tol = in.value("tol", opt.tol);
  opt.max_iterations = in.value("max_iterations", opt.max_iterations);
  const cplx z = in.contains("z") ? to_cplx(in["z"]) : seed.z();
  const LegendreSolution s = solve_legendre_relations(cfg, z, u, seed, opt);

  json j = envelope("dn solve", in, o);
  j["converged"] = s.converged;
  j["iterations"] = s.iterations;
  j["winding"] = s.winding;
  j["residual_trace"] = s.residual_trace;
  j["residuals"] = {{"fx", s.residuals.fx}, {"fv", cj(s.residuals.fv)}, {"norm", s.residuals.norm()}};
  j["multiplet"] = multiplet_json(s.multiplet);
  const EsResidual es = es_residual(s.multiplet, cfg);
  j["es"] = {{"residual", es.residual}, {"nearest_multiple", es.nearest_multiple}, {"S", es.S}};
  return finish(j);
}

}  // namespace ale::cli
