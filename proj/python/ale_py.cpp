#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ale/coherent_sphere.hpp"
#include "ale/conic_pencil.hpp"
#include "ale/dn_ale.hpp"
#include "ale/errors.hpp"
#include "ale/o4_curve.hpp"
#include "ale/o4_integrals.hpp"
#include "ale/special_functions.hpp"
#include "ale/weierstrass.hpp"

namespace py = pybind11;
using namespace ale;

namespace {

MonopoleConfig to_config(const std::vector<std::pair<double, cplx>>& monopoles) {
  MonopoleConfig cfg;
  for (const auto& [t, w] : monopoles) cfg.multiplets.push_back({t, w});
  return cfg;
}

py::dict legendre_dict(const LegendreReport& r) {
  py::dict d;
  d["residual"] = r.residual;
  d["k"] = r.k;
  d["colunar"] = r.colunar;
  d["polar"] = r.polar;
  return d;
}

}  // namespace

PYBIND11_MODULE(ale, mod) {
  mod.doc() = "Elliptic, Poncelet and O(4) spectral-curve numerics";

  static py::exception<Error> ale_error(mod, "AleError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(ale_error, (std::string(e.kind_name()) + ": " + e.what()).c_str());
    }
  });

  mod.def("agm", &agm, py::arg("a"), py::arg("b"));
  mod.def("complete_K", py::overload_cast<double>(&complete_K), py::arg("k"));
  mod.def(
      "incomplete_F", [](double phi, double k) { return incomplete_F(Amplitude::from_phi(phi), EllipticModulus::from_k(k)); },
      py::arg("phi"), py::arg("k"));
  mod.def(
      "jacobi",
      [](double u, double k) {
        const SnCnDn r = jacobi_sn_cn_dn(u, EllipticModulus::from_k(k));
        return py::make_tuple(r.sn, r.cn, r.dn);
      },
      py::arg("u"), py::arg("k"), "sn, cn, dn at real u");
  mod.def(
      "jacobi_complex",
      [](cplx u, double k) {
        const CSnCnDn r = jacobi_sn_cn_dn(u, EllipticModulus::from_k(k));
        return py::make_tuple(r.sn, r.cn, r.dn);
      },
      py::arg("u"), py::arg("k"));

  py::class_<WeierstrassModel>(mod, "Weierstrass")
      .def_static("from_rho_k", &WeierstrassModel::from_rho_k, py::arg("rho"), py::arg("k"))
      .def_static("from_g2_g3", &WeierstrassModel::from_g2_g3, py::arg("g2"), py::arg("g3"))
      .def_property_readonly("rho", &WeierstrassModel::rho)
      .def_property_readonly("k", &WeierstrassModel::k)
      .def_property_readonly("g2", &WeierstrassModel::g2)
      .def_property_readonly("g3", &WeierstrassModel::g3)
      .def_property_readonly("roots", [](const WeierstrassModel& w) { return py::make_tuple(w.e1(), w.e2(), w.e3()); })
      .def_property_readonly("K", &WeierstrassModel::K)
      .def_property_readonly("K_prime", &WeierstrassModel::K_prime)
      .def_property_readonly("omega", &WeierstrassModel::omega)
      .def_property_readonly("omega_prime", &WeierstrassModel::omega_prime)
      .def("wp", py::overload_cast<cplx>(&WeierstrassModel::wp, py::const_), py::arg("u"))
      .def("wp_prime", &WeierstrassModel::wp_prime, py::arg("u"))
      .def("zeta", &WeierstrassModel::zeta_w, py::arg("u"))
      .def("sigma", &WeierstrassModel::sigma, py::arg("u"));

  py::class_<MajoranaQuartic>(mod, "Multiplet")
      .def_static("from_coefficients", &MajoranaQuartic::from_coefficients, py::arg("z"), py::arg("v"), py::arg("x"))
      .def_static("from_roots", &MajoranaQuartic::from_roots, py::arg("rho"), py::arg("alpha"), py::arg("beta"))
      .def_property_readonly("z", &MajoranaQuartic::z)
      .def_property_readonly("v", &MajoranaQuartic::v)
      .def_property_readonly("x", &MajoranaQuartic::x)
      .def_property_readonly("rho", &MajoranaQuartic::rho)
      .def_property_readonly("alpha", &MajoranaQuartic::alpha)
      .def_property_readonly("beta", &MajoranaQuartic::beta)
      .def_property_readonly("k", &MajoranaQuartic::k)
      .def_property_readonly("coefficients", &MajoranaQuartic::coefficients)
      .def_property_readonly("weierstrass", &MajoranaQuartic::weierstrass, py::return_value_policy::copy)
      .def(
          "I_complete", [](const MajoranaQuartic& m, int order, int cycle) { return I_complete(order, cycle, m); },
          py::arg("order"), py::arg("cycle"));

  mod.def(
      "legendre_check",
      [](double a, double b, double c, double A, double B, double C) {
        return legendre_dict(legendre_addition_check(SphericalTriangle::from_sides_angles(a, b, c, A, B, C)));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("A"), py::arg("B"), py::arg("C"));
  mod.def(
      "legendre_check_vertices",
      [](cplx p, cplx q, cplx r) {
        return legendre_dict(legendre_addition_check(
            SphericalTriangle::from_vertices(SpherePoint::from_zeta(p), SpherePoint::from_zeta(q), SpherePoint::from_zeta(r))));
      },
      py::arg("p"), py::arg("q"), py::arg("r"), "triangle from stereographic coordinates");

  mod.def(
      "poncelet_closure",
      [](const Mat3c& a, const Mat3c& b, int n, std::pair<cplx, cplx> start, cplx X0, double tol) {
        const Pencil pencil{Conic(a), Conic(b)};
        const ClosureResult alg = closure_algebraic(pencil, X0, n, tol);
        const ClosureResult geo =
            closure_geometric(pencil, X0, ProjPoint(Vec3c(start.first, start.second, 1.0)), n, tol);
        py::dict d;
        d["algebraic"] = py::make_tuple(alg.closes, alg.residual);
        d["geometric"] = py::make_tuple(geo.closes, geo.residual);
        return d;
      },
      py::arg("A"), py::arg("B"), py::arg("n"), py::arg("start"), py::arg("X0") = cplx(0.0), py::arg("tol") = 1e-8,
      "closure of the chain inscribed in B and tangent to A + X0 B, from an affine start point on B");
  mod.def(
      "circle", [](double cx, double cy, double r) { return Mat3c(Conic::circle(cx, cy, r).Q()); }, py::arg("cx"),
      py::arg("cy"), py::arg("r"));

  mod.def(
      "es_residual",
      [](const MajoranaQuartic& m, const std::vector<std::pair<double, cplx>>& monopoles) {
        const EsResidual r = es_residual(m, to_config(monopoles));
        return py::make_tuple(r.residual, r.nearest_multiple);
      },
      py::arg("multiplet"), py::arg("monopoles"), "monopoles as (t, w) pairs");
  mod.def(
      "dF_dx",
      [](const MajoranaQuartic& m, const std::vector<std::pair<double, cplx>>& monopoles, int winding) {
        return dF_dx(m, to_config(monopoles), winding);
      },
      py::arg("multiplet"), py::arg("monopoles"), py::arg("winding"));
  mod.def(
      "dF_dv",
      [](const MajoranaQuartic& m, const std::vector<std::pair<double, cplx>>& monopoles, int winding) {
        return dF_dv(m, to_config(monopoles), winding);
      },
      py::arg("multiplet"), py::arg("monopoles"), py::arg("winding"));
}
