#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ale/errors.hpp"
#include "commands.hpp"
#include "manifest.hpp"

namespace {

constexpr int kUsage = 64;

void error_json(const std::string& kind, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"] = kind;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  using ale::cli::Options;
  Options o;
  CLI::App app{"Elliptic, Poncelet and O(4) spectral-curve numerics", "ale"};
  app.set_version_flag("--version", ale::cli::tool_version());
  app.require_subcommand(1);

  std::function<std::string(const Options&)> run;
  std::string name;

  auto common = [&](CLI::App* c, bool input_required) {
    auto* opt = c->add_option("--in", o.in, "input JSON file, - for stdin");
    if (input_required) opt->required();
    c->add_option("--out", o.out, "output file (default stdout)");
    c->add_option("--closure-tol", o.closure_tol, "closure tolerance (default 1e-8)");
    c->add_option("--incidence-tol", o.incidence_tol, "incidence tolerance (default 1e-10)");
    c->add_option("--seed", o.seed, "seed for randomized choices")->capture_default_str();
    c->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
  };
  auto leaf = [&](CLI::App* parent, const std::string& sub, const std::string& desc, bool input_required,
                  std::string (*fn)(const Options&)) {
    CLI::App* c = parent->add_subcommand(sub, desc);
    common(c, input_required);
    c->callback([&, fn, c] {
      run = fn;
      name = c->get_name();
    });
    return c;
  };
  auto group = [&](const std::string& g, const std::string& desc) {
    CLI::App* c = app.add_subcommand(g, desc);
    c->require_subcommand(1);
    return c;
  };

  CLI::App* special = group("special", "Jacobi elliptic functions");
  CLI::App* se = leaf(special, "eval", "sn, cn, dn on a grid as CSV", false, ale::cli::special_eval);
  se->add_option("--k", o.ks, "moduli")->delimiter(',');
  se->add_option("--u-min", o.u_min)->capture_default_str();
  se->add_option("--u-max", o.u_max)->capture_default_str();
  se->add_option("--n", o.n, "grid points")->capture_default_str();
  se->add_option("--manifest", o.manifest, "write the run manifest JSON here");

  CLI::App* weier = group("weier", "Weierstrass model");
  CLI::App* wr = leaf(weier, "report", "lattice, roots and quasi-periods as JSON", false, ale::cli::weier_report);
  wr->add_option("--g2", o.g2);
  wr->add_option("--g3", o.g3);
  wr->add_option("--rho", o.rho);
  wr->add_option("--k", o.k);

  CLI::App* curve = group("curve", "O(4) spectral curve");
  leaf(curve, "report", "normal form, Cayley pair and points at infinity", true, ale::cli::curve_report);

  CLI::App* pon = group("poncelet", "Poncelet chains on a pencil");
  CLI::App* pr = leaf(pon, "run", "chain, closure verdicts and optional SVG", true, ale::cli::poncelet_run);
  pr->add_option("--svg", o.svg, "write the figure here");

  CLI::App* sphere = group("sphere", "spherical trigonometry");
  CLI::App* sl = leaf(sphere, "legendre-check", "Legendre addition residuals", false, ale::cli::sphere_legendre_check);
  sl->add_option("--random", o.random, "number of random triangles");

  CLI::App* integ = group("integrals", "contour integrals of the O(4) curve");
  CLI::App* it = leaf(integ, "table", "closed-form integrals as CSV", true, ale::cli::integrals_table);
  it->add_option("--manifest", o.manifest, "write the run manifest JSON here");

  CLI::App* dn = group("dn", "D_n constraint system");
  leaf(dn, "solve", "solve the Legendre relations for (v, x)", true, ale::cli::dn_solve);
  CLI::App* dc = leaf(dn, "check", "lattice constraint and chain closure", true, ale::cli::dn_check);
  dc->add_option("--starts", o.starts, "chain starts")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    const std::string out = run(o);
    if (o.out.empty()) {
      std::cout << out;
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) throw ale::Error(ale::ErrorKind::Domain, "cannot write '" + o.out + "'");
      f << out;
    }
    return 0;
  } catch (const ale::Error& e) {
    error_json(e.kind_name(), e.what());
    return 2;
  } catch (const nlohmann::json::parse_error& e) {
    error_json("parse", e.what());
    return 2;
  } catch (const nlohmann::json::exception& e) {
    error_json("schema", e.what());
    return 2;
  } catch (const std::exception& e) {
    error_json("internal", e.what());
    return 1;
  }
}
