#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "manifest.hpp"

namespace ale::cli {

// Options shared by every subcommand; unset optionals fall back to the input
// file and then to the tolerance profile.
struct Options {
  std::string in;        // input JSON file, "-" for stdin, empty for none
  std::string out;       // output file, empty for stdout
  std::string svg;       // poncelet run only
  std::string manifest;  // CSV commands write their manifest here
  std::optional<double> closure_tol;
  std::optional<double> incidence_tol;
  std::uint64_t seed = 1;
  int jobs = 1;

  // special eval
  std::vector<double> ks;
  double u_min = -3.0;
  double u_max = 3.0;
  int n = 13;
  // weier report
  std::optional<double> g2, g3, rho, k;
  // sphere legendre-check
  int random = 0;
  // dn check
  int starts = 5;
};

// Each command returns its primary output (JSON or CSV text) and throws
// ale::Error for domain and contract failures.
std::string special_eval(const Options& o);
std::string weier_report(const Options& o);
std::string curve_report(const Options& o);
std::string poncelet_run(const Options& o);
std::string sphere_legendre_check(const Options& o);
std::string integrals_table(const Options& o);
std::string dn_solve(const Options& o);
std::string dn_check(const Options& o);

}  // namespace ale::cli
