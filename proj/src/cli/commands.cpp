// Copyright 2026 The gqfi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "gqfi/cli.hpp"
#include "gqfi/errors.hpp"
#include "gqfi/metrology.hpp"
#include "json.hpp"

namespace gqfi::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json mesh_json(const MeshParams& p) {
  ordered_json angles = ordered_json::array();
  for (const CouplerAngles& a : p.rotation_angles) angles.push_back({a.theta, a.phi});
  ordered_json out;
  out["n_modes"] = p.n_modes;
  out["rotation_angles"] = std::move(angles);
  out["output_phases"] = p.output_phases;
  return out;
}

// Non-finite values become null in JSON; keep them visible as strings.
ordered_json finite_or_string(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

// Comma-separated reals; empty text gives an empty list, empty items are errors.
bool parse_list(const std::string& text, std::vector<double>& out) {
  out.clear();
  if (text.empty()) return true;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
    char* end = nullptr;
    const double x = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size() || !std::isfinite(x)) return false;
    out.push_back(x);
    if (comma == std::string::npos) return true;
    start = comma + 1;
  }
}

}  // namespace

std::string format_csv_number(double x) {
  char buf[32];
  for (int precision = 1; precision <= 12; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) return buf;
  }
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
  std::string csv = "theta,entropy,qfi_single,qfi_common,qfi_differential\n";
  for (const ScanRow& row : rows) {
    csv += format_csv_number(row.theta) + ',' + format_csv_number(row.entropy) + ',' +
           format_csv_number(row.qfi_single) + ',' + format_csv_number(row.qfi_common) + ',' +
           format_csv_number(row.qfi_differential) + '\n';
  }
  return csv;
}

std::string optimization_to_json(const SqueezingVector& r, const GeneratorWeights& g,
                                 const OptimizerOptions& opts, const OptimizationResult& result) {
  ordered_json doc;
  doc["r"] = r.values();
  doc["g"] = g.values();
  doc["restarts"] = opts.restarts;
  doc["seed"] = opts.seed;
  doc["best_qfi"] = result.best_qfi;
  doc["theoretical_max"] = result.theoretical_max;
  doc["gap"] = result.gap;
  doc["relative_gap"] = result.gap / std::max(1.0, result.theoretical_max);
  doc["iterations"] = result.iterations;
  doc["restarts_used"] = result.restarts_used;
  doc["final_state_decoupled_across_g_groups"] = result.final_state_decoupled_across_g_groups;
  doc["best_params"] = mesh_json(result.best_params);
  return doc.dump(2) + "\n";
}

std::string verification_to_json(const VerificationReport& report) {
  ordered_json doc;
  doc["seed"] = report.seed;
  doc["trials"] = report.trials;
  doc["max_modes"] = report.max_modes;
  doc["all_pass"] = report.all_pass();
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : report.checks) {
    ordered_json item;
    item["name"] = c.name;
    item["trials"] = c.trials;
    item["max_abs_error"] = finite_or_string(c.max_abs_error);
    item["max_error"] = finite_or_string(c.max_error);
    item["tolerance"] = c.tolerance;
    item["pass"] = c.pass;
    checks.push_back(std::move(item));
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

int cmd_qfi(const std::filesystem::path& network_file, const std::vector<double>& g,
            const std::string& output, std::ostream& out, std::ostream& err) {
  if (output != "text" && output != "json") {
    err << "error: --output must be text or json\n";
    return kUsageError;
  }
  std::optional<CovarianceMatrix> state;
  try {
    const NetworkSpec spec = load_network(network_file);
    if (static_cast<int>(g.size()) != spec.n_modes) {
      err << "error: --g needs " << spec.n_modes << " weights, got " << g.size() << "\n";
      return kUsageError;
    }
    state = build_state(spec);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  const ValidationReport report = validate(*state);
  if (!report.physical) {
    err << "error: state is not physical (min symplectic eigenvalue "
        << report.min_symplectic_eigenvalue << ")\n";
    return kUnphysicalState;
  }
  QfiResult qfi;
  try {
    qfi = qfi_general(*state, GeneratorWeights(g));
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  std::vector<double> photons;
  for (int a = 0; a < state->n_modes(); ++a) photons.push_back(mean_photon_number(*state, a));

  if (output == "json") {
    ordered_json doc;
    doc["qfi"] = qfi.value;
    doc["exactness"] = std::string(to_string(qfi.exactness));
    doc["per_mode_photon_numbers"] = photons;
    doc["total_photons"] = total_photon_number(*state);
    doc["pure"] = report.pure;
    doc["covariance"] = ordered_json::parse(covariance_to_json(*state));
    out << doc.dump(2) << "\n";
  } else {
    out << "qfi: " << format_csv_number(qfi.value) << "\n";
    out << "exactness: " << to_string(qfi.exactness) << "\n";
    out << "per_mode_photon_numbers:";
    for (double n : photons) out << ' ' << format_csv_number(n);
    out << "\n";
    out << "total_photons: " << format_csv_number(total_photon_number(*state)) << "\n";
    out << "pure: " << (report.pure ? "true" : "false") << "\n";
  }
  return kSuccess;
}

int cmd_scan(double r, int points, const std::string& out_csv, std::ostream& out,
             std::ostream& err) {
  std::vector<ScanRow> rows;
  try {
    rows = scan_entanglement(r, points);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  const std::string csv = scan_to_csv(rows);
  if (out_csv == "-") {
    out << csv;
    return kSuccess;
  }
  std::ofstream file(out_csv, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot write " << out_csv << "\n";
    return kUsageError;
  }
  file << csv;
  file.close();
  if (!file) {
    err << "error: failed writing " << out_csv << "\n";
    return kUsageError;
  }
  return kSuccess;
}

int cmd_optimize(const std::vector<double>& r, const std::vector<double>& g,
                 const OptimizerOptions& opts, std::ostream& out, std::ostream& err) {
  if (r.empty() || r.size() != g.size()) {
    err << "error: --r and --g must be non-empty and of equal length\n";
    return kUsageError;
  }
  try {
    const SqueezingVector rv(r);
    const GeneratorWeights gv(g);
    const OptimizationResult result = maximize_qfi(rv, gv, opts);
    out << optimization_to_json(rv, gv, opts, result);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kSuccess;
}

int cmd_verify(std::uint64_t seed, int trials, int max_modes, std::ostream& out,
               std::ostream& err) {
  VerificationReport report;
  try {
    report = verify_suite(seed, trials, max_modes);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  out << verification_to_json(report);
  return report.all_pass() ? kSuccess : kVerificationFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum Fisher information of zero-mean Gaussian states (hbar = 2)", "gqfi"};
  app.require_subcommand(1);

  std::string network;
  std::string qfi_g;
  std::string qfi_output = "text";
  auto* qfi = app.add_subcommand("qfi", "QFI of the state built from a network file");
  qfi->add_option("--network", network, "Network description (JSON)")->required();
  qfi->add_option("--g", qfi_g, "Generator weights, comma separated")->required();
  qfi->add_option("--output", qfi_output, "text or json")->check(CLI::IsMember({"text", "json"}));

  double scan_r = 0.5;
  int scan_points = 65;
  std::string scan_out = "-";
  auto* scan = app.add_subcommand("scan", "Entanglement scan: phase on mode 0, then a 50/50 splitter");
  scan->add_option("--r", scan_r, "Squeezing of both inputs");
  scan->add_option("--points", scan_points, "Grid points over [0, pi/2]");
  scan->add_option("--out", scan_out, "CSV output path, '-' for stdout");

  std::string opt_r;
  std::string opt_g;
  OptimizerOptions opt_opts;
  auto* optimize = app.add_subcommand("optimize", "Maximize QFI over passive meshes");
  optimize->add_option("--r", opt_r, "Input squeezing, comma separated")->required();
  optimize->add_option("--g", opt_g, "Generator weights, comma separated")->required();
  optimize->add_option("--restarts", opt_opts.restarts, "Simplex restarts")->capture_default_str();
  optimize->add_option("--seed", opt_opts.seed, "Seed for restart initialization")->capture_default_str();
  optimize->add_option("--max-iters", opt_opts.max_iters, "Iterations per simplex run")->capture_default_str();
  optimize->add_option("--xtol", opt_opts.xtol, "Simplex size tolerance")->capture_default_str();
  optimize->add_option("--ftol", opt_opts.ftol, "Objective spread tolerance")->capture_default_str();

  std::uint64_t verify_seed = 42;
  int verify_trials = 200;
  int verify_modes = 4;
  auto* verify = app.add_subcommand("verify", "Run the randomized identity suite");
  verify->add_option("--seed", verify_seed, "Suite seed")->capture_default_str();
  verify->add_option("--trials", verify_trials, "Trials per check")->capture_default_str();
  verify->add_option("--max-modes", verify_modes, "Largest mode count sampled")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  std::vector<double> first;
  std::vector<double> second;
  if (*qfi) {
    if (!parse_list(qfi_g, first)) {
      err << "error: --g must be a comma-separated list of numbers\n";
      return kUsageError;
    }
    return cmd_qfi(network, first, qfi_output, out, err);
  }
  if (*scan) return cmd_scan(scan_r, scan_points, scan_out, out, err);
  if (*optimize) {
    if (!parse_list(opt_r, first) || !parse_list(opt_g, second)) {
      err << "error: --r and --g must be comma-separated lists of numbers\n";
      return kUsageError;
    }
    return cmd_optimize(first, second, opt_opts, out, err);
  }
  return cmd_verify(verify_seed, verify_trials, verify_modes, out, err);
}

}  // namespace gqfi::cli
