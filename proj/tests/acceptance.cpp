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

// Acceptance checks: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "gqfi/cli.hpp"
#include "gqfi/entanglement.hpp"
#include "gqfi/metrology.hpp"
#include "gqfi/sampling.hpp"
#include "gqfi/search.hpp"
#include "json.hpp"

namespace {

using namespace gqfi;
using std::numbers::pi;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double rel_err(double got, double want) {
  const double scale = std::abs(want) < 1e-6 ? 1.0 : std::abs(want);
  return std::abs(got - want) / scale;
}

double sinh2(double x) { return std::sinh(x) * std::sinh(x); }

struct Verdict {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

std::vector<std::vector<double>> parse_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

// Columns: theta, entropy, single, common, differential.
struct ScanRun {
  int code = -1;
  double seconds = 0.0;
  std::vector<std::vector<double>> rows;
};

ScanRun run_scan() {
  ScanRun s;
  std::ostringstream out;
  std::ostringstream err;
  const auto t0 = Clock::now();
  s.code = cli::cmd_scan(0.5, 65, "-", out, err);
  s.seconds = seconds_since(t0);
  s.rows = parse_csv(out.str());
  return s;
}

Verdict scan_endpoints(const ScanRun& s) {
  if (s.code != 0 || s.rows.size() != 65) return {false, "scan did not produce 65 rows"};
  const auto& first = s.rows.front();
  const auto& last = s.rows.back();
  const double e_single0 = rel_err(first[2], 2 * sinh2(1.0));
  const double e_diff0 = rel_err(first[4], 4 * sinh2(1.0));
  const double e_com0 = rel_err(first[3], 4 * sinh2(1.0));
  const double e_single1 = rel_err(last[2], sinh2(1.0));
  double e_com = 0.0;
  for (const auto& row : s.rows) e_com = std::max(e_com, rel_err(row[3], first[3]));
  const double worst = std::max({e_single0, e_diff0, e_com0, e_single1, e_com});
  // Values pass through 12-digit CSV formatting, hence the 1e-9 tolerance on theta = 0 too.
  const bool pass = worst <= 1e-9 && last[4] <= 1e-9 && s.seconds < 1.0;
  return {pass, fmt("max rel err %.2e, differential at pi/2 %.2e, %.3fs", worst, last[4], s.seconds)};
}

Verdict scan_shape(const ScanRun& s) {
  if (s.rows.size() < 2) return {false, "scan missing"};
  double worst_entropy = 0.0;
  double worst_diff = 0.0;
  for (std::size_t i = 1; i < s.rows.size(); ++i) {
    worst_entropy = std::max(worst_entropy, s.rows[i - 1][1] - s.rows[i][1]);
    worst_diff = std::max(worst_diff, s.rows[i][4] - s.rows[i - 1][4]);
  }
  const bool rises = s.rows.back()[1] > s.rows.front()[1];
  const bool falls = s.rows.back()[4] < s.rows.front()[4];
  return {worst_entropy <= 1e-10 && worst_diff <= 1e-10 && rises && falls,
          fmt("largest entropy drop %.2e, largest differential rise %.2e", worst_entropy,
              worst_diff)};
}

struct SingleModeEnsemble {
  double tradeoff_err = 0.0;
  double sandwich_violation = -1.0;
  double seconds = 0.0;
};

SingleModeEnsemble single_mode_ensemble() {
  SingleModeEnsemble e;
  Rng rng(1003);
  const auto t0 = Clock::now();
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 5;
    const PureSample s = random_pure_state(rng, n);
    std::vector<double> g(static_cast<std::size_t>(n), 0.0);
    g[0] = rng.uniform(0.5, 2.0);
    const double h = qfi_general(s.v, GeneratorWeights(g)).value / (g[0] * g[0]);
    const double n1 = mean_photon_number(s.v, 0);
    const double mu = purity(reduced_covariance(s.v, ModeSubset::single(0, n)));
    const double hs = 8 * n1 * n1 + 8 * n1;
    e.tradeoff_err = std::max(e.tradeoff_err, rel_err(h, hs - (1 / (mu * mu) - 1)));
    e.sandwich_violation = std::max({e.sandwich_violation, (hs / 2 - 1e-9) - h, h - (hs + 1e-9)});
  }
  e.seconds = seconds_since(t0);
  return e;
}

Verdict tradeoff_identity(const SingleModeEnsemble& e) {
  return {e.tradeoff_err <= 1e-9 && e.seconds < 10.0,
          fmt("max rel err %.2e over 1000 states, %.3fs", e.tradeoff_err, e.seconds)};
}

Verdict sandwich(const SingleModeEnsemble& e) {
  double attained = 0.0;
  for (double r : {0.1, 0.3, 0.5, 0.8, 1.0, 1.5}) {
    const CovarianceMatrix v = entangling_pipeline_state(r, pi / 2);
    const double n1 = mean_photon_number(v, 0);
    attained = std::max(attained, rel_err(qfi_single_mode(v, 0).value, 4 * n1 * n1 + 4 * n1));
  }
  return {e.sandwich_violation <= 0.0 && attained <= 1e-9,
          fmt("worst bound excess %.2e, lower bound attained to %.2e", e.sandwich_violation,
              attained)};
}

Verdict two_mode_consistency() {
  Rng rng(1005);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const PureSample s = random_pure_state(rng, 2);
    const GeneratorWeights g = random_weights(rng, 2);
    const double direct = qfi_general(s.v, g).value;
    const double assembled = qfi_two_mode_decomposition(s.v, g).combined;
    const double tradeoff = qfi_two_mode_tradeoff(g, s.r, s.k);
    worst = std::max({worst, rel_err(assembled, direct), rel_err(tradeoff, direct),
                      rel_err(tradeoff, assembled)});
  }
  return {worst <= 1e-9, fmt("max pairwise rel err %.2e", worst)};
}

Verdict epr_law() {
  double worst = 0.0;
  const std::vector<std::pair<double, double>> weights = {{1, 1}, {1, 0}, {1, -1}, {2, -1}};
  for (double r : {0.1, 0.5, 1.0}) {
    const CovarianceMatrix v = entangling_pipeline_state(r, pi / 2);
    const double n = sinh2(r);
    for (auto [g1, g2] : weights) {
      const double want = (g1 + g2) * (g1 + g2) / 2 * (8 * n * n + 8 * n);
      worst = std::max(worst, rel_err(qfi_general(v, GeneratorWeights({g1, g2})).value, want));
    }
  }
  return {worst <= 1e-9, fmt("max rel err %.2e over 12 cases", worst)};
}

Verdict ceiling() {
  Rng rng(1007);
  double excess = -1.0;
  double equality = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 4;
    const PureSample s = random_pure_state(rng, n);
    const GeneratorWeights g = trial % 2 ? random_weights(rng, n) : random_tied_weights(rng, n);
    excess = std::max(excess, qfi_general(s.v, g).value - optimal_qfi(s.r, g) - 1e-9);

    // Properly ordered input, then mixing only inside equal-g groups.
    const std::vector<int> pairing = proper_order_pairing(s.r, g);
    std::vector<double> sorted(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) sorted[static_cast<std::size_t>(a)] = s.r[pairing[static_cast<std::size_t>(a)]];
    const SqueezingVector ordered(sorted);
    const CovarianceMatrix v = apply(random_block_passive(rng, g.values()), input_state(ordered));
    equality = std::max(equality, rel_err(qfi_general(v, g).value, optimal_qfi(s.r, g)));
  }
  return {excess <= 0.0 && equality <= 1e-9,
          fmt("worst excess over ceiling %.2e, equality rel err %.2e", excess + 1e-9, equality)};
}

struct Case {
  std::vector<double> r;
  std::vector<double> g;
};

const std::vector<Case>& fixed_cases() {
  static const std::vector<Case> cases = {
      {{0.5}, {1.0}},
      {{0.5, 0.5}, {1.0, -1.0}},
      {{0.3, 0.9}, {2.0, 1.0}},
      {{1.0, 0.2}, {0.5, 1.5}},
      {{0.4, 0.4}, {1.0, 1.0}},
      {{0.2, 0.6, 1.0}, {1.0, 2.0, 3.0}},
      {{0.8, -0.5, 0.3}, {0.0, 1.0, -1.0}},
      {{0.1, 1.2, 0.7}, {1.0, 1.0, 2.0}},
      {{0.3, 0.6, 0.9, 1.2}, {2.0, -1.0, 0.5, 1.5}},
      {{1.0, 0.1, 0.6, 0.3}, {1.0, 1.0, -1.0, 0.2}},
  };
  return cases;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (double x : v) s += (s.empty() ? "" : ",") + cli::format_csv_number(x);
  return s;
}

Verdict attainment() {
  double worst = 0.0;
  bool ok = true;
  const auto t0 = Clock::now();
  for (const Case& c : fixed_cases()) {
    std::ostringstream out;
    std::ostringstream err;
    const std::vector<std::string> args = {"optimize", "--r", join(c.r), "--g", join(c.g),
                                           "--restarts", "16", "--seed", "7"};
    if (cli::run(args, out, err) != 0) {
      ok = false;
      continue;
    }
    const auto doc = nlohmann::json::parse(out.str());
    const double gap = doc["gap"].get<double>();
    const double top = doc["theoretical_max"].get<double>();
    worst = std::max(worst, gap / std::max(1.0, top));
  }
  const double secs = seconds_since(t0);
  return {ok && worst <= 1e-5 && secs < 60.0,
          fmt("worst relative gap %.2e over 10 cases, %.2fs", worst, secs)};
}

Verdict budget_bound() {
  double excess = -1.0;
  double equality = 0.0;
  auto check = [&](const SqueezingVector& r, const GeneratorWeights& g) {
    excess = std::max(excess, optimal_qfi(r, g) - qfi_budget_bound(g, r.max_abs()) - 1e-12);
    const std::vector<double> flat(static_cast<std::size_t>(r.size()), r.max_abs());
    equality = std::max(equality, rel_err(optimal_qfi(SqueezingVector(flat), g),
                                          qfi_budget_bound(g, r.max_abs())));
  };
  for (const Case& c : fixed_cases()) check(SqueezingVector(c.r), GeneratorWeights(c.g));
  Rng rng(1009);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 8;
    check(random_squeezing(rng, n), random_weights(rng, n));
  }
  return {excess <= 0.0 && equality <= 1e-12,
          fmt("worst excess %.2e, equal-squeezing rel err %.2e", excess + 1e-12, equality)};
}

std::vector<double> squeezing_spectrum(const CovarianceMatrix& v) {
  std::vector<double> out;
  for (int a = 0; a < v.n_modes(); ++a) {
    out.push_back(std::asinh(std::sqrt(std::max(0.0, mean_photon_number(v, a)))));
  }
  std::sort(out.begin(), out.end());
  return out;
}

double spectrum_mismatch(const CovarianceMatrix& v, const SqueezingVector& r) {
  std::vector<double> want;
  for (double x : r.values()) want.push_back(std::abs(x));
  std::sort(want.begin(), want.end());
  const std::vector<double> got = squeezing_spectrum(v);
  double worst = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) worst = std::max(worst, std::abs(got[i] - want[i]));
  return worst;
}

Verdict proposition_one() {
  Rng rng(1010);
  bool all_decoupled = true;
  double constructive = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 6;
    const SqueezingVector r = random_squeezing(rng, n);
    const CovarianceMatrix v = apply(random_phase_permutation(rng, n), input_state(r));
    all_decoupled = all_decoupled && is_decoupled(v, 1e-9);
    constructive = std::max(constructive, spectrum_mismatch(v, r));
  }
  // Converse: Haar networks, phase-permutations, and splitters between equally squeezed modes.
  int decoupled_hits = 0;
  int false_positives = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 2;
    SqueezingVector r = random_squeezing(rng, n);
    PassiveTransform k = random_passive(n, rng);
    if (trial % 3 == 1) {
      k = random_phase_permutation(rng, n);
    } else if (trial % 3 == 2) {
      std::vector<double> vals = r.values();
      vals[1] = vals[0];
      r = SqueezingVector(vals);
      k = compose(random_phase_permutation(rng, n), beam_splitter(n, 0, 1, rng.uniform(0, pi)));
    }
    const CovarianceMatrix v = apply(k, input_state(r));
    if (!is_decoupled(v, 1e-9)) continue;
    ++decoupled_hits;
    if (spectrum_mismatch(v, r) > 1e-6) ++false_positives;
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "constructive mismatch %.2e, converse %d decoupled samples, %d false positives",
                constructive, decoupled_hits, false_positives);
  return {all_decoupled && constructive <= 1e-6 && false_positives == 0 && decoupled_hits > 0, buf};
}

Verdict conservation() {
  Rng rng(1011);
  double photons = 0.0;
  double det = 0.0;
  double trace = 0.0;
  double spectrum = 0.0;
  double common = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 6;
    const CovarianceMatrix v = trial % 2 ? random_pure_state(rng, n).v : random_mixed_state(rng, n);
    const CovarianceMatrix w = apply(random_passive(n, rng), v);
    photons = std::max(photons, std::abs(total_photon_number(w) - total_photon_number(v)));
    det = std::max(det, rel_err(w.data().determinant(), v.data().determinant()));
    trace = std::max(trace, rel_err(w.data().trace(), v.data().trace()));
    const auto nv = symplectic_eigenvalues(v);
    const auto nw = symplectic_eigenvalues(w);
    for (std::size_t i = 0; i < nv.size(); ++i) spectrum = std::max(spectrum, rel_err(nw[i], nv[i]));

    const PureSample two = random_pure_state(rng, 2);
    const double c = rng.uniform(-2.0, 2.0);
    const GeneratorWeights g({c, c});
    const double before = qfi_general(two.v, g).value;
    const double after = qfi_general(apply(random_passive(2, rng), two.v), g).value;
    common = std::max(common, rel_err(after, before));
  }
  const bool pass = photons <= 1e-9 && det <= 1e-9 && trace <= 1e-9 && spectrum <= 1e-8 &&
                    common <= 1e-9;
  char buf[240];
  std::snprintf(buf, sizeof buf,
                "photons %.2e abs, det %.2e, trace %.2e, spectrum %.2e, common phase %.2e", photons,
                det, trace, spectrum, common);
  return {pass, buf};
}

Verdict entropy_agreement() {
  Rng rng(1012);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const PureSample s = random_pure_state(rng, 2);
    const CovarianceMatrix v1 = reduced_covariance(s.v, ModeSubset::single(trial % 2, 2));
    const double a = entropy_from_purity(purity(v1));
    const std::vector<double> nu = symplectic_eigenvalues(v1);
    const double b = entropy_from_symplectic_spectrum(nu);
    worst = std::max(worst, std::abs(a - b));
  }
  return {worst <= 1e-9, fmt("max abs diff %.2e nats", worst)};
}

Verdict determinism() {
  std::ostringstream a;
  std::ostringstream b;
  std::ostringstream err;
  const std::vector<std::string> args = {"verify", "--seed", "42", "--trials", "200",
                                         "--max-modes", "4"};
  const int ca = cli::run(args, a, err);
  const int cb = cli::run(args, b, err);
  const bool same = a.str() == b.str() && !a.str().empty();
  return {ca == 0 && cb == 0 && same,
          std::string("exit codes ") + std::to_string(ca) + "/" + std::to_string(cb) +
              (same ? ", identical output" : ", output differs")};
}

}  // namespace

int main() {
  const ScanRun scan = run_scan();
  const SingleModeEnsemble single = single_mode_ensemble();

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"scan endpoints at r = 1/2", [&] { return scan_endpoints(scan); }},
      {"scan monotonicity", [&] { return scan_shape(scan); }},
      {"single-mode purity trade-off identity", [&] { return tradeoff_identity(single); }},
      {"single-mode QFI sandwich", [&] { return sandwich(single); }},
      {"two-mode decomposition consistency", two_mode_consistency},
      {"EPR QFI law", epr_law},
      {"optimal QFI ceiling and equality", ceiling},
      {"optimizer attains the ceiling", attainment},
      {"squeezing budget bound", budget_bound},
      {"decoupling characterization", proposition_one},
      {"conservation under passive networks", conservation},
      {"entropy from purity vs symplectic spectrum", entropy_agreement},
      {"verification report determinism", determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Verdict v = criteria[i].second();
    if (!v.pass) ++failures;
    std::printf("%s %2zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                v.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
