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

#ifndef GQFI_SEARCH_HPP
#define GQFI_SEARCH_HPP

// Entanglement scans, numerical QFI maximization over passive meshes, and the
// seeded randomized verification suite.

#include <cstdint>
#include <string>
#include <vector>

#include "gqfi/gaussian_core.hpp"
#include "gqfi/metrology.hpp"
#include "gqfi/transforms.hpp"

namespace gqfi {

// Two inputs squeezed by r, a phase theta on mode 0, then a 50/50 beam
// splitter. theta = 0 leaves the inputs untouched, theta = pi/2 produces a
// two-mode squeezed (EPR) state.
CovarianceMatrix entangling_pipeline_state(double r, double theta);

struct ScanRow {
  double theta = 0.0;
  double entropy = 0.0;           // nats, mode 0 vs mode 1
  double qfi_single = 0.0;        // g = (1, 0)
  double qfi_common = 0.0;        // g = (1, 1)
  double qfi_differential = 0.0;  // g = (1, -1)
};

// n_points values of theta spread evenly over [0, pi/2], both ends included.
std::vector<ScanRow> scan_entanglement(double r, int n_points);

struct OptimizerOptions {
  int restarts = 8;
  std::uint64_t seed = 0;
  int max_iters = 20000;  // per simplex run
  double xtol = 1e-10;
  double ftol = 1e-12;
};

struct OptimizationResult {
  MeshParams best_params;
  double best_qfi = 0.0;
  double theoretical_max = 0.0;
  double gap = 0.0;
  int iterations = 0;
  int restarts_used = 0;
  // Inter-mode blocks between modes with different g are below
  // 1e-6 * max(1, max|V_ij|) in the best state.
  bool final_state_decoupled_across_g_groups = false;
};

// Maximizes qfi_general(mesh(p) input_state(r) mesh(p)^T, g) over the coupler
// angles of a rectangular mesh with Nelder-Mead. The first restart starts from
// the identity network, later ones from uniform random angles. Output phases
// commute with the generator and stay at zero. Restarts stop early once the
// gap to optimal_qfi falls below 1e-10 * max(1, optimum).
OptimizationResult maximize_qfi(const SqueezingVector& r, const GeneratorWeights& g,
                                const OptimizerOptions& opts = {});

// Largest inter-mode block entry between modes whose weights differ.
double inter_group_coupling(const CovarianceMatrix& v, const GeneratorWeights& g);

struct CheckResult {
  std::string name;
  int trials = 0;
  double max_abs_error = 0.0;  // raw absolute error (or bound violation)
  double max_error = 0.0;      // metric compared against tolerance
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  int trials = 0;
  int max_modes = 0;
  std::vector<CheckResult> checks;  // sorted by name

  bool all_pass() const;
};

inline constexpr int kMaxVerifyModes = 8;

// Runs every identity and invariant on seeded random instances. Each check
// draws from its own generator seeded from (seed, check index), so the report
// is deterministic. Relative errors are used unless the reference magnitude
// is below 1e-6, in which case the absolute error is used.
VerificationReport verify_suite(std::uint64_t seed, int trials, int max_modes);

}  // namespace gqfi

#endif  // GQFI_SEARCH_HPP
