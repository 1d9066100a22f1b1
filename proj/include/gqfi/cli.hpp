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

#ifndef GQFI_CLI_HPP
#define GQFI_CLI_HPP

// Command-line front end: network files, subcommands, and report formats.
//
// Network file (JSON, UTF-8):
//   {
//     "n_modes": 2,
//     "input_squeezing": [0.5, 0.5],          // or "covariance": [[...], ...]
//     "elements": [                           // applied first to last
//       {"kind": "phase", "mode": 0, "theta": 1.5707963267948966},
//       {"kind": "bs", "mode_a": 0, "mode_b": 1, "eta": 0.7853981633974483},
//       {"kind": "random_passive", "seed": 42},
//       {"kind": "mesh", "rotation_angles": [[0.1, 0.2]], "output_phases": [0, 0]}
//     ]
//   }
// Exactly one of input_squeezing / covariance is required; unknown keys and
// kinds are rejected. Angles are radians.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gqfi/gaussian_core.hpp"
#include "gqfi/search.hpp"
#include "gqfi/transforms.hpp"

namespace gqfi::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kUnphysicalState = 3,
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PhaseElement {
  int mode = 0;
  double theta = 0.0;
};
struct BeamSplitterElement {
  int mode_a = 0;
  int mode_b = 1;
  double eta = 0.0;
};
struct RandomPassiveElement {
  std::uint64_t seed = 0;
};
struct MeshElement {
  MeshParams params;
};
using NetworkElement =
    std::variant<PhaseElement, BeamSplitterElement, RandomPassiveElement, MeshElement>;

struct NetworkSpec {
  int n_modes = 0;
  std::optional<std::vector<double>> input_squeezing;
  std::optional<Matrix> covariance;
  std::vector<NetworkElement> elements;
};

NetworkSpec parse_network(const std::string& json_text);
NetworkSpec load_network(const std::filesystem::path& path);
std::string network_to_json(const NetworkSpec& spec);

// Product of the elements, first element acting first.
PassiveTransform network_transform(const NetworkSpec& spec);
CovarianceMatrix build_state(const NetworkSpec& spec);

// Nested row arrays at full round-trip precision.
std::string covariance_to_json(const CovarianceMatrix& v);
CovarianceMatrix covariance_from_json(const std::string& json_text);

// Shortest representation with at most 12 significant digits.
std::string format_csv_number(double x);
std::string scan_to_csv(const std::vector<ScanRow>& rows);

std::string optimization_to_json(const SqueezingVector& r, const GeneratorWeights& g,
                                 const OptimizerOptions& opts, const OptimizationResult& result);
std::string verification_to_json(const VerificationReport& report);

int cmd_qfi(const std::filesystem::path& network_file, const std::vector<double>& g,
            const std::string& output, std::ostream& out, std::ostream& err);
int cmd_scan(double r, int points, const std::string& out_csv, std::ostream& out,
             std::ostream& err);
int cmd_optimize(const std::vector<double>& r, const std::vector<double>& g,
                 const OptimizerOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(std::uint64_t seed, int trials, int max_modes, std::ostream& out,
               std::ostream& err);

// Parses argv (without the program name) and dispatches to a subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gqfi::cli

#endif  // GQFI_CLI_HPP
