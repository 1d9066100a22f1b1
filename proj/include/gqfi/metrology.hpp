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

#ifndef GQFI_METROLOGY_HPP
#define GQFI_METROLOGY_HPP

// Quantum Fisher information of zero-mean Gaussian states under phase-shift
// generators, with the single-mode and two-mode trade-off forms and the
// optimal value over passive networks.
//
// The generator gives mode a a phase g_a * phi. In quadrature form it is
// G = diag(g_1, g_1, ..., g_N, g_N). None of the formulas depend on the
// working point phi_0.

#include <array>
#include <string_view>
#include <vector>

#include "gqfi/gaussian_core.hpp"
#include "gqfi/transforms.hpp"

namespace gqfi {

class GeneratorWeights {
 public:
  explicit GeneratorWeights(std::vector<double> g);

  int size() const { return static_cast<int>(g_.size()); }
  double operator[](int a) const { return g_[static_cast<std::size_t>(a)]; }
  const std::vector<double>& values() const { return g_; }
  bool all_zero() const;

  // diag(g_1, g_1, ..., g_N, g_N)
  Matrix matrix() const;

 private:
  std::vector<double> g_;
};

enum class Exactness { kExactPure, kUpperBoundMixed };

std::string_view to_string(Exactness e);

// For mixed states the trace formula bounds the QFI from above.
struct QfiResult {
  double value = 0.0;
  Exactness exactness = Exactness::kExactPure;
};

// Negative round-off down to this magnitude is clamped to zero.
inline constexpr double kNegativeQfiSlack = 1e-9;

// H = Tr((V G)^2 - G^2) / 2. Throws InvalidState for unphysical V.
QfiResult qfi_general(const CovarianceMatrix& v, const GeneratorWeights& g,
                      const Tolerances& tol = {});

// QFI of a single-mode squeezed vacuum with mean photon number n: 8n^2 + 8n.
double h_sqz(double n);

// Phase on one mode only: H = ||V_a||_F^2 / 2 - 1 over the mode's 2x2 block.
QfiResult qfi_single_mode(const CovarianceMatrix& v, int mode, const Tolerances& tol = {});

// H_sqz(n1) - (1/mu^2 - 1), with mu the purity of the phase-shifted mode.
double qfi_single_mode_tradeoff(double n1, double mu);

struct QfiBounds {
  double lower = 0.0;  // H_sqz(n1) / 2, reached by thermal reductions
  double upper = 0.0;  // H_sqz(n1), reached by unentangled modes
};
QfiBounds qfi_single_mode_bounds(double n1);

// Common phase on a two-mode state: Tr(V^2)/2 - 2.
QfiResult qfi_common(const CovarianceMatrix& v, const Tolerances& tol = {});

struct TwoModeDecomposition {
  double h1 = 0.0;
  double h2 = 0.0;
  double h_com = 0.0;
  // (g1^2 - g1 g2) h1 + (g2^2 - g1 g2) h2 + g1 g2 h_com
  double combined = 0.0;
};
TwoModeDecomposition qfi_two_mode_decomposition(const CovarianceMatrix& v,
                                                const GeneratorWeights& g,
                                                const Tolerances& tol = {});

// Two-mode trade-off evaluated from photon numbers before (n_in) and after
// (n_rot) the network and the purity mu of either single-mode reduction.
double qfi_two_mode_tradeoff(const GeneratorWeights& g, std::array<double, 2> n_in,
                             std::array<double, 2> n_rot, double mu);

struct TwoModeTradeoffInputs {
  std::array<double, 2> n_in{};
  std::array<double, 2> n_rot{};
  double mu = 1.0;
};

// Derives the trade-off inputs for V = K input_state(r) K^T. mu is taken from
// mode 0; both reductions of a pure two-mode state share it.
TwoModeTradeoffInputs two_mode_tradeoff_inputs(const SqueezingVector& r,
                                               const PassiveTransform& k);
double qfi_two_mode_tradeoff(const GeneratorWeights& g, const SqueezingVector& r,
                             const PassiveTransform& k);

// Two-mode squeezed (EPR) state with n photons per mode: (g1 + g2)^2 / 2 * H_sqz(n).
double qfi_epr(const GeneratorWeights& g, double n);

// Assignment of input squeezers to modes that maximizes the QFI. Modes are
// ranked by g_a^2 (descending, ties by index) and inputs by |r| (descending,
// ties by index); result[a] is the input index routed to mode a.
std::vector<int> proper_order_pairing(const SqueezingVector& r, const GeneratorWeights& g);

// Maximum of qfi_general over passive networks acting on input_state(r):
// 2 * sum_a g_a^2 sinh^2(2 r_a) under the pairing above.
double optimal_qfi(const SqueezingVector& r, const GeneratorWeights& g);

// ||G||_F^2 sinh^2(2 r_max) = 2 (sum_a g_a^2) sinh^2(2 r_max).
double qfi_budget_bound(const GeneratorWeights& g, double r_max);

}  // namespace gqfi

#endif  // GQFI_METROLOGY_HPP
