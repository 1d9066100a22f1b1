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

#include "gqfi/metrology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gqfi/entanglement.hpp"
#include "gqfi/errors.hpp"

namespace gqfi {

GeneratorWeights::GeneratorWeights(std::vector<double> g) : g_(std::move(g)) {
  if (g_.empty()) throw InvalidArgument("generator weights must cover at least one mode");
  for (double x : g_) {
    if (!std::isfinite(x)) throw InvalidArgument("generator weight is not finite");
  }
}

bool GeneratorWeights::all_zero() const {
  return std::all_of(g_.begin(), g_.end(), [](double x) { return x == 0.0; });
}

Matrix GeneratorWeights::matrix() const {
  Vector diag(2 * size());
  for (int a = 0; a < size(); ++a) {
    diag(2 * a) = g_[static_cast<std::size_t>(a)];
    diag(2 * a + 1) = g_[static_cast<std::size_t>(a)];
  }
  return diag.asDiagonal().toDenseMatrix();
}

std::string_view to_string(Exactness e) {
  switch (e) {
    case Exactness::kExactPure:
      return "exact-pure";
    case Exactness::kUpperBoundMixed:
      return "upper-bound-mixed";
  }
  return "unknown";
}

namespace {

double clamp_qfi(double h) {
  if (h >= 0.0) return h;
  if (h >= -kNegativeQfiSlack) return 0.0;
  throw NumericalFailure("QFI evaluated to " + std::to_string(h));
}

Exactness check_state(const CovarianceMatrix& v, const Tolerances& tol) {
  const ValidationReport report = validate(v, tol);
  if (!report.physical) throw InvalidState("covariance matrix is not physical");
  return report.pure ? Exactness::kExactPure : Exactness::kUpperBoundMixed;
}

void check_n(double n, const char* what) {
  if (!std::isfinite(n) || n < 0.0) {
    throw InvalidArgument(std::string(what) + " must be a non-negative photon number");
  }
}

void check_mu(double mu) {
  if (!std::isfinite(mu) || mu <= 0.0 || mu > 1.0) {
    throw InvalidArgument("purity must lie in (0, 1]");
  }
}

double sinh2(double x) {
  const double s = std::sinh(x);
  return s * s;
}

}  // namespace

QfiResult qfi_general(const CovarianceMatrix& v, const GeneratorWeights& g,
                      const Tolerances& tol) {
  if (g.size() != v.n_modes()) throw InvalidArgument("generator and state mode counts differ");
  const Exactness exactness = check_state(v, tol);

  // G is diagonal, so Tr((VG)^2) = sum_ij V_ij^2 G_ii G_jj.
  const Vector d = g.matrix().diagonal();
  const Matrix vg = v.data().array().colwise() * d.array();
  double trace_vg2 = 0.0;
  for (Eigen::Index i = 0; i < vg.rows(); ++i) {
    for (Eigen::Index j = 0; j < vg.cols(); ++j) trace_vg2 += vg(i, j) * vg(j, i);
  }
  const double h = 0.5 * (trace_vg2 - d.squaredNorm());
  return {clamp_qfi(h), exactness};
}

double h_sqz(double n) {
  check_n(n, "n");
  return 8.0 * n * n + 8.0 * n;
}

QfiResult qfi_single_mode(const CovarianceMatrix& v, int mode, const Tolerances& tol) {
  if (mode < 0 || mode >= v.n_modes()) throw InvalidArgument("mode index out of range");
  const Exactness exactness = check_state(v, tol);
  const Eigen::Matrix2d block = v.block(mode, mode);
  return {clamp_qfi(0.5 * block.squaredNorm() - 1.0), exactness};
}

double qfi_single_mode_tradeoff(double n1, double mu) {
  check_n(n1, "n1");
  check_mu(mu);
  return h_sqz(n1) - (1.0 / (mu * mu) - 1.0);
}

QfiBounds qfi_single_mode_bounds(double n1) {
  check_n(n1, "n1");
  const double upper = h_sqz(n1);
  return {0.5 * upper, upper};
}

QfiResult qfi_common(const CovarianceMatrix& v, const Tolerances& tol) {
  if (v.n_modes() != 2) throw InvalidArgument("common-phase QFI is defined for two modes");
  const Exactness exactness = check_state(v, tol);
  return {clamp_qfi(0.5 * v.data().squaredNorm() - 2.0), exactness};
}

TwoModeDecomposition qfi_two_mode_decomposition(const CovarianceMatrix& v,
                                                const GeneratorWeights& g,
                                                const Tolerances& tol) {
  if (v.n_modes() != 2 || g.size() != 2) {
    throw InvalidArgument("two-mode decomposition needs a two-mode state and two weights");
  }
  TwoModeDecomposition out;
  out.h1 = qfi_single_mode(v, 0, tol).value;
  out.h2 = qfi_single_mode(v, 1, tol).value;
  out.h_com = qfi_common(v, tol).value;
  const double g1 = g[0];
  const double g2 = g[1];
  out.combined = (g1 * g1 - g1 * g2) * out.h1 + (g2 * g2 - g1 * g2) * out.h2 + g1 * g2 * out.h_com;
  return out;
}

double qfi_two_mode_tradeoff(const GeneratorWeights& g, std::array<double, 2> n_in,
                             std::array<double, 2> n_rot, double mu) {
  if (g.size() != 2) throw InvalidArgument("two-mode trade-off needs two weights");
  check_mu(mu);
  const double g1 = g[0];
  const double g2 = g[1];
  return g1 * g2 * (h_sqz(n_in[0]) + h_sqz(n_in[1])) + (g1 * g1 - g1 * g2) * h_sqz(n_rot[0]) +
         (g2 * g2 - g1 * g2) * h_sqz(n_rot[1]) - (g1 - g2) * (g1 - g2) * (1.0 / (mu * mu) - 1.0);
}

TwoModeTradeoffInputs two_mode_tradeoff_inputs(const SqueezingVector& r,
                                               const PassiveTransform& k) {
  if (r.size() != 2 || k.n_modes() != 2) {
    throw InvalidArgument("two-mode trade-off needs two input squeezers and a two-mode network");
  }
  const CovarianceMatrix v_in = input_state(r);
  const CovarianceMatrix v = apply(k, v_in);
  TwoModeTradeoffInputs out;
  for (int a = 0; a < 2; ++a) {
    // Clamp tiny negative round-off on vacuum inputs.
    out.n_in[static_cast<std::size_t>(a)] = std::max(0.0, mean_photon_number(v_in, a));
    out.n_rot[static_cast<std::size_t>(a)] = std::max(0.0, mean_photon_number(v, a));
  }
  out.mu = purity(reduced_covariance(v, ModeSubset::single(0, 2)));
  return out;
}

double qfi_two_mode_tradeoff(const GeneratorWeights& g, const SqueezingVector& r,
                             const PassiveTransform& k) {
  const TwoModeTradeoffInputs in = two_mode_tradeoff_inputs(r, k);
  return qfi_two_mode_tradeoff(g, in.n_in, in.n_rot, in.mu);
}

double qfi_epr(const GeneratorWeights& g, double n) {
  if (g.size() != 2) throw InvalidArgument("EPR QFI needs two weights");
  const double s = g[0] + g[1];
  return 0.5 * s * s * h_sqz(n);
}

std::vector<int> proper_order_pairing(const SqueezingVector& r, const GeneratorWeights& g) {
  if (r.size() != g.size()) throw InvalidArgument("squeezing and weight lengths differ");
  const auto n = static_cast<std::size_t>(r.size());
  std::vector<int> modes(n);
  std::vector<int> inputs(n);
  std::iota(modes.begin(), modes.end(), 0);
  std::iota(inputs.begin(), inputs.end(), 0);
  std::stable_sort(modes.begin(), modes.end(),
                   [&](int a, int b) { return g[a] * g[a] > g[b] * g[b]; });
  std::stable_sort(inputs.begin(), inputs.end(),
                   [&](int a, int b) { return std::abs(r[a]) > std::abs(r[b]); });
  std::vector<int> pairing(n);
  for (std::size_t k = 0; k < n; ++k) pairing[static_cast<std::size_t>(modes[k])] = inputs[k];
  return pairing;
}

double optimal_qfi(const SqueezingVector& r, const GeneratorWeights& g) {
  const std::vector<int> pairing = proper_order_pairing(r, g);
  double h = 0.0;
  for (int a = 0; a < g.size(); ++a) {
    h += g[a] * g[a] * sinh2(2.0 * r[pairing[static_cast<std::size_t>(a)]]);
  }
  return 2.0 * h;
}

double qfi_budget_bound(const GeneratorWeights& g, double r_max) {
  if (!std::isfinite(r_max) || r_max < 0.0) throw InvalidArgument("r_max must be non-negative");
  double frobenius2 = 0.0;
  for (double x : g.values()) frobenius2 += 2.0 * x * x;
  return frobenius2 * sinh2(2.0 * r_max);
}

}  // namespace gqfi
