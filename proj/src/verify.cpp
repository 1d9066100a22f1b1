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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "gqfi/entanglement.hpp"
#include "gqfi/errors.hpp"
#include "gqfi/sampling.hpp"
#include "gqfi/search.hpp"

namespace gqfi {

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

constexpr double kNearZero = 1e-6;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over seed and check index.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Check {
 public:
  Check(std::string name, double tolerance) {
    result_.name = std::move(name);
    result_.tolerance = tolerance;
  }

  // Relative error, or absolute when the reference is near zero.
  void compare(double actual, double reference) {
    const double abs_err = std::abs(actual - reference);
    const double err = std::abs(reference) < kNearZero ? abs_err : abs_err / std::abs(reference);
    record(abs_err, err);
  }
  void compare_abs(double actual, double reference) {
    const double abs_err = std::abs(actual - reference);
    record(abs_err, abs_err);
  }
  // Amount by which an inequality is violated; zero when it holds.
  void violation(double amount) {
    const double v = std::max(0.0, amount);
    record(v, v);
  }
  void next_trial() { ++result_.trials; }

  CheckResult finish() {
    result_.pass = std::isfinite(result_.max_error) && result_.max_error <= result_.tolerance;
    return result_;
  }

 private:
  void record(double abs_err, double err) {
    if (std::isnan(abs_err) || std::isnan(err)) {
      result_.max_abs_error = std::numeric_limits<double>::infinity();
      result_.max_error = std::numeric_limits<double>::infinity();
      return;
    }
    result_.max_abs_error = std::max(result_.max_abs_error, abs_err);
    result_.max_error = std::max(result_.max_error, err);
  }

  CheckResult result_;
};

struct Context {
  int trials;
  int max_modes;
  int min_multi() const { return std::min(2, max_modes); }
};

using CheckFn = std::function<CheckResult(Rng&, const Context&)>;

GeneratorWeights unit_weight(int n_modes, int mode) {
  std::vector<double> g(static_cast<std::size_t>(n_modes), 0.0);
  g[static_cast<std::size_t>(mode)] = 1.0;
  return GeneratorWeights(std::move(g));
}

double reduced_purity(const CovarianceMatrix& v, int mode) {
  if (v.n_modes() == 1) return purity(v);
  return purity(reduced_covariance(v, ModeSubset::single(mode, v.n_modes())));
}

double clamp_n(double n) { return std::max(0.0, n); }

std::vector<double> sorted_abs(const SqueezingVector& r) {
  std::vector<double> out;
  for (double x : r.values()) out.push_back(std::abs(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> recovered_squeezing(const CovarianceMatrix& v) {
  std::vector<double> out;
  for (int a = 0; a < v.n_modes(); ++a) out.push_back(std::asinh(std::sqrt(clamp_n(mean_photon_number(v, a)))));
  std::sort(out.begin(), out.end());
  return out;
}

double multiset_mismatch(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

CheckResult check_budget_bound(Rng& rng, const Context& ctx) {
  Check c("budget_bound", 1e-12);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const int n = random_int(rng, 1, ctx.max_modes);
    const SqueezingVector r = random_squeezing(rng, n);
    const GeneratorWeights g = random_weights(rng, n);
    c.violation(optimal_qfi(r, g) - qfi_budget_bound(g, r.max_abs()));
  }
  return c.finish();
}

CheckResult check_budget_equality(Rng& rng, const Context& ctx) {
  Check c("budget_bound_equal_squeezing", 1e-12);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const int n = random_int(rng, 1, ctx.max_modes);
    const double level = rng.uniform(0.0, 1.5);
    std::vector<double> r(static_cast<std::size_t>(n));
    for (double& x : r) x = rng.uniform(0.0, 1.0) < 0.5 ? level : -level;
    const GeneratorWeights g = random_weights(rng, n);
    c.compare(optimal_qfi(SqueezingVector(r), g), qfi_budget_bound(g, level));
  }
  return c.finish();
}

CheckResult check_common_phase_formula(Rng& rng, const Context& ctx) {
  Check c("common_phase_input_sum", 1e-9);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const PureSample s = random_pure_state(rng, 2);
    const CovarianceMatrix v_in = input_state(s.r);
    const double expected = h_sqz(clamp_n(mean_photon_number(v_in, 0))) +
                            h_sqz(clamp_n(mean_photon_number(v_in, 1)));
    c.compare(qfi_common(s.v).value, expected);
  }
  return c.finish();
}

CheckResult check_common_phase_invariance(Rng& rng, const Context& ctx) {
  Check c("common_phase_invariance", 1e-9);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const double weight = rng.uniform(-2.0, 2.0);
    const GeneratorWeights g({weight, weight});
    const PureSample s = random_pure_state(rng, 2);
    c.compare(qfi_general(s.v, g).value, qfi_general(input_state(s.r), g).value);
  }
  return c.finish();
}

CheckResult check_conservation_det(Rng& rng, const Context& ctx) {
  Check c("conservation_det", 1e-9);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const int n = random_int(rng, 1, ctx.max_modes);
    const CovarianceMatrix v = random_mixed_state(rng, n);
    const CovarianceMatrix w = apply(random_passive(n, rng), v);
    c.compare(w.data().determinant(), v.data().determinant());
  }
  return c.finish();
}

CheckResult check_conservation_photons(Rng& rng, const Context& ctx) {
  Check c("conservation_photon_number", 1e-9);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const int n = random_int(rng, 1, ctx.max_modes);
    const CovarianceMatrix v = random_mixed_state(rng, n);
    const CovarianceMatrix w = apply(random_passive(n, rng), v);
    c.compare_abs(total_photon_number(w), total_photon_number(v));
  }
  return c.finish();
}

CheckResult check_conservation_purity_flag(Rng& rng, const Context& ctx) {
  Check c("conservation_purity_flag", 0.0);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const int n = random_int(rng, 1, ctx.max_modes);
    const bool pure = rng.uniform() < 0.5;
    const CovarianceMatrix v =
        pure ? random_pure_state(rng, n).v : random_mixed_state(rng, n);
    const CovarianceMatrix w = apply(random_passive(n, rng), v);
    const ValidationReport before = validate(v);
    const ValidationReport after = validate(w);
    c.violation(before.pure == after.pure && before.physical == after.physical ? 0.0 : 1.0);
  }
  return c.finish();
}

CheckResult check_conservation_spectrum(Rng& rng, const Context& ctx) {
  Check c("conservation_symplectic_spectrum", 1e-8);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const int n = random_int(rng, 1, ctx.max_modes);
    const CovarianceMatrix v = random_mixed_state(rng, n);
    const CovarianceMatrix w = apply(random_passive(n, rng), v);
    const std::vector<double> a = symplectic_eigenvalues(v);
    const std::vector<double> b = symplectic_eigenvalues(w);
    for (std::size_t k = 0; k < a.size(); ++k) c.compare(b[k], a[k]);
  }
  return c.finish();
}

CheckResult check_conservation_trace(Rng& rng, const Context& ctx) {
  Check c("conservation_trace", 1e-9);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const int n = random_int(rng, 1, ctx.max_modes);
    const CovarianceMatrix v = random_mixed_state(rng, n);
    const CovarianceMatrix w = apply(random_passive(n, rng), v);
    c.compare(w.data().trace(), v.data().trace());
  }
  return c.finish();
}

CheckResult check_decoupled_entropy(Rng& rng, const Context& ctx) {
  Check c("decoupled_zero_entropy", 1e-8);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const int n = random_int(rng, 2, std::max(2, ctx.max_modes));
    const CovarianceMatrix v =
        apply(random_phase_permutation(rng, n), input_state(random_squeezing(rng, n)));
    if (!is_decoupled(v)) {
      c.violation(std::numeric_limits<double>::infinity());
      continue;
    }
    for (int a = 0; a < n; ++a) c.violation(entanglement_entropy(v, ModeSubset::single(a, n)));
  }
  return c.finish();
}

CheckResult check_entropy_purity(Rng& rng, const Context& ctx) {
  Check c("entropy_purity_agreement", 1e-9);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const PureSample s = random_pure_state(rng, 2);
    for (int a = 0; a < 2; ++a) {
      const ModeSubset mode = ModeSubset::single(a, 2);
      c.compare_abs(entropy_from_purity(purity(reduced_covariance(s.v, mode))),
                    entanglement_entropy(s.v, mode));
    }
  }
  return c.finish();
}

CheckResult check_entropy_symmetry(Rng& rng, const Context& ctx) {
  Check c("entropy_schmidt_symmetry", 1e-9);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const int n = random_int(rng, 2, std::max(2, ctx.max_modes));
    const PureSample s = random_pure_state(rng, n);
    std::vector<int> picked;
    const std::vector<int> perm = rng.permutation(n);
    const int k = random_int(rng, 1, n - 1);
    picked.assign(perm.begin(), perm.begin() + k);
    std::sort(picked.begin(), picked.end());
    const ModeSubset subset(picked, n);
    c.compare_abs(entanglement_entropy(s.v, subset), entanglement_entropy(s.v, subset.complement()));
  }
  return c.finish();
}

CheckResult check_epr_law(Rng& rng, const Context& ctx) {
  Check c("epr_law", 1e-9);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const double r = rng.uniform(0.05, 1.5);
    const GeneratorWeights g = random_weights(rng, 2);
    const CovarianceMatrix v = entangling_pipeline_state(r, std::numbers::pi / 2);
    const double n = std::sinh(r) * std::sinh(r);
    c.compare(qfi_general(v, g).value, qfi_epr(g, n));
  }
  return c.finish();
}

CheckResult check_from_unitary(Rng& rng, const Context& ctx) {
  Check c("from_unitary_homomorphism", 1e-10);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const int n = random_int(rng, 1, ctx.max_modes);
    const ComplexMatrix u1 = haar_unitary(n, rng);
    const ComplexMatrix u2 = haar_unitary(n, rng);
    const Matrix lhs = compose(from_unitary(u2), from_unitary(u1)).data();
    const Matrix rhs = from_unitary(u2 * u1).data();
    c.violation((lhs - rhs).cwiseAbs().maxCoeff());
  }
  return c.finish();
}

CheckResult check_group_property(Rng& rng, const Context& ctx) {
  Check c("group_property", 1e-10);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const int n = random_int(rng, 1, ctx.max_modes);
    const CovarianceMatrix v = random_pure_state(rng, n, 1.0).v;
    const PassiveTransform k1 = random_passive(n, rng);
    const PassiveTransform k2 = random_passive(n, rng);
    const Matrix lhs = apply(k2, apply(k1, v)).data();
    const Matrix rhs = apply(compose(k2, k1), v).data();
    c.violation((lhs - rhs).cwiseAbs().maxCoeff());
  }
  return c.finish();
}

CheckResult check_mean_photon(Rng& rng, const Context& ctx) {
  Check c("mean_photon_sinh2", 1e-9);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const int n = random_int(rng, 1, ctx.max_modes);
    const SqueezingVector r = random_squeezing(rng, n, 3.0);
    const CovarianceMatrix v = input_state(r);
    for (int a = 0; a < n; ++a) {
      const double s = std::sinh(r[a]);
      c.compare(mean_photon_number(v, a), s * s);
    }
  }
  return c.finish();
}

CheckResult check_prop1_constructive(Rng& rng, const Context& ctx) {
  Check c("prop1_constructive", 1e-6);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const int n = random_int(rng, 1, ctx.max_modes);
    const SqueezingVector r = random_squeezing(rng, n);
    const CovarianceMatrix v = apply(random_phase_permutation(rng, n), input_state(r));
    if (!is_decoupled(v)) {
      c.violation(std::numeric_limits<double>::infinity());
      continue;
    }
    c.violation(multiset_mismatch(recovered_squeezing(v), sorted_abs(r)));
  }
  return c.finish();
}

CheckResult check_prop1_converse(Rng& rng, const Context& ctx) {
  // Mix of Haar networks (essentially never decoupled), phase/permutation
  // networks, and networks that mix only equally squeezed inputs. Every state
  // flagged as decoupled must carry the input squeezing multiset.
  Check c("prop1_converse", 1e-6);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const int n = random_int(rng, 2, 3);
    std::vector<double> r(static_cast<std::size_t>(n));
    for (double& x : r) x = rng.uniform(-1.5, 1.5);
    PassiveTransform k = PassiveTransform::identity(n);
    switch (rng.index(3)) {
      case 0:
        k = random_passive(n, rng);
        break;
      case 1:
        k = random_phase_permutation(rng, n);
        break;
      default: {
        // Equal squeezing on the first two inputs; mix only those.
        r[1] = r[0];
        // Real rotations only: complex phases would rotate the squeezing axes
        // differently on the two modes and couple them.
        k = compose(random_phase_permutation(rng, n),
                    beam_splitter(n, 0, 1, rng.uniform(0.0, std::numbers::pi)));
        break;
      }
    }
    const SqueezingVector sv(r);
    const CovarianceMatrix v = apply(k, input_state(sv));
    if (is_decoupled(v, 1e-9)) c.violation(multiset_mismatch(recovered_squeezing(v), sorted_abs(sv)));
  }
  return c.finish();
}

CheckResult check_scan_shape(Rng&, const Context&) {
  Check c("scan_monotonicity", 1e-10);
  const std::vector<ScanRow> rows = scan_entanglement(0.5, 64);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    c.next_trial();
    c.violation(rows[i - 1].entropy - rows[i].entropy);
    c.violation(rows[i].qfi_differential - rows[i - 1].qfi_differential);
  }
  return c.finish();
}

CheckResult check_single_mode_block(Rng& rng, const Context& ctx) {
  Check c("single_mode_block_formula", 1e-10);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const int n = random_int(rng, 1, ctx.max_modes);
    const PureSample s = random_pure_state(rng, n);
    const int mode = random_int(rng, 0, n - 1);
    const Eigen::Matrix2d block = s.v.block(mode, mode);
    const double split = 0.5 * (block.trace() * block.trace() - 2.0 * block.determinant()) - 1.0;
    const double general = qfi_general(s.v, unit_weight(n, mode)).value;
    c.compare(qfi_single_mode(s.v, mode).value, general);
    c.compare(split, general);
  }
  return c.finish();
}

CheckResult check_single_mode_epr_lower(Rng& rng, const Context& ctx) {
  Check c("single_mode_lower_bound_attained", 1e-9);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const double r = rng.uniform(0.05, 1.5);
    const CovarianceMatrix v = entangling_pipeline_state(r, std::numbers::pi / 2);
    const double n1 = mean_photon_number(v, 0);
    c.compare(qfi_general(v, unit_weight(2, 0)).value, qfi_single_mode_bounds(n1).lower);
  }
  return c.finish();
}

CheckResult check_single_mode_sandwich(Rng& rng, const Context& ctx) {
  Check c("single_mode_sandwich", 1e-9);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const int n = random_int(rng, ctx.min_multi(), ctx.max_modes);
    const PureSample s = random_pure_state(rng, n);
    const double h = qfi_general(s.v, unit_weight(n, 0)).value;
    const QfiBounds b = qfi_single_mode_bounds(clamp_n(mean_photon_number(s.v, 0)));
    c.violation(std::max(b.lower - h, h - b.upper));
  }
  return c.finish();
}

CheckResult check_single_mode_tradeoff(Rng& rng, const Context& ctx) {
  Check c("single_mode_tradeoff", 1e-9);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const int n = random_int(rng, ctx.min_multi(), ctx.max_modes);
    const PureSample s = random_pure_state(rng, n);
    const int mode = random_int(rng, 0, n - 1);
    const double h = qfi_general(s.v, unit_weight(n, mode)).value;
    const double tradeoff = qfi_single_mode_tradeoff(clamp_n(mean_photon_number(s.v, mode)),
                                                     reduced_purity(s.v, mode));
    c.compare(h, tradeoff);
  }
  return c.finish();
}

CheckResult check_symplectic_det(Rng& rng, const Context& ctx) {
  Check c("symplectic_product_det", 1e-9);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const int n = random_int(rng, 1, ctx.max_modes);
    const CovarianceMatrix v = random_mixed_state(rng, n);
    double prod = 1.0;
    for (double nu : symplectic_eigenvalues(v)) prod *= nu;
    c.compare(prod, std::sqrt(v.data().determinant()));
  }
  return c.finish();
}

CheckResult check_theorem1_ceiling(Rng& rng, const Context& ctx) {
  Check c("theorem1_ceiling", 1e-9);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const int n = random_int(rng, 1, ctx.max_modes);
    const PureSample s = random_pure_state(rng, n);
    const GeneratorWeights g =
        rng.uniform() < 0.5 ? random_weights(rng, n) : random_tied_weights(rng, n);
    c.violation(qfi_general(s.v, g).value - optimal_qfi(s.r, g));
  }
  return c.finish();
}

CheckResult check_theorem1_equality(Rng& rng, const Context& ctx) {
  Check c("theorem1_equality", 1e-9);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const int n = random_int(rng, 1, ctx.max_modes);
    const SqueezingVector r = random_squeezing(rng, n);
    const GeneratorWeights g = random_tied_weights(rng, n);
    const std::vector<int> pairing = proper_order_pairing(r, g);
    std::vector<double> ordered(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) ordered[static_cast<std::size_t>(a)] = r[pairing[static_cast<std::size_t>(a)]];
    const CovarianceMatrix v_in = input_state(SqueezingVector(ordered));
    const CovarianceMatrix v = apply(random_block_passive(rng, g.values()), v_in);
    c.compare(qfi_general(v, g).value, optimal_qfi(r, g));
  }
  return c.finish();
}

CheckResult check_theorem1_strictness(Rng& rng, const Context& ctx) {
  // Inter-group coupler on a properly ordered decoupled state with distinct
  // weights and distinct squeezing magnitudes must lose more than 1e-6.
  Check c("theorem1_strictness", 0.0);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const int n = random_int(rng, 2, std::max(2, ctx.max_modes));
    std::vector<double> g(static_cast<std::size_t>(n));
    std::vector<double> r(static_cast<std::size_t>(n));
    const std::vector<int> perm_g = rng.permutation(n);
    const std::vector<int> perm_r = rng.permutation(n);
    for (int a = 0; a < n; ++a) {
      g[static_cast<std::size_t>(a)] = 0.5 * (perm_g[static_cast<std::size_t>(a)] + 1);
      r[static_cast<std::size_t>(a)] = 0.1 + 0.2 * perm_r[static_cast<std::size_t>(a)];
    }
    const SqueezingVector sv(r);
    const GeneratorWeights gw(g);
    const std::vector<int> pairing = proper_order_pairing(sv, gw);
    std::vector<double> ordered(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) ordered[static_cast<std::size_t>(a)] = r[static_cast<std::size_t>(pairing[static_cast<std::size_t>(a)])];
    const CovarianceMatrix optimal_state = input_state(SqueezingVector(ordered));
    const int a = random_int(rng, 0, n - 1);
    int b = random_int(rng, 0, n - 2);
    if (b >= a) ++b;
    const CovarianceMatrix perturbed = apply(beam_splitter(n, a, b, 0.3), optimal_state);
    const double drop = qfi_general(optimal_state, gw).value - qfi_general(perturbed, gw).value;
    c.violation(1e-6 - drop);
  }
  return c.finish();
}

CheckResult check_transform_invariants(Rng& rng, const Context& ctx) {
  Check c("transform_invariants", 1e-10);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const int n = random_int(rng, 1, ctx.max_modes);
    MeshParams p = MeshParams::zeros(n);
    for (auto& angles : p.rotation_angles) {
      angles.theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
      angles.phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
    for (double& phase : p.output_phases) phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
    for (const Matrix& k : {random_passive(n, rng).data(), mesh_to_transform(p).data()}) {
      const PassiveDefect d = passive_defect(k);
      c.violation(std::max(d.orthogonal, d.symplectic));
    }
  }
  return c.finish();
}

CheckResult check_two_mode_consistency(Rng& rng, const Context& ctx) {
  Check c("two_mode_consistency", 1e-9);
  for (int t = 0; t < ctx.trials; ++t) {
    c.next_trial();
    const PureSample s = random_pure_state(rng, 2);
    const GeneratorWeights g = random_weights(rng, 2);
    const double direct = qfi_general(s.v, g).value;
    const double assembled = qfi_two_mode_decomposition(s.v, g).combined;
    const double tradeoff = qfi_two_mode_tradeoff(g, s.r, s.k);
    c.compare(assembled, direct);
    c.compare(tradeoff, direct);
    c.compare(tradeoff, assembled);
  }
  return c.finish();
}

}  // namespace

VerificationReport verify_suite(std::uint64_t seed, int trials, int max_modes) {
  if (trials < 1) throw InvalidArgument("trials must be at least 1");
  if (max_modes < 1 || max_modes > kMaxVerifyModes) {
    throw InvalidArgument("max_modes must lie in [1, 8]");
  }
  // Append-only: the index of each check seeds its generator.
  const std::vector<CheckFn> checks = {
      check_budget_bound,          check_budget_equality,        check_common_phase_formula,
      check_common_phase_invariance, check_conservation_det,     check_conservation_photons,
      check_conservation_purity_flag, check_conservation_spectrum, check_conservation_trace,
      check_decoupled_entropy,     check_entropy_purity,         check_entropy_symmetry,
      check_epr_law,               check_from_unitary,           check_group_property,
      check_mean_photon,           check_prop1_constructive,     check_prop1_converse,
      check_scan_shape,            check_single_mode_block,      check_single_mode_epr_lower,
      check_single_mode_sandwich,  check_single_mode_tradeoff,   check_symplectic_det,
      check_theorem1_ceiling,      check_theorem1_equality,      check_theorem1_strictness,
      check_transform_invariants,  check_two_mode_consistency,
  };
  VerificationReport report;
  report.seed = seed;
  report.trials = trials;
  report.max_modes = max_modes;
  const Context ctx{trials, max_modes};
  for (std::size_t i = 0; i < checks.size(); ++i) {
    Rng rng(mix_seed(seed, i));
    report.checks.push_back(checks[i](rng, ctx));
  }
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return report;
}

}  // namespace gqfi
