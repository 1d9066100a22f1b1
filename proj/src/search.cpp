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

#include "gqfi/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gqfi/entanglement.hpp"
#include "gqfi/errors.hpp"
#include "gqfi/nelder_mead.hpp"
#include "gqfi/random.hpp"

namespace gqfi {

CovarianceMatrix entangling_pipeline_state(double r, double theta) {
  const PassiveTransform k =
      compose(beam_splitter(2, 0, 1, std::numbers::pi / 4), phase_shift(2, 0, theta));
  return apply(k, input_state(SqueezingVector({r, r})));
}

std::vector<ScanRow> scan_entanglement(double r, int n_points) {
  if (n_points < 2) throw InvalidArgument("a scan needs at least two points");
  if (!std::isfinite(r) || r < 0.0) throw InvalidArgument("scan squeezing must be non-negative");
  const GeneratorWeights single({1.0, 0.0});
  const GeneratorWeights common({1.0, 1.0});
  const GeneratorWeights differential({1.0, -1.0});
  const ModeSubset first = ModeSubset::single(0, 2);

  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    ScanRow row;
    // Exact endpoints: i = n-1 gives pi/2 without accumulated round-off.
    row.theta = (std::numbers::pi / 2) * static_cast<double>(i) / static_cast<double>(n_points - 1);
    const CovarianceMatrix v = entangling_pipeline_state(r, row.theta);
    row.entropy = entanglement_entropy(v, first);
    row.qfi_single = qfi_general(v, single).value;
    row.qfi_common = qfi_general(v, common).value;
    row.qfi_differential = qfi_general(v, differential).value;
    rows.push_back(row);
  }
  return rows;
}

double inter_group_coupling(const CovarianceMatrix& v, const GeneratorWeights& g) {
  if (g.size() != v.n_modes()) throw InvalidArgument("generator and state mode counts differ");
  double worst = 0.0;
  for (int a = 0; a < v.n_modes(); ++a) {
    for (int b = a + 1; b < v.n_modes(); ++b) {
      if (g[a] != g[b]) worst = std::max(worst, v.block(a, b).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

namespace {

MeshParams params_from_vector(int n_modes, const Vector& x) {
  MeshParams p = MeshParams::zeros(n_modes);
  for (std::size_t c = 0; c < p.rotation_angles.size(); ++c) {
    p.rotation_angles[c].theta = x(static_cast<Eigen::Index>(2 * c));
    p.rotation_angles[c].phi = x(static_cast<Eigen::Index>(2 * c + 1));
  }
  return p;
}

// Trace formula without the validation pass; the state is physical by
// construction inside the optimizer.
double trace_qfi(const Matrix& v, const Vector& d) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    for (Eigen::Index j = 0; j < v.cols(); ++j) acc += v(i, j) * v(i, j) * d(i) * d(j);
  }
  return 0.5 * (acc - d.squaredNorm());
}

}  // namespace

OptimizationResult maximize_qfi(const SqueezingVector& r, const GeneratorWeights& g,
                                const OptimizerOptions& opts) {
  if (r.size() != g.size()) throw InvalidArgument("squeezing and weight lengths differ");
  if (r.size() > kMaxVerifyModes) throw InvalidArgument("optimizer supports at most 8 modes");
  if (opts.restarts < 1) throw InvalidArgument("restarts must be at least 1");
  if (opts.max_iters < 1) throw InvalidArgument("max_iters must be at least 1");

  const int n = r.size();
  const Matrix v_in = input_state(r).data();
  const Vector d = g.matrix().diagonal();
  const auto dim = static_cast<Eigen::Index>(2 * MeshParams::coupler_count(n));

  auto objective = [&](const Vector& x) {
    const Matrix k = mesh_to_transform(params_from_vector(n, x)).data();
    return -trace_qfi(k * v_in * k.transpose(), d);
  };

  OptimizationResult out;
  out.theoretical_max = optimal_qfi(r, g);
  const double stop_gap = 1e-10 * std::max(1.0, out.theoretical_max);

  Rng rng(opts.seed);
  Vector best_x = Vector::Zero(dim);
  double best_f = objective(best_x);
  NelderMeadOptions nm;
  nm.max_iters = opts.max_iters;
  nm.xtol = opts.xtol;
  nm.ftol = opts.ftol;

  for (int restart = 0; restart < opts.restarts; ++restart) {
    Vector x0 = Vector::Zero(dim);
    if (restart > 0) {
      for (Eigen::Index i = 0; i < dim; ++i) x0(i) = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
    nm.initial_step = 0.25;
    NelderMeadResult run = nelder_mead_minimize(objective, x0, nm);
    out.iterations += run.iterations;
    // Re-seed the simplex around the incumbent until it stops moving.
    for (int polish = 0; polish < 4; ++polish) {
      nm.initial_step = 0.05;
      NelderMeadResult again = nelder_mead_minimize(objective, run.x, nm);
      out.iterations += again.iterations;
      const bool improved = again.f < run.f - opts.ftol;
      if (again.f < run.f) run = again;
      if (!improved) break;
    }
    out.restarts_used = restart + 1;
    if (run.f < best_f) {
      best_f = run.f;
      best_x = run.x;
    }
    if (out.theoretical_max + best_f <= stop_gap) break;
  }

  out.best_params = params_from_vector(n, best_x);
  const CovarianceMatrix best_state = apply(mesh_to_transform(out.best_params), input_state(r));
  out.best_qfi = qfi_general(best_state, g).value;
  out.gap = out.theoretical_max - out.best_qfi;
  const double scale = std::max(1.0, best_state.data().cwiseAbs().maxCoeff());
  out.final_state_decoupled_across_g_groups = inter_group_coupling(best_state, g) <= 1e-6 * scale;
  return out;
}

}  // namespace gqfi
