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

#include "gqfi/sampling.hpp"

#include <map>
#include <numbers>

#include "gqfi/errors.hpp"

namespace gqfi {

int random_int(Rng& rng, int lo, int hi) {
  if (hi < lo) throw InvalidArgument("empty integer range");
  return lo + static_cast<int>(rng.index(static_cast<std::uint64_t>(hi - lo) + 1));
}

SqueezingVector random_squeezing(Rng& rng, int n_modes, double max_abs) {
  std::vector<double> r(static_cast<std::size_t>(n_modes));
  for (double& x : r) x = rng.uniform(-max_abs, max_abs);
  return SqueezingVector(std::move(r));
}

GeneratorWeights random_weights(Rng& rng, int n_modes, double max_abs) {
  std::vector<double> g(static_cast<std::size_t>(n_modes));
  for (double& x : g) x = rng.uniform(-max_abs, max_abs);
  return GeneratorWeights(std::move(g));
}

GeneratorWeights random_tied_weights(Rng& rng, int n_modes) {
  static constexpr double kChoices[] = {2.0, 1.0, -1.0, 0.5, 0.0};
  std::vector<double> g(static_cast<std::size_t>(n_modes));
  for (double& x : g) x = kChoices[rng.index(5)];
  return GeneratorWeights(std::move(g));
}

PassiveTransform random_phase_permutation(Rng& rng, int n_modes) {
  PassiveTransform k = PassiveTransform::identity(n_modes);
  for (int a = 0; a < n_modes; ++a) {
    k = compose(phase_shift(n_modes, a, rng.uniform(0.0, 2.0 * std::numbers::pi)), k);
  }
  return compose(mode_permutation(rng.permutation(n_modes)), k);
}

PassiveTransform random_block_passive(Rng& rng, const std::vector<double>& keys) {
  const auto n = static_cast<Eigen::Index>(keys.size());
  std::map<double, std::vector<Eigen::Index>> groups;
  for (Eigen::Index a = 0; a < n; ++a) groups[keys[static_cast<std::size_t>(a)]].push_back(a);
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  for (const auto& [key, modes] : groups) {
    const auto m = static_cast<int>(modes.size());
    const ComplexMatrix block = haar_unitary(m, rng);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        u(modes[static_cast<std::size_t>(i)], modes[static_cast<std::size_t>(j)]) = block(i, j);
      }
    }
  }
  return from_unitary(u);
}

PureSample random_pure_state(Rng& rng, int n_modes, double max_abs_r) {
  SqueezingVector r = random_squeezing(rng, n_modes, max_abs_r);
  PassiveTransform k = random_passive(n_modes, rng);
  CovarianceMatrix v = apply(k, input_state(r));
  return {std::move(r), std::move(k), std::move(v)};
}

CovarianceMatrix random_mixed_state(Rng& rng, int n_modes, double max_excess,
                                    double max_abs_r) {
  Vector thermal(2 * n_modes);
  for (int a = 0; a < n_modes; ++a) {
    const double nu = 1.0 + rng.uniform(0.0, max_excess);
    thermal(2 * a) = nu;
    thermal(2 * a + 1) = nu;
  }
  const PassiveTransform k1 = random_passive(n_modes, rng);
  const PassiveTransform k2 = random_passive(n_modes, rng);
  Vector z(2 * n_modes);
  for (int a = 0; a < n_modes; ++a) {
    const double s = rng.uniform(-max_abs_r, max_abs_r);
    z(2 * a) = std::exp(-s);
    z(2 * a + 1) = std::exp(s);
  }
  const Matrix s = k2.data() * z.asDiagonal() * k1.data();
  const Matrix v = s * thermal.asDiagonal() * s.transpose();
  return CovarianceMatrix(0.5 * (v + v.transpose()));
}

}  // namespace gqfi
