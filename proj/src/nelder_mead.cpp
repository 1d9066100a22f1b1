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

#include "gqfi/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "gqfi/errors.hpp"

namespace gqfi {

NelderMeadResult nelder_mead_minimize(const std::function<double(const Vector&)>& f,
                                      const Vector& x0, const NelderMeadOptions& opts) {
  const Eigen::Index n = x0.size();
  if (n == 0) {
    return {x0, f(x0), 0, true};
  }
  const double dim = static_cast<double>(n);
  const double alpha = 1.0;
  const double gamma = 1.0 + 2.0 / dim;
  const double rho = 0.75 - 1.0 / (2.0 * dim);
  const double sigma = 1.0 - 1.0 / dim;

  std::vector<Vector> simplex(static_cast<std::size_t>(n + 1), x0);
  for (Eigen::Index i = 0; i < n; ++i) simplex[static_cast<std::size_t>(i + 1)](i) += opts.initial_step;
  std::vector<double> values(simplex.size());
  for (std::size_t i = 0; i < simplex.size(); ++i) values[i] = f(simplex[i]);

  std::vector<std::size_t> order(simplex.size());
  NelderMeadResult result;
  int iter = 0;
  for (; iter < opts.max_iters; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[order.size() - 2];

    double fspread = 0.0;
    double xspread = 0.0;
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      fspread = std::max(fspread, std::abs(values[i] - values[best]));
      xspread = std::max(xspread, (simplex[i] - simplex[best]).cwiseAbs().maxCoeff());
    }
    if (fspread <= opts.ftol && xspread <= opts.xtol) {
      result.converged = true;
      break;
    }

    Vector centroid = Vector::Zero(n);
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (i != worst) centroid += simplex[i];
    }
    centroid /= dim;

    const Vector reflected = centroid + alpha * (centroid - simplex[worst]);
    const double f_reflected = f(reflected);
    if (f_reflected < values[best]) {
      const Vector expanded = centroid + gamma * (reflected - centroid);
      const double f_expanded = f(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }
    // Outside contraction when the reflection beat the worst point, inside otherwise.
    const bool outside = f_reflected < values[worst];
    const Vector contracted = outside ? Vector(centroid + rho * (reflected - centroid))
                                      : Vector(centroid + rho * (simplex[worst] - centroid));
    const double f_contracted = f(contracted);
    if (f_contracted < (outside ? f_reflected : values[worst])) {
      simplex[worst] = contracted;
      values[worst] = f_contracted;
      continue;
    }
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (i == best) continue;
      simplex[i] = simplex[best] + sigma * (simplex[i] - simplex[best]);
      values[i] = f(simplex[i]);
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  const auto best = static_cast<std::size_t>(std::distance(values.begin(), best_it));
  result.x = simplex[best];
  result.f = values[best];
  result.iterations = iter;
  return result;
}

}  // namespace gqfi
