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

#ifndef GQFI_NELDER_MEAD_HPP
#define GQFI_NELDER_MEAD_HPP

#include <functional>

#include "gqfi/gaussian_core.hpp"

namespace gqfi {

struct NelderMeadOptions {
  int max_iters = 20000;
  double xtol = 1e-10;  // max |x_i - x_best| over the simplex
  double ftol = 1e-12;  // max |f_i - f_best| over the simplex
  double initial_step = 0.25;
};

struct NelderMeadResult {
  Vector x;
  double f = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Downhill simplex minimization with dimension-adaptive coefficients
// (reflection 1, expansion 1 + 2/n, contraction 0.75 - 1/(2n),
// shrink 1 - 1/n). Stops when both xtol and ftol hold or after max_iters.
NelderMeadResult nelder_mead_minimize(const std::function<double(const Vector&)>& f,
                                      const Vector& x0, const NelderMeadOptions& opts = {});

}  // namespace gqfi

#endif  // GQFI_NELDER_MEAD_HPP
