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

#ifndef GQFI_SAMPLING_HPP
#define GQFI_SAMPLING_HPP

// Random instances for property checks.

#include <vector>

#include "gqfi/gaussian_core.hpp"
#include "gqfi/metrology.hpp"
#include "gqfi/random.hpp"
#include "gqfi/transforms.hpp"

namespace gqfi {

// Uniform integer in [lo, hi].
int random_int(Rng& rng, int lo, int hi);

SqueezingVector random_squeezing(Rng& rng, int n_modes, double max_abs = 1.5);
GeneratorWeights random_weights(Rng& rng, int n_modes, double max_abs = 2.0);

// Each weight drawn from {2, 1, -1, 0.5, 0}, so ties are common.
GeneratorWeights random_tied_weights(Rng& rng, int n_modes);

// Per-mode random phases followed by a random mode permutation.
PassiveTransform random_phase_permutation(Rng& rng, int n_modes);

// Independent Haar unitaries on each group of modes sharing a key; modes with
// different keys are never mixed.
PassiveTransform random_block_passive(Rng& rng, const std::vector<double>& keys);

struct PureSample {
  SqueezingVector r;
  PassiveTransform k;
  CovarianceMatrix v;  // k input_state(r) k^T
};
PureSample random_pure_state(Rng& rng, int n_modes, double max_abs_r = 1.5);

// S diag(nu) S^T with S = K2 Z K1 (Bloch-Messiah form), nu_k in [1, 1 + max_excess].
CovarianceMatrix random_mixed_state(Rng& rng, int n_modes, double max_excess = 2.0,
                                    double max_abs_r = 1.0);

}  // namespace gqfi

#endif  // GQFI_SAMPLING_HPP
