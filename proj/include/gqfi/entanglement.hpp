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

#ifndef GQFI_ENTANGLEMENT_HPP
#define GQFI_ENTANGLEMENT_HPP

// Reduced states, purity and von Neumann entropy (in nats) of Gaussian
// bipartitions, plus the structural predicates used to characterize
// QFI-optimal states.

#include <span>
#include <vector>

#include "gqfi/gaussian_core.hpp"
#include "gqfi/metrology.hpp"

namespace gqfi {

// Non-empty proper subset of the modes of an N-mode system, stored sorted.
class ModeSubset {
 public:
  ModeSubset(std::vector<int> indices, int n_modes);
  static ModeSubset single(int mode, int n_modes);

  const std::vector<int>& indices() const { return indices_; }
  int n_modes() const { return n_modes_; }
  int size() const { return static_cast<int>(indices_.size()); }
  ModeSubset complement() const;

 private:
  std::vector<int> indices_;
  int n_modes_;
};

// Principal submatrix on the subset's quadratures.
CovarianceMatrix reduced_covariance(const CovarianceMatrix& v, const ModeSubset& s);

// mu = 1 / sqrt(det V_sub). Round-off above 1 by at most 1e-9 is clamped.
double purity(const CovarianceMatrix& v_sub);

// Symplectic eigenvalues closer to 1 than this contribute zero entropy.
inline constexpr double kEntropyNuCutoff = 1e-9;

// Single-mode entropy from purity,
//   S = (1 - mu)/(2 mu) ln((1 + mu)/(1 - mu)) - ln(2 mu/(1 + mu)).
// Purities with 1/mu within kEntropyNuCutoff of 1 give exactly 0. Purities
// below 1e-8 raise OutOfDomain.
double entropy_from_purity(double mu);

// sum_k g(nu_k) with g(nu) = (nu+1)/2 ln((nu+1)/2) - (nu-1)/2 ln((nu-1)/2).
double entropy_from_symplectic_spectrum(std::span<const double> nu);

// Entropy of the reduction of a pure global state onto s.
double entanglement_entropy(const CovarianceMatrix& v, const ModeSubset& s,
                            const Tolerances& tol = {});

// True iff every inter-mode 2x2 block is zero within tol * max(1, max|V_ij|).
bool is_decoupled(const CovarianceMatrix& v, double tol = 1e-9);

// True iff g_a^2 > g_b^2 + tol implies n_a >= n_b - tol for every pair.
bool is_properly_ordered(const CovarianceMatrix& v, const GeneratorWeights& g,
                         double tol = 1e-9);

}  // namespace gqfi

#endif  // GQFI_ENTANGLEMENT_HPP
