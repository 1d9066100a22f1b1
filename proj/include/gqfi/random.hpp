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

#ifndef GQFI_RANDOM_HPP
#define GQFI_RANDOM_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace gqfi {

using ComplexMatrix = Eigen::MatrixXcd;

// Seeded generator with a fully specified output stream.
//
// std::mt19937_64 is bit-exact across standard libraries, but the standard
// distributions are not, so the transforms from raw 64-bit words are spelled
// out here:
//   uniform()  = (word >> 11) * 2^-53, in [0, 1)
//   normal()   = Box-Muller on two uniforms, caching the second variate
//   index(n)   = rejection sampling on the top bits, in [0, n)
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  std::uint64_t index(std::uint64_t n);

  // Fisher-Yates shuffle of 0..n-1.
  std::vector<int> permutation(int n);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Haar-random N x N unitary.
//
// Columns of an N x N matrix with i.i.d. standard complex Gaussian entries
// (real and imaginary parts N(0, 1/2), drawn row-major, real part first) are
// orthonormalized with modified Gram-Schmidt. Gram-Schmidt yields the QR
// factor with a positive real diagonal in R, which is the phase correction
// that makes Q Haar distributed.
ComplexMatrix haar_unitary(int n, Rng& rng);

}  // namespace gqfi

#endif  // GQFI_RANDOM_HPP
