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

#include "gqfi/random.hpp"

#include <cmath>
#include <numbers>

#include "gqfi/errors.hpp"

namespace gqfi {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // 1 - u keeps the log argument in (0, 1].
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::uint64_t Rng::index(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("index range must be non-empty");
  if (n == 1) return 0;
  int bits = 0;
  while ((std::uint64_t{1} << bits) < n && bits < 63) ++bits;
  for (;;) {
    const std::uint64_t candidate = engine_() >> (64 - bits);
    if (candidate < n) return candidate;
  }
}

std::vector<int> Rng::permutation(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(index(static_cast<std::uint64_t>(i) + 1));
    std::swap(p[static_cast<std::size_t>(i)], p[j]);
  }
  return p;
}

ComplexMatrix haar_unitary(int n, Rng& rng) {
  if (n < 1) throw InvalidArgument("unitary dimension must be positive");
  const double scale = std::sqrt(0.5);
  ComplexMatrix z(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      z(i, j) = std::complex<double>(scale * re, scale * im);
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const std::complex<double> overlap = z.col(i).dot(z.col(j));  // conj(q_i) . z_j
      z.col(j) -= overlap * z.col(i);
    }
    const double norm = z.col(j).norm();
    if (norm == 0.0) throw NumericalFailure("degenerate Gaussian sample in haar_unitary");
    z.col(j) /= norm;
  }
  return z;
}

}  // namespace gqfi
