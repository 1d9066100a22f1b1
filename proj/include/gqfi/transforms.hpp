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

#ifndef GQFI_TRANSFORMS_HPP
#define GQFI_TRANSFORMS_HPP

// Passive (photon-number preserving) Gaussian transformations. In the
// quadrature picture these are the 2N x 2N matrices that are orthogonal and
// symplectic at the same time; they act on a covariance matrix as K V K^T.
//
// Sign convention: a phase shift by theta maps a mode's quadratures with the
// block [[cos, sin], [-sin, cos]], i.e. the annihilation operator picks up
// e^{-i theta}. A unitary u on mode operators maps to the quadrature block
// [[Re u, -Im u], [Im u, Re u]], which agrees with that phase convention.

#include <cstdint>
#include <utility>
#include <vector>

#include "gqfi/gaussian_core.hpp"
#include "gqfi/random.hpp"

namespace gqfi {

class PassiveTransform {
 public:
  static constexpr double kDefaultTol = 1e-10;

  // Tag for products of already-validated transforms.
  struct Trusted {};

  // Checks K^T K = I and K^T Omega K = Omega entrywise within tol.
  explicit PassiveTransform(Matrix data, double tol = kDefaultTol);
  PassiveTransform(Matrix data, Trusted);

  static PassiveTransform identity(int n_modes);

  int n_modes() const { return static_cast<int>(data_.rows() / 2); }
  const Matrix& data() const { return data_; }

  // K^{-1} = K^T
  PassiveTransform inverse() const;

 private:
  Matrix data_;
};

// Largest entrywise deviation from K^T K = I and from K^T Omega K = Omega.
struct PassiveDefect {
  double orthogonal = 0.0;
  double symplectic = 0.0;
};
PassiveDefect passive_defect(const Matrix& k);

PassiveTransform phase_shift(int n_modes, int mode, double theta);

// Real two-mode coupler: the (a, b) sub-block is
// [[cos(eta) I, sin(eta) I], [-sin(eta) I, cos(eta) I]]. eta = pi/4 is 50/50.
PassiveTransform beam_splitter(int n_modes, int mode_a, int mode_b, double eta);

// Sends mode a to position perm[a].
PassiveTransform mode_permutation(const std::vector<int>& perm);

PassiveTransform from_unitary(const ComplexMatrix& u, double tol = 1e-10);

// Haar-random passive transform; the generator is seeded per call.
PassiveTransform random_passive(int n_modes, std::uint64_t seed);
PassiveTransform random_passive(int n_modes, Rng& rng);

// k2 * k1 (k1 acts first).
PassiveTransform compose(const PassiveTransform& k2, const PassiveTransform& k1);

// K V K^T, symmetrized to remove round-off asymmetry.
CovarianceMatrix apply(const PassiveTransform& k, const CovarianceMatrix& v);

struct CouplerAngles {
  double theta = 0.0;  // beam-splitter angle
  double phi = 0.0;    // phase on the upper mode, applied before mixing
};

// Parameters for a rectangular mesh of N(N-1)/2 couplers plus N output phases.
struct MeshParams {
  int n_modes = 1;
  std::vector<CouplerAngles> rotation_angles;
  std::vector<double> output_phases;

  static MeshParams zeros(int n_modes);
  static int coupler_count(int n_modes) { return n_modes * (n_modes - 1) / 2; }
};

// Coupler positions in application order. The mesh has N columns; column c
// holds couplers on mode pairs (k, k+1) for every k with k % 2 == c % 2 and
// k + 1 < N, listed by increasing k. Columns are traversed left to right.
std::vector<std::pair<int, int>> mesh_layout(int n_modes);

// D * T_last * ... * T_first with T = beam_splitter(theta) * phase_shift(upper, phi)
// and D the product of output phase shifts.
PassiveTransform mesh_to_transform(const MeshParams& p);

}  // namespace gqfi

#endif  // GQFI_TRANSFORMS_HPP
