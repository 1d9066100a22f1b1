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

#ifndef GQFI_GAUSSIAN_CORE_HPP
#define GQFI_GAUSSIAN_CORE_HPP

// Zero-mean Gaussian states in the covariance-matrix picture.
//
// Conventions used throughout the library:
//   * hbar = 2, so [x, p] = 2i and the vacuum covariance is the identity.
//   * Quadratures are interleaved: (x_1, p_1, x_2, p_2, ..., x_N, p_N).
//   * Mode indices are 0-based; mode a occupies rows/columns 2a and 2a+1.
//
// Many other packages use hbar = 1 (vacuum variance 1/2). Covariance
// matrices from such sources must be multiplied by 2 before use here.

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace gqfi {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct Tolerances {
  double symmetry = 1e-12;  // absolute, entrywise
  double physical = 1e-9;   // nu >= 1 - physical
  double pure = 1e-9;       // |nu - 1| <= pure for every nu
};

// Per-mode squeezing parameters. Negative entries squeeze the orthogonal
// quadrature. |r| is capped so that exp(4r) stays well inside double range.
class SqueezingVector {
 public:
  static constexpr double kMaxAbs = 10.0;

  explicit SqueezingVector(std::vector<double> r);

  int size() const { return static_cast<int>(r_.size()); }
  double operator[](int a) const { return r_[static_cast<std::size_t>(a)]; }
  const std::vector<double>& values() const { return r_; }
  double max_abs() const;

 private:
  std::vector<double> r_;
};

// Real symmetric 2N x 2N matrix of symmetrized second moments. Construction
// checks shape and symmetry only; physicality is reported by validate().
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(Matrix data, double symmetry_tol = 1e-12);

  int n_modes() const { return n_modes_; }
  int dim() const { return 2 * n_modes_; }
  const Matrix& data() const { return data_; }
  double operator()(int i, int j) const { return data_(i, j); }

  // 2x2 block coupling mode a (rows) with mode b (columns).
  Eigen::Matrix2d block(int a, int b) const;

 private:
  int n_modes_;
  Matrix data_;
};

// Block-diagonal Omega with per-mode blocks [[0, 1], [-1, 0]].
Matrix symplectic_form(int n_modes);

CovarianceMatrix vacuum_state(int n_modes);

// diag(e^{-2 r_1}, e^{2 r_1}, ..., e^{-2 r_N}, e^{2 r_N})
CovarianceMatrix input_state(const SqueezingVector& r);

struct ValidationReport {
  bool symmetric = false;
  bool physical = false;
  bool pure = false;
  // 0 when the matrix is not positive definite.
  double min_symplectic_eigenvalue = 0.0;
};

ValidationReport validate(const Matrix& v, const Tolerances& tol = {});
ValidationReport validate(const CovarianceMatrix& v, const Tolerances& tol = {});

// Symplectic spectrum nu_1 >= ... >= nu_N of a positive-definite V.
//
// The squares nu_k^2 are the eigenvalues of -(Omega V)^2. With the Cholesky
// factor V = L L^T that operator is similar to B^T B where B = L^T Omega L is
// antisymmetric, so nu_k are the singular values of B, each appearing twice.
// Adjacent singular values are paired; a pair whose relative spread exceeds
// pairing_tol raises NumericalFailure.
std::vector<double> symplectic_eigenvalues(const Matrix& v, double pairing_tol = 1e-7);
std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& v,
                                           double pairing_tol = 1e-7);

// n_a = (V[2a,2a] + V[2a+1,2a+1]) / 4 - 1/2
double mean_photon_number(const CovarianceMatrix& v, int mode);

// Tr(V)/4 - N/2
double total_photon_number(const CovarianceMatrix& v);

}  // namespace gqfi

#endif  // GQFI_GAUSSIAN_CORE_HPP
