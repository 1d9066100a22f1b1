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

#include "gqfi/gaussian_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gqfi/errors.hpp"

namespace gqfi {

SqueezingVector::SqueezingVector(std::vector<double> r) : r_(std::move(r)) {
  if (r_.empty()) throw InvalidArgument("squeezing vector must have at least one mode");
  for (double x : r_) {
    if (!std::isfinite(x)) throw InvalidArgument("squeezing parameter is not finite");
    if (std::abs(x) > kMaxAbs) {
      throw InvalidArgument("squeezing parameter " + std::to_string(x) + " exceeds |r| <= 10");
    }
  }
}

double SqueezingVector::max_abs() const {
  double m = 0.0;
  for (double x : r_) m = std::max(m, std::abs(x));
  return m;
}

namespace {

void check_even_square(const Matrix& v) {
  if (v.rows() != v.cols()) throw InvalidArgument("covariance matrix must be square");
  if (v.rows() == 0 || v.rows() % 2 != 0) {
    throw InvalidArgument("covariance matrix dimension must be a positive even number");
  }
}

double asymmetry(const Matrix& v) { return (v - v.transpose()).cwiseAbs().maxCoeff(); }

}  // namespace

CovarianceMatrix::CovarianceMatrix(Matrix data, double symmetry_tol)
    : n_modes_(0), data_(std::move(data)) {
  check_even_square(data_);
  if (!data_.allFinite()) throw InvalidArgument("covariance matrix has non-finite entries");
  if (asymmetry(data_) > symmetry_tol) {
    throw InvalidArgument("covariance matrix is not symmetric");
  }
  n_modes_ = static_cast<int>(data_.rows() / 2);
}

Eigen::Matrix2d CovarianceMatrix::block(int a, int b) const {
  if (a < 0 || a >= n_modes_ || b < 0 || b >= n_modes_) {
    throw InvalidArgument("mode index out of range");
  }
  return data_.block<2, 2>(2 * a, 2 * b);
}

Matrix symplectic_form(int n_modes) {
  if (n_modes < 1) throw InvalidArgument("n_modes must be positive");
  Matrix omega = Matrix::Zero(2 * n_modes, 2 * n_modes);
  for (int a = 0; a < n_modes; ++a) {
    omega(2 * a, 2 * a + 1) = 1.0;
    omega(2 * a + 1, 2 * a) = -1.0;
  }
  return omega;
}

CovarianceMatrix vacuum_state(int n_modes) {
  if (n_modes < 1) throw InvalidArgument("n_modes must be positive");
  return CovarianceMatrix(Matrix::Identity(2 * n_modes, 2 * n_modes));
}

CovarianceMatrix input_state(const SqueezingVector& r) {
  const int n = r.size();
  Vector diag(2 * n);
  for (int a = 0; a < n; ++a) {
    diag(2 * a) = std::exp(-2.0 * r[a]);
    diag(2 * a + 1) = std::exp(2.0 * r[a]);
  }
  return CovarianceMatrix(diag.asDiagonal().toDenseMatrix());
}

std::vector<double> symplectic_eigenvalues(const Matrix& v, double pairing_tol) {
  check_even_square(v);
  const Eigen::Index dim = v.rows();
  const Matrix sym = 0.5 * (v + v.transpose());
  Eigen::LLT<Matrix> llt(sym);
  if (llt.info() != Eigen::Success) {
    throw NumericalFailure("symplectic eigenvalues need a positive-definite matrix");
  }
  const Matrix l = llt.matrixL();
  const Matrix b = l.transpose() * symplectic_form(static_cast<int>(dim / 2)) * l;
  Eigen::JacobiSVD<Matrix> svd(b);
  if (svd.info() != Eigen::Success) throw NumericalFailure("SVD failed");

  // Singular values come back sorted in decreasing order.
  const Vector& s = svd.singularValues();
  std::vector<double> nu;
  nu.reserve(static_cast<std::size_t>(dim / 2));
  for (Eigen::Index k = 0; k < dim; k += 2) {
    const double hi = s(k);
    const double lo = s(k + 1);
    const double scale = std::max(hi, std::numeric_limits<double>::min());
    if ((hi - lo) / scale > pairing_tol) {
      throw NumericalFailure("symplectic spectrum is not paired within tolerance");
    }
    nu.push_back(0.5 * (hi + lo));
  }
  return nu;
}

std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& v, double pairing_tol) {
  return symplectic_eigenvalues(v.data(), pairing_tol);
}

ValidationReport validate(const Matrix& v, const Tolerances& tol) {
  check_even_square(v);
  ValidationReport report;
  report.symmetric = v.allFinite() && asymmetry(v) <= tol.symmetry;
  if (!v.allFinite()) return report;

  const Matrix sym = 0.5 * (v + v.transpose());
  if (Eigen::LLT<Matrix>(sym).info() != Eigen::Success) return report;

  const std::vector<double> nu = symplectic_eigenvalues(sym);
  report.min_symplectic_eigenvalue = nu.back();
  report.physical = report.symmetric && nu.back() >= 1.0 - tol.physical;
  report.pure = report.physical && std::all_of(nu.begin(), nu.end(), [&](double x) {
                  return std::abs(x - 1.0) <= tol.pure;
                });
  return report;
}

ValidationReport validate(const CovarianceMatrix& v, const Tolerances& tol) {
  return validate(v.data(), tol);
}

double mean_photon_number(const CovarianceMatrix& v, int mode) {
  if (mode < 0 || mode >= v.n_modes()) throw InvalidArgument("mode index out of range");
  return (v(2 * mode, 2 * mode) + v(2 * mode + 1, 2 * mode + 1)) / 4.0 - 0.5;
}

double total_photon_number(const CovarianceMatrix& v) {
  return v.data().trace() / 4.0 - 0.5 * v.n_modes();
}

}  // namespace gqfi
