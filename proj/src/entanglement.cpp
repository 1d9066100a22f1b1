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

#include "gqfi/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "gqfi/errors.hpp"

namespace gqfi {

ModeSubset::ModeSubset(std::vector<int> indices, int n_modes)
    : indices_(std::move(indices)), n_modes_(n_modes) {
  if (n_modes_ < 2) throw InvalidArgument("a bipartition needs at least two modes");
  if (indices_.empty()) throw InvalidArgument("mode subset must be non-empty");
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 0 || indices_[i] >= n_modes_) {
      throw InvalidArgument("mode subset index out of range");
    }
    if (i > 0 && indices_[i] <= indices_[i - 1]) {
      throw InvalidArgument("mode subset indices must be strictly increasing");
    }
  }
  if (size() == n_modes_) throw InvalidArgument("mode subset must be a proper subset");
}

ModeSubset ModeSubset::single(int mode, int n_modes) { return ModeSubset({mode}, n_modes); }

ModeSubset ModeSubset::complement() const {
  std::vector<int> rest;
  for (int a = 0; a < n_modes_; ++a) {
    if (!std::binary_search(indices_.begin(), indices_.end(), a)) rest.push_back(a);
  }
  return ModeSubset(std::move(rest), n_modes_);
}

CovarianceMatrix reduced_covariance(const CovarianceMatrix& v, const ModeSubset& s) {
  if (s.n_modes() != v.n_modes()) throw InvalidArgument("subset built for a different mode count");
  const int m = s.size();
  Matrix sub(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      sub.block<2, 2>(2 * i, 2 * j) = v.block(s.indices()[static_cast<std::size_t>(i)],
                                              s.indices()[static_cast<std::size_t>(j)]);
    }
  }
  return CovarianceMatrix(std::move(sub));
}

double purity(const CovarianceMatrix& v_sub) {
  Eigen::LLT<Matrix> llt(v_sub.data());
  if (llt.info() != Eigen::Success) throw InvalidArgument("purity needs a positive-definite matrix");
  // det = prod(diag(L))^2; accumulate logs to stay in range.
  double log_det = 0.0;
  const Matrix l = llt.matrixL();
  for (Eigen::Index i = 0; i < l.rows(); ++i) log_det += 2.0 * std::log(l(i, i));
  const double mu = std::exp(-0.5 * log_det);
  if (mu > 1.0 + 1e-9) throw InvalidArgument("purity above 1: matrix is not physical");
  return std::min(mu, 1.0);
}

double entropy_from_purity(double mu) {
  if (!std::isfinite(mu) || mu <= 0.0 || mu > 1.0) {
    throw InvalidArgument("purity must lie in (0, 1]");
  }
  if (mu < 1e-8) throw OutOfDomain("entropy diverges as purity goes to zero");
  if (1.0 / mu - 1.0 <= kEntropyNuCutoff) return 0.0;
  return (1.0 - mu) / (2.0 * mu) * std::log((1.0 + mu) / (1.0 - mu)) -
         std::log(2.0 * mu / (1.0 + mu));
}

double entropy_from_symplectic_spectrum(std::span<const double> nu) {
  double s = 0.0;
  for (double x : nu) {
    if (x - 1.0 <= kEntropyNuCutoff) continue;  // treated as exactly 1
    const double plus = 0.5 * (x + 1.0);
    const double minus = 0.5 * (x - 1.0);
    s += plus * std::log(plus) - minus * std::log(minus);
  }
  return s;
}

double entanglement_entropy(const CovarianceMatrix& v, const ModeSubset& s,
                            const Tolerances& tol) {
  const ValidationReport report = validate(v, tol);
  if (!report.physical) throw InvalidState("covariance matrix is not physical");
  if (!report.pure) throw InvalidState("entanglement entropy needs a pure global state");
  return entropy_from_symplectic_spectrum(symplectic_eigenvalues(reduced_covariance(v, s)));
}

bool is_decoupled(const CovarianceMatrix& v, double tol) {
  if (!(tol >= 0.0)) throw InvalidArgument("decoupling tolerance must be non-negative");
  const double threshold = tol * std::max(1.0, v.data().cwiseAbs().maxCoeff());
  for (int a = 0; a < v.n_modes(); ++a) {
    for (int b = a + 1; b < v.n_modes(); ++b) {
      if (v.block(a, b).cwiseAbs().maxCoeff() > threshold) return false;
    }
  }
  return true;
}

bool is_properly_ordered(const CovarianceMatrix& v, const GeneratorWeights& g, double tol) {
  if (g.size() != v.n_modes()) throw InvalidArgument("generator and state mode counts differ");
  for (int a = 0; a < v.n_modes(); ++a) {
    for (int b = 0; b < v.n_modes(); ++b) {
      if (g[a] * g[a] > g[b] * g[b] + tol &&
          mean_photon_number(v, a) < mean_photon_number(v, b) - tol) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace gqfi
