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

#include "gqfi/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gqfi/errors.hpp"

namespace gqfi {

namespace {

void check_mode(int n_modes, int mode) {
  if (mode < 0 || mode >= n_modes) {
    throw InvalidArgument("mode " + std::to_string(mode) + " out of range for " +
                          std::to_string(n_modes) + " modes");
  }
}

// Left-multiply k by a phase shift on `mode`.
void rotate_rows(Matrix& k, int mode, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Eigen::RowVectorXd x = k.row(2 * mode);
  const Eigen::RowVectorXd p = k.row(2 * mode + 1);
  k.row(2 * mode) = c * x + s * p;
  k.row(2 * mode + 1) = -s * x + c * p;
}

// Left-multiply k by a beam splitter on (a, b).
void mix_rows(Matrix& k, int a, int b, double eta) {
  const double c = std::cos(eta);
  const double s = std::sin(eta);
  for (int q = 0; q < 2; ++q) {
    const Eigen::RowVectorXd ra = k.row(2 * a + q);
    const Eigen::RowVectorXd rb = k.row(2 * b + q);
    k.row(2 * a + q) = c * ra + s * rb;
    k.row(2 * b + q) = -s * ra + c * rb;
  }
}

}  // namespace

PassiveDefect passive_defect(const Matrix& k) {
  if (k.rows() != k.cols() || k.rows() == 0 || k.rows() % 2 != 0) {
    throw InvalidArgument("passive transform must be a square matrix of even dimension");
  }
  const auto n = static_cast<int>(k.rows() / 2);
  const Matrix omega = symplectic_form(n);
  PassiveDefect d;
  d.orthogonal = (k.transpose() * k - Matrix::Identity(k.rows(), k.cols())).cwiseAbs().maxCoeff();
  d.symplectic = (k.transpose() * omega * k - omega).cwiseAbs().maxCoeff();
  return d;
}

PassiveTransform::PassiveTransform(Matrix data, double tol) : data_(std::move(data)) {
  if (!data_.allFinite()) throw InvalidArgument("passive transform has non-finite entries");
  const PassiveDefect d = passive_defect(data_);
  if (d.orthogonal > tol) throw InvalidArgument("passive transform is not orthogonal");
  if (d.symplectic > tol) throw InvalidArgument("passive transform is not symplectic");
}

PassiveTransform::PassiveTransform(Matrix data, Trusted) : data_(std::move(data)) {}

PassiveTransform PassiveTransform::identity(int n_modes) {
  if (n_modes < 1) throw InvalidArgument("n_modes must be positive");
  return {Matrix::Identity(2 * n_modes, 2 * n_modes), Trusted{}};
}

PassiveTransform PassiveTransform::inverse() const {
  return {data_.transpose(), Trusted{}};
}

PassiveTransform phase_shift(int n_modes, int mode, double theta) {
  if (n_modes < 1) throw InvalidArgument("n_modes must be positive");
  check_mode(n_modes, mode);
  Matrix k = Matrix::Identity(2 * n_modes, 2 * n_modes);
  rotate_rows(k, mode, theta);
  return {std::move(k), PassiveTransform::Trusted{}};
}

PassiveTransform beam_splitter(int n_modes, int mode_a, int mode_b, double eta) {
  if (n_modes < 2) throw InvalidArgument("beam splitter needs at least two modes");
  check_mode(n_modes, mode_a);
  check_mode(n_modes, mode_b);
  if (mode_a == mode_b) throw InvalidArgument("beam splitter modes must differ");
  Matrix k = Matrix::Identity(2 * n_modes, 2 * n_modes);
  mix_rows(k, mode_a, mode_b, eta);
  return {std::move(k), PassiveTransform::Trusted{}};
}

PassiveTransform mode_permutation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  if (n < 1) throw InvalidArgument("permutation must be non-empty");
  std::vector<bool> seen(perm.size(), false);
  Matrix k = Matrix::Zero(2 * n, 2 * n);
  for (int a = 0; a < n; ++a) {
    const int b = perm[static_cast<std::size_t>(a)];
    check_mode(n, b);
    if (seen[static_cast<std::size_t>(b)]) throw InvalidArgument("not a permutation");
    seen[static_cast<std::size_t>(b)] = true;
    k(2 * b, 2 * a) = 1.0;
    k(2 * b + 1, 2 * a + 1) = 1.0;
  }
  return {std::move(k), PassiveTransform::Trusted{}};
}

PassiveTransform from_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols() || u.rows() == 0) {
    throw InvalidArgument("unitary must be a non-empty square matrix");
  }
  if (!u.allFinite()) throw InvalidArgument("unitary has non-finite entries");
  const Eigen::Index n = u.rows();
  const double defect = (u.adjoint() * u - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (defect > tol) throw InvalidArgument("matrix is not unitary");

  Matrix k(2 * n, 2 * n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      const double re = u(a, b).real();
      const double im = u(a, b).imag();
      k(2 * a, 2 * b) = re;
      k(2 * a, 2 * b + 1) = -im;
      k(2 * a + 1, 2 * b) = im;
      k(2 * a + 1, 2 * b + 1) = re;
    }
  }
  return {std::move(k), PassiveTransform::Trusted{}};
}

PassiveTransform random_passive(int n_modes, Rng& rng) {
  return from_unitary(haar_unitary(n_modes, rng));
}

PassiveTransform random_passive(int n_modes, std::uint64_t seed) {
  Rng rng(seed);
  return random_passive(n_modes, rng);
}

PassiveTransform compose(const PassiveTransform& k2, const PassiveTransform& k1) {
  if (k2.n_modes() != k1.n_modes()) throw InvalidArgument("transform dimensions differ");
  return {k2.data() * k1.data(), PassiveTransform::Trusted{}};
}

CovarianceMatrix apply(const PassiveTransform& k, const CovarianceMatrix& v) {
  if (k.n_modes() != v.n_modes()) {
    throw InvalidArgument("transform and state have different mode counts");
  }
  const Matrix out = k.data() * v.data() * k.data().transpose();
  return CovarianceMatrix(0.5 * (out + out.transpose()));
}

MeshParams MeshParams::zeros(int n_modes) {
  if (n_modes < 1) throw InvalidArgument("n_modes must be positive");
  MeshParams p;
  p.n_modes = n_modes;
  p.rotation_angles.assign(static_cast<std::size_t>(coupler_count(n_modes)), CouplerAngles{});
  p.output_phases.assign(static_cast<std::size_t>(n_modes), 0.0);
  return p;
}

std::vector<std::pair<int, int>> mesh_layout(int n_modes) {
  if (n_modes < 1) throw InvalidArgument("n_modes must be positive");
  std::vector<std::pair<int, int>> layout;
  for (int column = 0; column < n_modes; ++column) {
    for (int k = column % 2; k + 1 < n_modes; k += 2) layout.emplace_back(k, k + 1);
  }
  return layout;
}

PassiveTransform mesh_to_transform(const MeshParams& p) {
  if (p.n_modes < 1) throw InvalidArgument("n_modes must be positive");
  if (static_cast<int>(p.rotation_angles.size()) != MeshParams::coupler_count(p.n_modes)) {
    throw InvalidArgument("mesh needs N(N-1)/2 coupler angle pairs");
  }
  if (static_cast<int>(p.output_phases.size()) != p.n_modes) {
    throw InvalidArgument("mesh needs N output phases");
  }
  const auto layout = mesh_layout(p.n_modes);
  Matrix k = Matrix::Identity(2 * p.n_modes, 2 * p.n_modes);
  for (std::size_t c = 0; c < layout.size(); ++c) {
    const auto [upper, lower] = layout[c];
    const CouplerAngles& angles = p.rotation_angles[c];
    if (!std::isfinite(angles.theta) || !std::isfinite(angles.phi)) {
      throw InvalidArgument("mesh angles must be finite");
    }
    rotate_rows(k, upper, angles.phi);
    mix_rows(k, upper, lower, angles.theta);
  }
  for (int a = 0; a < p.n_modes; ++a) {
    const double phase = p.output_phases[static_cast<std::size_t>(a)];
    if (!std::isfinite(phase)) throw InvalidArgument("mesh phases must be finite");
    rotate_rows(k, a, phase);
  }
  return {std::move(k), PassiveTransform::Trusted{}};
}

}  // namespace gqfi
