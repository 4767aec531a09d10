// Copyright 2026 The mpsprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Independent reference computations used by the test suites. Nothing here
// calls into the library's state builders.

#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat pauli(int k) {
  Mat m = Mat::Zero(2, 2);
  switch (k) {
    case 0:
      m << 1, 0, 0, 1;
      break;
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, cd(0, -1), cd(0, 1), 0;
      break;
    default:
      m << 1, 0, 0, -1;
  }
  return m;
}

/// tr(A^{m_1} ... A^{m_N} X) by direct multiplication.
inline cd trace_amplitude(const std::vector<Mat>& mats, const std::vector<int>& digits, const Mat& x) {
  Mat p = Mat::Identity(mats[0].rows(), mats[0].cols());
  for (int m : digits) p = p * mats[m];
  return (p * x).trace();
}

/// Normalised amplitude vector over d^N, site 0 most significant.
inline Vec trace_state(const std::vector<Mat>& mats, int n, const Mat& x) {
  const int d = static_cast<int>(mats.size());
  long total = 1;
  for (int k = 0; k < n; ++k) total *= d;
  Vec v(total);
  std::vector<int> digits(n, 0);
  for (long idx = 0; idx < total; ++idx) {
    long r = idx;
    for (int k = n - 1; k >= 0; --k) {
      digits[k] = static_cast<int>(r % d);
      r /= d;
    }
    v(idx) = trace_amplitude(mats, digits, x);
  }
  return v / v.norm();
}

/// Same chain with open legs: index (i, m_1..m_N, j), amplitude (A^{m_1}..A^{m_N})_{ij}.
inline Vec open_leg_state(const std::vector<Mat>& mats, int n) {
  const int d = static_cast<int>(mats.size());
  const int D = static_cast<int>(mats[0].rows());
  long phys = 1;
  for (int k = 0; k < n; ++k) phys *= d;
  Vec v(phys * D * D);
  std::vector<int> digits(n, 0);
  for (long idx = 0; idx < phys; ++idx) {
    long r = idx;
    for (int k = n - 1; k >= 0; --k) {
      digits[k] = static_cast<int>(r % d);
      r /= d;
    }
    Mat p = Mat::Identity(D, D);
    for (int m : digits) p = p * mats[m];
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j) v((i * phys + idx) * D + j) = p(i, j);
  }
  return v / v.norm();
}

inline double overlap_fidelity(const Vec& a, const Vec& b) {
  return std::norm(a.dot(b)) / (a.squaredNorm() * b.squaredNorm());
}

inline Mat gaussian(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = cd(n(rng), n(rng));
  return m;
}

inline Mat random_unitary(int dim, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Mat> qr(gaussian(dim, dim, rng));
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR();
  for (int i = 0; i < dim; ++i) {
    const cd p = r(i, i) / std::abs(r(i, i));
    q.col(i) *= p;
  }
  return q;
}

inline std::vector<Mat> random_mats(int d, int D, std::mt19937_64& rng) {
  std::vector<Mat> mats;
  for (int m = 0; m < d; ++m) mats.push_back(gaussian(D, D, rng));
  return mats;
}

inline double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

/// Second-largest over largest transfer eigenvalue modulus, computed from
/// the D^2 x D^2 matrix sum_m A^m (x) conj(A^m).
inline double transfer_ratio(const std::vector<Mat>& mats) {
  const int D = static_cast<int>(mats[0].rows());
  Mat e = Mat::Zero(D * D, D * D);
  for (const auto& a : mats)
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j)
        for (int k = 0; k < D; ++k)
          for (int l = 0; l < D; ++l) e(i * D + k, j * D + l) += a(i, j) * std::conj(a(k, l));
  Eigen::ComplexEigenSolver<Mat> es(e);
  std::vector<double> mods;
  for (int i = 0; i < es.eigenvalues().size(); ++i) mods.push_back(std::abs(es.eigenvalues()(i)));
  std::sort(mods.rbegin(), mods.rend());
  return mods[1] / mods[0];
}

}  // namespace oracle
