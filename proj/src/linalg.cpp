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

#include "mpsprep/linalg.hpp"

#include <cmath>
#include <cstdio>

namespace mpsprep {

void fail(ErrorKind kind, const std::string& what) { throw MpsError(kind, what); }

void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::InvalidArgument, what);
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat kron_all(const std::vector<Mat>& ms) {
  Mat out = Mat::Identity(1, 1);
  for (const auto& m : ms) out = kron(out, m);
  return out;
}

Vec vec_r(const Mat& m) {
  Vec v(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

Mat unvec_r(const Vec& v, int rows, int cols) {
  require(v.size() == static_cast<Eigen::Index>(rows) * cols, "unvec_r: size mismatch");
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = v(i * cols + j);
  return m;
}

Mat shift_matrix(int D) {
  Mat x = Mat::Zero(D, D);
  for (int j = 0; j < D; ++j) x((j + 1) % D, j) = 1.0;
  return x;
}

Mat clock_matrix(int D) {
  Mat z = Mat::Zero(D, D);
  for (int j = 0; j < D; ++j) z(j, j) = std::polar(1.0, 2.0 * kPi * j / D);
  return z;
}

Mat dft_matrix(int K) {
  Mat w(K, K);
  const double s = 1.0 / std::sqrt(static_cast<double>(K));
  for (int j = 0; j < K; ++j)
    for (int k = 0; k < K; ++k)
      w(j, k) = s * std::polar(1.0, -2.0 * kPi * ((j * k) % K) / K);
  return w;
}

double frobenius_distance(const Mat& a, const Mat& b) { return (a - b).norm(); }

bool is_unitary(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m.adjoint() * m - Mat::Identity(m.rows(), m.cols())).norm() <= tol;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

std::optional<cd> proportional_phase(const Mat& a, const Mat& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  const double na = a.squaredNorm();
  if (na == 0.0) return std::nullopt;
  cd c = (a.adjoint() * b).trace() / na;
  if (std::abs(std::abs(c) - 1.0) > tol) return std::nullopt;
  c /= std::abs(c);
  if ((b - c * a).norm() > tol * std::sqrt(na)) return std::nullopt;
  return c;
}

int numerical_rank(const Mat& m, double rel) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel * s(0)) ++r;
  return r;
}

Mat right_inverse(const Mat& a, double rel_tol) {
  if (numerical_rank(a, rel_tol) != a.rows())
    fail(ErrorKind::NumericalFailure, "right_inverse: map is not surjective");
  Mat gram = a * a.adjoint();
  return a.adjoint() * gram.inverse();
}

Mat complete_unitary(const Mat& cols, const std::vector<int>& fixed_positions,
                     int dim, double tol) {
  require(static_cast<int>(fixed_positions.size()) == cols.cols(),
          "complete_unitary: one position per column");
  require(cols.rows() == dim, "complete_unitary: column length mismatch");
  Mat out = Mat::Zero(dim, dim);
  std::vector<bool> used(dim, false);
  std::vector<Vec> basis;
  for (Eigen::Index c = 0; c < cols.cols(); ++c) {
    const int p = fixed_positions[c];
    require(p >= 0 && p < dim && !used[p], "complete_unitary: bad position");
    used[p] = true;
    out.col(p) = cols.col(c);
    basis.push_back(cols.col(c));
  }
  if ((cols.adjoint() * cols - Mat::Identity(cols.cols(), cols.cols())).norm() > tol)
    fail(ErrorKind::NumericalFailure, "complete_unitary: columns are not orthonormal");
  int slot = 0;
  for (int e = 0; e < dim && static_cast<int>(basis.size()) < dim; ++e) {
    Vec v = Vec::Zero(dim);
    v(e) = 1.0;
    // Two passes of modified Gram-Schmidt keep the completion well conditioned.
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) v -= b.dot(v) * b;
    const double n = v.norm();
    if (n < 1e-8) continue;
    v /= n;
    while (used[slot]) ++slot;
    used[slot] = true;
    out.col(slot) = v;
    basis.push_back(v);
  }
  return out;
}

Mat null_space(const Mat& m, double rel_tol) {
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = s.size() ? s(0) : 0.0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * std::max(smax, 1.0)) ++r;
  const Mat& v = svd.matrixV();
  return v.rightCols(v.cols() - r);
}

Mat haar_unitary(int dim, Rng& rng) {
  require(dim >= 1, "haar_unitary: dim must be positive");
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = cd(normal(rng), normal(rng)) / std::sqrt(2.0);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const cd d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= (a > 0.0) ? d / a : cd(1.0);
  }
  return q;
}

Mat mpow(const Mat& m, int k) {
  if (k < 0) return mpow(m.inverse(), -k);
  Mat out = Mat::Identity(m.rows(), m.cols());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

int ipow(int base, int exp) {
  int out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

std::vector<int> to_digits(std::int64_t index, const std::vector<int>& dims) {
  std::vector<int> d(dims.size());
  for (int w = static_cast<int>(dims.size()) - 1; w >= 0; --w) {
    d[w] = static_cast<int>(index % dims[w]);
    index /= dims[w];
  }
  return d;
}

std::int64_t from_digits(const std::vector<int>& digits, const std::vector<int>& dims) {
  std::int64_t idx = 0;
  for (std::size_t w = 0; w < dims.size(); ++w) idx = idx * dims[w] + digits[w];
  return idx;
}

std::string fmt_double(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace mpsprep
