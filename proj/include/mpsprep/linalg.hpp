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

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace mpsprep {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using Rng = std::mt19937_64;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cd kI{0.0, 1.0};

enum class ErrorKind {
  InvalidArgument,
  NumericalFailure,
  BudgetExceeded,
  InvariantViolation,
};

/// Single exception type for the library. `kind()` lets callers map failures
/// onto exit codes without string matching.
class MpsError : public std::runtime_error {
 public:
  MpsError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);
void require(bool cond, const std::string& what);

Mat kron(const Mat& a, const Mat& b);
Mat kron_all(const std::vector<Mat>& ms);

/// Row-major vectorisation: index (i, j) -> i * cols + j.
Vec vec_r(const Mat& m);
Mat unvec_r(const Vec& v, int rows, int cols);

/// Generalised shift X|j> = |j+1 mod D> and clock Z = diag(exp(2 pi i j / D)).
Mat shift_matrix(int D);
Mat clock_matrix(int D);
Mat dft_matrix(int K);

double frobenius_distance(const Mat& a, const Mat& b);
bool is_unitary(const Mat& m, double tol);
Mat commutator(const Mat& a, const Mat& b);

/// If b = c * a for a unit-modulus c, returns c.
std::optional<cd> proportional_phase(const Mat& a, const Mat& b, double tol);

/// Numerical rank with relative threshold rel * sigma_max.
int numerical_rank(const Mat& m, double rel);

/// A^dagger (A A^dagger)^{-1}; throws when A does not have full row rank.
Mat right_inverse(const Mat& a, double rel_tol = 1e-12);

/// Extends orthonormal columns to a unitary of size dim by Gram-Schmidt over
/// the computational basis in order. Columns listed in `fixed_positions` keep
/// their place; the remaining slots are filled in increasing order.
Mat complete_unitary(const Mat& cols, const std::vector<int>& fixed_positions,
                     int dim, double tol = 1e-10);

/// Orthonormal basis for the null space of m (columns), via SVD.
Mat null_space(const Mat& m, double rel_tol = 1e-10);

Mat haar_unitary(int dim, Rng& rng);

/// Matrix power for small integer exponents, negative exponents invert.
Mat mpow(const Mat& m, int k);

int ipow(int base, int exp);

/// Mixed-radix digits, most significant first.
std::vector<int> to_digits(std::int64_t index, const std::vector<int>& dims);
std::int64_t from_digits(const std::vector<int>& digits,
                         const std::vector<int>& dims);

/// printf("%.17g") rendering used by every writer.
std::string fmt_double(double x);

}  // namespace mpsprep
