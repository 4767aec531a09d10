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

#include <string>
#include <vector>

#include "mpsprep/linalg.hpp"
#include "mpsprep/serialize.hpp"
#include "mpsprep/state.hpp"

namespace mpsprep {

inline constexpr double kTol = 1e-10;

/// Site tensor A: d matrices of size D x D.
struct MpsTensor {
  int d = 0;
  int D = 0;
  std::vector<Mat> mats;
  bool canonical = false;
  std::string name;
  json params = json::object();
};

MpsTensor make_tensor(std::vector<Mat> mats, std::string name = "",
                      json params = json::object());

/// max-entry of sum_m A^m+ A^m - 1.
double left_canonical_residual(const MpsTensor& a);

struct VirtualToPhysicalMap {
  Mat mat;  ///< d x D^2, row m = row-major flattening of A^m.
  int rank = 0;
};

VirtualToPhysicalMap virtual_to_physical_map(const MpsTensor& a);

struct BlockedTensor {
  int q = 1;
  MpsTensor base;
  VirtualToPhysicalMap map;  ///< d_eff x D^2.
  Mat basis;                 ///< d_eff x d^q; product rows = basis^dagger * map.
  double reconstruction_error = 0.0;

  int d_eff() const { return static_cast<int>(map.mat.rows()); }
  int d_phys() const { return static_cast<int>(basis.cols()); }
  /// Physical unitary on the d^q block space acting as `op` on the retained
  /// subspace and as the identity on its complement.
  Mat lift(const Mat& op) const;
};

/// Flattened q-site products, rows ordered with site 1 most significant.
Mat blocked_products(const MpsTensor& a, int q);

BlockedTensor block_tensor(const MpsTensor& a, int q);

struct CanonicalForm {
  MpsTensor tensor;
  Mat gauge;          ///< A' = gauge A gauge^{-1} / sqrt(scale).
  double scale = 1.0;  ///< dominant transfer eigenvalue that was divided out.
};

CanonicalForm left_canonicalize_with_gauge(const MpsTensor& a);
MpsTensor left_canonicalize(const MpsTensor& a);

/// Eigenvalues of E = sum_m A^m (x) conj(A^m), by decreasing modulus then
/// increasing argument.
std::vector<cd> transfer_spectrum(const MpsTensor& a);

struct CorrelationLength {
  bool infinite = false;
  double value = 0.0;
};

CorrelationLength correlation_length(const MpsTensor& a, double tol = kTol);

/// Unique dominant transfer eigenvalue; the tensor is normal in the sense
/// used by the gallery flags.
bool is_normal(const MpsTensor& a, double tol = 1e-8);

struct BoundarySpec {
  enum class Kind { Entangled, Matrix, OpenEdges };
  Kind kind = Kind::Entangled;
  Mat X;
  Vec L;
  Vec R;

  static BoundarySpec entangled();
  static BoundarySpec matrix(const Mat& x);
  static BoundarySpec open_edges(const Vec& l, const Vec& r);
};

/// Normalised amplitudes. Entangled layout is [bondL, phys_1..phys_N, bondR];
/// Matrix gives tr(A..A X); OpenEdges gives <L|A..A|R>.
PureState dense_state(const MpsTensor& a, const BoundarySpec& boundary, int n_sites);
PureState dense_state_chain(const std::vector<MpsTensor>& chain, const BoundarySpec& boundary);

/// Non-normal tensor as a list of normal blocks.
struct BlockStructure {
  std::vector<MpsTensor> blocks;
  std::vector<cd> mu;
  std::vector<int> inflation;  ///< r_alpha; all ones before inflation.

  int K() const { return static_cast<int>(blocks.size()); }
  int Dbar() const;
  int d() const { return blocks.empty() ? 0 : blocks[0].d; }
};

BlockStructure make_block_structure(std::vector<MpsTensor> blocks, std::vector<cd> mu = {});
BlockStructure inflate_blocks(const BlockStructure& bs);
/// A^m = (+)_alpha mu_alpha A_alpha^m with block index most significant.
MpsTensor direct_sum(const BlockStructure& bs, bool with_mu = false);

json tensor_to_json(const MpsTensor& a);
MpsTensor tensor_from_json(const json& j);
json block_structure_to_json(const BlockStructure& bs);

}  // namespace mpsprep
