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
#include <utility>
#include <vector>

#include "mpsprep/group_reps.hpp"
#include "mpsprep/linalg.hpp"
#include "mpsprep/serialize.hpp"
#include "mpsprep/tensor_core.hpp"

namespace mpsprep {

struct Irrep {
  std::string label;
  int dim = 1;
  std::vector<Mat> mats;       ///< one per group element.
  std::vector<cd> character;
};

/// Explicit irreducible linear representations for groups accepted by
/// build_group (cyclic products, A4, D_n and direct products of these).
/// Order: lexicographic in the factor irreps; 1-dim before higher-dim per factor.
std::vector<Irrep> group_irreps(const FiniteGroup& g);

/// V (x) conj(V). Throws InvariantViolation unless the result is linear.
ProjectiveRep tensor_square_rep(const ProjectiveRep& v);

struct IrrepDecomposition {
  ProjectiveRep source;                ///< the linear rep being decomposed.
  std::vector<Irrep> irreps;
  std::vector<int> multiplicity;       ///< n_J.
  std::vector<int> offset;             ///< first model column of irrep J.
  std::vector<Mat> model;              ///< block-diagonal U-bar_g, columns ordered (J, copy, mu).
  std::vector<Mat> canonical;          ///< W_J: dim x (n_J d_J) intertwiner columns.
  int intertwiner_dim = 0;             ///< null-space dimension of V W = W U over all g.
  double intertwining_residual = 0.0;  ///< of the canonical W.
  double multiplicity_residual = 0.0;  ///< distance of the character sums from integers.
  int parameter_count = 0;             ///< sum_J n_J^2 real parameters in the isotypic factors.
};

IrrepDecomposition irrep_decomposition(const ProjectiveRep& vbar);

/// W = sum_J W_J (M_J (x) 1_{d_J}); `factors` holds one n_J x n_J unitary per irrep
/// (empty entries mean identity).
Mat sample_intertwiner(const IrrepDecomposition& dec, const std::vector<Mat>& factors);
Mat sample_intertwiner(const IrrepDecomposition& dec, Rng& rng);
double intertwining_residual(const IrrepDecomposition& dec, const Mat& w);

struct IrrepSelection {
  std::vector<std::pair<int, int>> picks;  ///< (irrep, copy).
  Mat P;                                   ///< dim x d, standard-basis columns.
  int d = 0;
};

IrrepSelection select_irreps(const IrrepDecomposition& dec, const std::vector<std::pair<int, int>>& picks);

struct SymmetryCertificate {
  bool pass = false;
  double max_residual = 0.0;
  std::vector<cd> phases;  ///< e^{i phi_g}.
};

/// Checks sum_n U_g(m, n) A^n = e^{i phi_g} V_g A^m V_g^dagger for every g.
SymmetryCertificate symmetry_certificate(const MpsTensor& a, const ProjectiveRep& v, const std::vector<Mat>& u,
                                         double tol = 1e-9);

struct ConstructedTensor {
  MpsTensor raw;               ///< reshaped W P scaled by sqrt(D/d).
  MpsTensor tensor;            ///< left-canonical when `normal`, otherwise `raw`.
  Mat gauge;
  double scale = 1.0;
  bool normal = false;
  std::vector<Mat> physical;   ///< U_g in the pushing orientation, (P^T U-bar_g P)^T.
  SymmetryCertificate certificate;
  json provenance;
};

ConstructedTensor construct_tensor(const ProjectiveRep& v, const IrrepDecomposition& dec, const Mat& w,
                                   const IrrepSelection& sel, json provenance = json::object());

json decomposition_to_json(const IrrepDecomposition& dec);
json constructed_to_json(const ConstructedTensor& c);

}  // namespace mpsprep
