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

#include <vector>

#include "mpsprep/group_reps.hpp"
#include "mpsprep/linalg.hpp"
#include "mpsprep/tensor_core.hpp"

namespace mpsprep {

inline constexpr double kPushTol = 1e-9;

/// Ā_R^{-1} = Ā^dagger (Ā Ā^dagger)^{-1}.
Mat right_inverse(const VirtualToPhysicalMap& map);

struct CheckResult {
  bool pass = false;
  double residual = 0.0;
};

/// || [Ol^T (x) Or, Ā_R^{-1} Ā] ||_max.
CheckResult existence_check(const Mat& ol, const Mat& orr, const Mat& map, double tol = kPushTol);
/// || P_c (Ol^T (x) Or) P ||_max with P the rowspace projector.
double rowspace_leak(const Mat& ol, const Mat& orr, const Mat& map);
/// || [Ol^T (x) Or, Ā^dagger Ā] ||_max.
CheckResult unitarity_check(const Mat& ol, const Mat& orr, const Mat& map, double tol = kPushTol);
/// || [V^dagger O V, S^T S] ||_max in the SVD frame Ā = U S V^dagger (rows of V^dagger span
/// the virtual space).
double singular_value_block_residual(const Mat& ol, const Mat& orr, const Mat& map);

struct PushingRelation {
  Mat Oleft;
  Mat Oright;
  Mat Ophys;  ///< d_eff x d_eff.
  int q = 1;
  double residual = 0.0;            ///< ||O_p Ā - Ā (Ol^T (x) Or)||_max.
  double unitarity_residual = 0.0;  ///< ||O_p^dagger O_p - 1||_max.
};

/// O_p = Ā (Ol^T (x) Or) Ā_R^{-1}; throws InvariantViolation when the result does not
/// satisfy the pushing relation or is not unitary.
PushingRelation solve_physical(const Mat& ol, const Mat& orr, const Mat& map, int q = 1,
                               double tol = kPushTol);

struct PushingEntry {
  int g = 0;
  bool found = false;
  int partner = -1;  ///< h with B^h A B^g = sum_n (O_p)_mn A^n; identity means local removal.
  PushingRelation relation;
  Mat Ophys_lifted;  ///< O_p acting on the full d^q block space.
  cd phase{1.0, 0.0};
};

struct PushingTable {
  DefectBasis basis;
  int q = 1;
  BlockedTensor blocked;
  std::vector<PushingEntry> entries;
  bool complete = false;

  const PushingEntry& entry(int g) const;
};

PushingTable build_pushing_table(const BlockedTensor& blocked, const DefectBasis& basis,
                                 double tol = kPushTol);

/// Per-block pushing data for a non-normal tensor.
struct BlockSymmetryData {
  FiniteGroup group;
  std::vector<std::vector<int>> perm;  ///< perm[g][alpha].
  CosetData cosets;
  std::vector<Mat> U;                  ///< physical rep, one per g.
  std::vector<Mat> V;                  ///< virtual rep on the direct sum, one per g.
};

struct BlockCertificate {
  int g = 0;
  int alpha = 0;
  int gamma = 0;
  int h = 0;
  int basis_index = -1;  ///< element of the block basis proportional to the intra-block V.
  cd phase{1.0, 0.0};    ///< e^{-i phi_g^alpha}.
  double residual = 0.0;
};

struct BlockPushingTable {
  std::vector<PushingTable> blocks;
  bool complete = false;
  /// Same partners and physical unitaries (up to a per-block phase) in every block.
  bool block_independent = false;
  /// phases[g][alpha]: block phase of entry g relative to block 0.
  std::vector<std::vector<cd>> phases;
  std::vector<BlockCertificate> certificates;
  double max_certificate_residual = 0.0;
};

BlockPushingTable build_block_pushing_table(const BlockStructure& bs,
                                            const std::vector<DefectBasis>& bases, int q,
                                            const BlockSymmetryData* sym = nullptr,
                                            double tol = kPushTol);

json pushing_table_to_json(const PushingTable& t);
json block_pushing_table_to_json(const BlockPushingTable& t);

}  // namespace mpsprep
