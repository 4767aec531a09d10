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

#include <functional>
#include <string>
#include <vector>

#include "mpsprep/linalg.hpp"
#include "mpsprep/serialize.hpp"

namespace mpsprep {

struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> table;  ///< table[a][b] = index of a*b.
  int id = 0;
  std::vector<int> inv;
  std::vector<std::string> labels;
  std::vector<int> gens;
  /// Spanning tree from the identity: element g = parent[g] * gens[parent_gen[g]].
  /// Empty when the group was built from an explicit matrix set.
  std::vector<int> parent;
  std::vector<int> parent_gen;
  std::string spec;

  int mul(int a, int b) const { return table[a][b]; }
  bool is_abelian() const;
  int index_of(const std::string& label) const;
};

/// Checks identity, inverse and (for |G| <= 64) associativity laws.
void validate_group(const FiniteGroup& g);

/// Z_{n1} x ... x Z_{nk}, elements in lexicographic order of their coordinates.
FiniteGroup cyclic_product_group(const std::vector<int>& ns);
/// Closure of permutation generators, breadth first with generators first.
/// Composition is (a*b)(x) = a(b(x)).
FiniteGroup permutation_group(const std::vector<std::vector<int>>& gens,
                              const std::vector<std::string>& gen_names, std::string spec);
FiniteGroup a4_group();
FiniteGroup dihedral_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// "Z4xZ2", "A4", "D3", "Z2xZ2xZ2xZ2", "D3xZ2", ...
FiniteGroup build_group(const std::string& spec);

/// Natural action of D_n on the vertices of the n-gon (S_3 for n = 3).
std::vector<std::vector<int>> dihedral_vertex_action(const FiniteGroup& dn, int n);

struct ProjectiveRep {
  FiniteGroup group;
  int dim = 0;
  std::vector<Mat> mats;
  std::vector<std::vector<cd>> cocycle;  ///< B^g B^h = cocycle[g][h] B^{gh}.
  std::string name;

  int eta() const { return static_cast<int>(mats.size()); }
};

using DefectBasis = ProjectiveRep;

/// Extends generator images along the group's spanning tree and fills the
/// cocycle table from the resulting matrices.
ProjectiveRep rep_from_generators(const FiniteGroup& g, const std::vector<Mat>& gen_mats,
                                  std::string name);
/// Builds the group law from a matrix set closed under products up to phase.
ProjectiveRep rep_from_matrix_set(const std::vector<Mat>& mats,
                                  const std::vector<std::string>& labels, std::string spec,
                                  std::string name);

/// B^{(g,h)} = A^g (x) B^h over the direct product group.
ProjectiveRep tensor_product_rep(const ProjectiveRep& a, const ProjectiveRep& b, std::string name);

ProjectiveRep qudit_pauli_basis(int D);
ProjectiveRep weighted_pauli_basis(int l);
ProjectiveRep a4_triplet_basis();
ProjectiveRep sp2n_basis(int n);
/// "pauli<D>", "wpauli<l>", "a4", "sp2n<n>".
ProjectiveRep named_defect_basis(const std::string& spec);

struct CocycleReport {
  bool ok = false;
  double max_residual = 0.0;
  double unitarity_residual = 0.0;
  std::vector<std::vector<cd>> cocycle;
};

CocycleReport verify_projective_rep(const ProjectiveRep& rep, double tol = 1e-12);

struct PovmReport {
  bool pass = false;
  double residual = 0.0;
  double eta_over_D = 0.0;
};

PovmReport verify_povm_completeness(const ProjectiveRep& rep, double tol = 1e-10);

/// Element of the basis proportional to m, with the phase c such that
/// m = c * B^g. Returns -1 when no element matches.
int identify_element(const ProjectiveRep& rep, const Mat& m, cd* phase, double tol = 1e-9);

struct CosetData {
  int K = 1;
  std::vector<int> H;
  std::vector<int> reps;                      ///< k_alpha.
  std::vector<std::vector<int>> hmap;         ///< [g][alpha] -> h(g, alpha).
  std::vector<std::vector<int>> gammamap;     ///< [g][alpha] -> gamma(g, alpha).
};

/// perm[g][alpha] is the image of block alpha under g; alpha_0 = 0.
CosetData stabilizer_and_cosets(const FiniteGroup& g, const std::vector<std::vector<int>>& perm, int K);

json group_to_json(const FiniteGroup& g);
json rep_to_json(const ProjectiveRep& rep);
ProjectiveRep rep_from_json(const json& j);

}  // namespace mpsprep
