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

#include <set>

#include "gtest/gtest.h"
#include "mpsprep/group_reps.hpp"
#include "oracles.hpp"

using namespace mpsprep;

namespace {

void expect_group_axioms(const FiniteGroup& g) {
  for (int a = 0; a < g.order; ++a) {
    EXPECT_EQ(g.mul(a, g.id), a);
    EXPECT_EQ(g.mul(g.id, a), a);
    EXPECT_EQ(g.mul(a, g.inv[a]), g.id);
    std::set<int> row(g.table[a].begin(), g.table[a].end());
    EXPECT_EQ(static_cast<int>(row.size()), g.order);
    for (int b = 0; b < g.order; ++b)
      for (int c = 0; c < g.order; ++c) ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
  }
}

TEST(BuildGroup, Z2xZ2) {
  const auto g = build_group("Z2xZ2");
  EXPECT_EQ(g.order, 4);
  for (int a = 0; a < 4; ++a) EXPECT_EQ(g.inv[a], a);
  EXPECT_TRUE(g.is_abelian());
  expect_group_axioms(g);
}

TEST(BuildGroup, A4Presentation) {
  const auto g = build_group("A4");
  EXPECT_EQ(g.order, 12);
  EXPECT_FALSE(g.is_abelian());
  expect_group_axioms(g);
  const int x = g.gens[0], y = g.gens[1];
  const int y2 = g.mul(y, y);
  EXPECT_EQ(g.mul(x, x), g.id);
  EXPECT_EQ(g.mul(y2, y), g.id);
  const int xy = g.mul(x, y);
  EXPECT_EQ(g.mul(g.mul(xy, xy), xy), g.id);
}

TEST(BuildGroup, DihedralThree) {
  const auto g = build_group("D3");
  EXPECT_EQ(g.order, 6);
  EXPECT_FALSE(g.is_abelian());
  expect_group_axioms(g);
}

TEST(BuildGroup, ProductsAndUnknowns) {
  expect_group_axioms(build_group("Z4xZ2"));
  expect_group_axioms(build_group("A4xZ2"));
  EXPECT_EQ(build_group("Z2xZ3xD4").order, 48);
  EXPECT_THROW(build_group("Q8"), MpsError);
  EXPECT_THROW(build_group("Zx"), MpsError);
}

TEST(NamedBasis, PauliTwoIsPaulis) {
  const auto rep = named_defect_basis("pauli2");
  EXPECT_EQ(rep.eta(), 4);
  EXPECT_EQ(rep.group.order, 4);
  for (int k = 0; k < 4; ++k) {
    bool found = false;
    for (const auto& m : rep.mats) found = found || proportional_phase(m, oracle::pauli(k), 1e-12).has_value();
    EXPECT_TRUE(found) << k;
  }
}

TEST(NamedBasis, PauliThreeIsClockShift) {
  const auto rep = named_defect_basis("pauli3");
  ASSERT_EQ(rep.eta(), 9);
  const Mat x = shift_matrix(3), z = clock_matrix(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_GE(identify_element(rep, mpow(x, i) * mpow(z, j), nullptr), 0);
}

TEST(NamedBasis, AllBuiltinsValid) {
  for (const std::string spec : {"pauli2", "pauli3", "pauli4", "pauli5", "pauli6", "wpauli1", "wpauli2", "a4",
                                 "sp2n1", "sp2n2", "sp2n3"}) {
    const auto rep = named_defect_basis(spec);
    const auto c = verify_projective_rep(rep);
    EXPECT_TRUE(c.ok) << spec;
    EXPECT_LE(c.max_residual, 1e-12) << spec;
    EXPECT_LE(c.unitarity_residual, 1e-12) << spec;
    const auto p = verify_povm_completeness(rep);
    EXPECT_TRUE(p.pass) << spec;
    EXPECT_NEAR(p.eta_over_D, static_cast<double>(rep.eta()) / rep.dim, 1e-12) << spec;
  }
  EXPECT_THROW(named_defect_basis("clifford2"), MpsError);
  EXPECT_THROW(named_defect_basis("pauli"), MpsError);
}

TEST(NamedBasis, A4TripletHasTwelveDefects) {
  const auto rep = named_defect_basis("a4");
  EXPECT_EQ(rep.dim, 3);
  EXPECT_EQ(rep.eta(), 12);
  EXPECT_NEAR(verify_povm_completeness(rep).eta_over_D, 4.0, 1e-12);
}

TEST(NamedBasis, Sp2nDeduplicated) {
  // Pairwise distinct up to phase.
  for (int n : {1, 2, 3}) {
    const auto rep = sp2n_basis(n);
    for (int a = 0; a < rep.eta(); ++a)
      for (int b = a + 1; b < rep.eta(); ++b)
        EXPECT_FALSE(proportional_phase(rep.mats[a], rep.mats[b], 1e-9).has_value()) << n << " " << a << " " << b;
  }
}

TEST(VerifyProjectiveRep, PauliCocycleValues) {
  const auto c = verify_projective_rep(qudit_pauli_basis(2));
  EXPECT_LT(c.max_residual, 1e-14);
  for (const auto& row : c.cocycle)
    for (cd w : row) {
      const bool quarter = std::abs(w - cd(1)) < 1e-14 || std::abs(w + cd(1)) < 1e-14 ||
                           std::abs(w - kI) < 1e-14 || std::abs(w + kI) < 1e-14;
      EXPECT_TRUE(quarter) << w;
    }
}

TEST(VerifyProjectiveRep, TrivialGroup) {
  EXPECT_THROW(rep_from_generators(cyclic_product_group({1}), {}, "trivial"), MpsError);
  const auto rep = rep_from_matrix_set({Mat::Identity(1, 1)}, {"e"}, "trivial", "trivial");
  ASSERT_EQ(rep.eta(), 1);
  const auto c = verify_projective_rep(rep);
  EXPECT_TRUE(c.ok);
  EXPECT_EQ(c.cocycle[0][0], cd(1.0));
}

TEST(VerifyProjectiveRep, RandomReplacementFails) {
  auto rep = qudit_pauli_basis(2);
  std::mt19937_64 rng(8);
  const int y = identify_element(rep, oracle::pauli(2), nullptr);
  ASSERT_GE(y, 0);
  rep.mats[y] = oracle::random_unitary(2, rng);
  EXPECT_FALSE(verify_projective_rep(rep).ok);
}

TEST(PovmCompleteness, ReducibleControlFails) {
  Mat z = oracle::pauli(3);
  const auto rep = rep_from_generators(cyclic_product_group({2}), {z}, "IZ");
  EXPECT_TRUE(verify_projective_rep(rep).ok);
  EXPECT_FALSE(verify_povm_completeness(rep).pass);
}

TEST(PovmCompleteness, GrandOrthogonalityOracle) {
  for (const std::string spec : {"pauli3", "a4", "wpauli2"}) {
    const auto rep = named_defect_basis(spec);
    const int D = rep.dim;
    const double ratio = static_cast<double>(rep.eta()) / D;
    double worst = 0.0;
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j)
        for (int l = 0; l < D; ++l)
          for (int m = 0; m < D; ++m) {
            cd s = 0.0;
            for (const auto& b : rep.mats) s += std::conj(b(i, j)) * b(l, m);
            const double expect = (i == l && j == m) ? ratio : 0.0;
            worst = std::max(worst, std::abs(s - expect));
          }
    EXPECT_LT(worst, 1e-12) << spec;
  }
}

void expect_coset_consistency(const FiniteGroup& g, const std::vector<std::vector<int>>& perm, const CosetData& c) {
  for (int x = 0; x < g.order; ++x)
    for (int a = 0; a < c.K; ++a) {
      EXPECT_EQ(g.mul(x, c.reps[a]), g.mul(c.reps[c.gammamap[x][a]], c.hmap[x][a]));
      EXPECT_EQ(perm[c.reps[a]][0], a);
    }
  for (int h : c.H) {
    EXPECT_EQ(perm[h][0], 0);
    EXPECT_EQ(c.hmap[h][0], h);
    for (int a = 0; a < c.K; ++a) {
      const int conj = g.mul(g.mul(c.reps[a], h), g.inv[c.reps[a]]);
      EXPECT_EQ(perm[conj][a], a);
    }
  }
}

TEST(Cosets, Z4xZ2Parity) {
  const auto g = build_group("Z4xZ2");
  std::vector<std::vector<int>> perm;
  for (int x = 0; x < g.order; ++x) {
    const int a = x / 2;
    perm.push_back({a % 2, (a + 1) % 2});
  }
  const auto c = stabilizer_and_cosets(g, perm, 2);
  ASSERT_EQ(c.H.size(), 4u);
  for (int h : c.H) EXPECT_EQ((h / 2) % 2, 0) << g.labels[h];
  expect_coset_consistency(g, perm, c);
}

TEST(Cosets, TrivialAction) {
  const auto g = build_group("A4");
  const auto c = stabilizer_and_cosets(g, std::vector<std::vector<int>>(g.order, {0}), 1);
  EXPECT_EQ(static_cast<int>(c.H.size()), g.order);
  EXPECT_EQ(c.reps, (std::vector<int>{g.id}));
}

TEST(Cosets, SymmetricGroupOnThreeBlocks) {
  const auto g = build_group("D3");
  const auto perm = dihedral_vertex_action(g, 3);
  const auto c = stabilizer_and_cosets(g, perm, 3);
  EXPECT_EQ(c.H.size(), 2u);
  expect_coset_consistency(g, perm, c);
}

TEST(Cosets, NonTransitiveRejected) {
  const auto g = build_group("Z2");
  EXPECT_THROW(stabilizer_and_cosets(g, {{0, 1}, {0, 1}}, 2), MpsError);
}

TEST(RepJson, RoundTripIsExact) {
  for (const std::string spec : {"pauli3", "a4", "sp2n2"}) {
    const auto rep = named_defect_basis(spec);
    const auto back = rep_from_json(json::parse(dump_json(rep_to_json(rep))));
    ASSERT_EQ(back.eta(), rep.eta());
    EXPECT_EQ(back.group.table, rep.group.table);
    for (int k = 0; k < rep.eta(); ++k) EXPECT_EQ(back.mats[k], rep.mats[k]);
    for (int a = 0; a < rep.eta(); ++a)
      for (int b = 0; b < rep.eta(); ++b) EXPECT_EQ(back.cocycle[a][b], rep.cocycle[a][b]);
  }
}

}  // namespace
