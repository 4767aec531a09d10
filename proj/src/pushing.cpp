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

#include "mpsprep/pushing.hpp"

#include <cmath>

namespace mpsprep {

namespace {

void require_unitary_pair(const Mat& ol, const Mat& orr, const Mat& map) {
  require(ol.rows() == orr.rows() && ol.rows() * orr.rows() == map.cols(),
          "virtual operators do not match the map");
  if (!is_unitary(ol, 1e-9) || !is_unitary(orr, 1e-9))
    fail(ErrorKind::InvalidArgument, "virtual operators must be unitary");
}

double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

Mat right_inverse(const VirtualToPhysicalMap& map) { return right_inverse(map.mat); }

CheckResult existence_check(const Mat& ol, const Mat& orr, const Mat& map, double tol) {
  require_unitary_pair(ol, orr, map);
  const Mat proj = right_inverse(map) * map;
  const double r = max_abs(commutator(kron(ol.transpose(), orr), proj));
  return {r <= tol, r};
}

double rowspace_leak(const Mat& ol, const Mat& orr, const Mat& map) {
  require_unitary_pair(ol, orr, map);
  const Mat proj = right_inverse(map) * map;
  const Mat comp = Mat::Identity(proj.rows(), proj.cols()) - proj;
  return max_abs(comp * kron(ol.transpose(), orr) * proj);
}

CheckResult unitarity_check(const Mat& ol, const Mat& orr, const Mat& map, double tol) {
  require_unitary_pair(ol, orr, map);
  const double r = max_abs(commutator(kron(ol.transpose(), orr), map.adjoint() * map));
  return {r <= tol, r};
}

double singular_value_block_residual(const Mat& ol, const Mat& orr, const Mat& map) {
  require_unitary_pair(ol, orr, map);
  Eigen::JacobiSVD<Mat> svd(map, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Mat& v = svd.matrixV();
  const auto n = map.cols();
  Mat sts = Mat::Zero(n, n);
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    sts(i, i) = svd.singularValues()(i) * svd.singularValues()(i);
  const Mat o = v.adjoint() * kron(ol.transpose(), orr) * v;
  return max_abs(commutator(o, sts));
}

PushingRelation solve_physical(const Mat& ol, const Mat& orr, const Mat& map, int q, double tol) {
  require_unitary_pair(ol, orr, map);
  PushingRelation rel;
  rel.Oleft = ol;
  rel.Oright = orr;
  rel.q = q;
  const Mat o = kron(ol.transpose(), orr);
  rel.Ophys = map * o * right_inverse(map);
  rel.residual = max_abs(rel.Ophys * map - map * o);
  rel.unitarity_residual =
      max_abs(rel.Ophys.adjoint() * rel.Ophys - Mat::Identity(rel.Ophys.rows(), rel.Ophys.cols()));
  if (rel.residual > tol || rel.unitarity_residual > tol)
    fail(ErrorKind::InvariantViolation,
         "solve_physical: pushing relation not satisfied (residual " + fmt_double(rel.residual) +
             ", unitarity " + fmt_double(rel.unitarity_residual) + ")");
  return rel;
}

const PushingEntry& PushingTable::entry(int g) const {
  require(g >= 0 && g < static_cast<int>(entries.size()), "defect index out of range");
  const PushingEntry& e = entries[g];
  if (!e.found) fail(ErrorKind::InvariantViolation, "no pushing relation for defect " + basis.group.labels[g]);
  return e;
}

PushingTable build_pushing_table(const BlockedTensor& blocked, const DefectBasis& basis, double tol) {
  require(basis.dim == blocked.base.D, "defect basis dimension must equal the bond dimension");
  PushingTable t;
  t.basis = basis;
  t.q = blocked.q;
  t.blocked = blocked;
  const Mat& map = blocked.map.mat;
  const FiniteGroup& G = basis.group;
  std::vector<int> order{G.id};
  for (int h = 0; h < G.order; ++h)
    if (h != G.id) order.push_back(h);
  t.complete = true;
  for (int g = 0; g < G.order; ++g) {
    PushingEntry e;
    e.g = g;
    for (int h : order) {
      if (!unitarity_check(basis.mats[h], basis.mats[g], map, tol).pass) continue;
      e.relation = solve_physical(basis.mats[h], basis.mats[g], map, blocked.q, tol);
      e.partner = h;
      e.found = true;
      e.Ophys_lifted = blocked.lift(e.relation.Ophys);
      break;
    }
    t.complete = t.complete && e.found;
    t.entries.push_back(std::move(e));
  }
  return t;
}

BlockPushingTable build_block_pushing_table(const BlockStructure& bs, const std::vector<DefectBasis>& bases,
                                            int q, const BlockSymmetryData* sym, double tol) {
  require(static_cast<int>(bases.size()) == bs.K(), "one defect basis per block");
  BlockPushingTable out;
  out.complete = true;
  for (int a = 0; a < bs.K(); ++a) {
    out.blocks.push_back(build_pushing_table(block_tensor(bs.blocks[a], q), bases[a], tol));
    out.complete = out.complete && out.blocks.back().complete;
  }
  const PushingTable& t0 = out.blocks[0];
  bool same = true;
  for (const auto& t : out.blocks) same = same && t.basis.eta() == t0.basis.eta();
  if (same) {
    out.phases.assign(t0.entries.size(), std::vector<cd>(bs.K(), cd(1.0)));
    for (std::size_t g = 0; g < t0.entries.size(); ++g)
      for (int a = 1; a < bs.K(); ++a) {
        const auto& e0 = t0.entries[g];
        const auto& ea = out.blocks[a].entries[g];
        if (!e0.found || !ea.found || e0.partner != ea.partner ||
            e0.Ophys_lifted.rows() != ea.Ophys_lifted.rows()) {
          same = false;
          continue;
        }
        const auto c = proportional_phase(e0.Ophys_lifted, ea.Ophys_lifted, tol);
        if (!c) {
          same = false;
          continue;
        }
        out.phases[g][a] = *c;
      }
  }
  out.block_independent = same && out.complete;
  if (!out.block_independent) out.phases.clear();

  if (sym) {
    const int Db = bs.Dbar();
    const FiniteGroup& G = sym->group;
    require(static_cast<int>(sym->U.size()) == G.order && static_cast<int>(sym->V.size()) == G.order,
            "symmetry data needs one U and one V per group element");
    for (int g = 0; g < G.order; ++g)
      for (int a = 0; a < bs.K(); ++a) {
        BlockCertificate c;
        c.g = g;
        c.alpha = a;
        c.gamma = sym->cosets.gammamap[g][a];
        c.h = sym->cosets.hmap[g][a];
        const Mat vblk = sym->V[g].block(c.gamma * Db, a * Db, Db, Db);
        const MpsTensor& Aa = bs.blocks[a];
        const MpsTensor& Ag = bs.blocks[c.gamma];
        // sum_n (U_g)_mn A_gamma^n against V A_alpha^m V^dagger.
        Mat lhs_all(Aa.d * Db, Db), rhs_all(Aa.d * Db, Db);
        for (int m = 0; m < Aa.d; ++m) {
          Mat lhs = Mat::Zero(Db, Db);
          for (int n = 0; n < Aa.d; ++n) lhs += sym->U[g](m, n) * Ag.mats[n];
          lhs_all.block(m * Db, 0, Db, Db) = lhs;
          rhs_all.block(m * Db, 0, Db, Db) = vblk * Aa.mats[m] * vblk.adjoint();
        }
        const auto ph = proportional_phase(rhs_all, lhs_all, 1e-8);
        c.phase = ph.value_or(cd(0.0));
        c.residual = ph ? max_abs(lhs_all - c.phase * rhs_all) : max_abs(lhs_all - rhs_all);
        if (!ph) c.residual = std::max(c.residual, 1.0);
        c.basis_index = identify_element(bases[c.gamma], vblk, nullptr);
        out.max_certificate_residual = std::max(out.max_certificate_residual, c.residual);
        out.certificates.push_back(c);
      }
  }
  return out;
}

json pushing_table_to_json(const PushingTable& t) {
  json j;
  j["basis"] = t.basis.name;
  j["eta"] = t.basis.eta();
  j["q"] = t.q;
  j["d_eff"] = t.blocked.d_eff();
  j["complete"] = t.complete;
  json entries = json::array();
  for (const auto& e : t.entries) {
    json je;
    je["defect"] = e.g;
    je["label"] = t.basis.group.labels[e.g];
    je["found"] = e.found;
    if (e.found) {
      je["partner"] = e.partner;
      je["partner_label"] = t.basis.group.labels[e.partner];
      je["local_removal"] = e.partner == t.basis.group.id;
      je["phase"] = complex_to_json(e.phase);
      je["residual"] = e.relation.residual;
      je["Ophys"] = mat_to_json(e.relation.Ophys);
    }
    entries.push_back(je);
  }
  j["entries"] = entries;
  return j;
}

json block_pushing_table_to_json(const BlockPushingTable& t) {
  json j;
  j["complete"] = t.complete;
  j["block_independent"] = t.block_independent;
  json blocks = json::array();
  for (const auto& b : t.blocks) blocks.push_back(pushing_table_to_json(b));
  j["blocks"] = blocks;
  if (!t.phases.empty()) {
    json ph = json::array();
    for (const auto& row : t.phases) {
      json r = json::array();
      for (cd z : row) r.push_back(complex_to_json(z));
      ph.push_back(r);
    }
    j["phases"] = ph;
  }
  if (!t.certificates.empty()) {
    json cs = json::array();
    for (const auto& c : t.certificates)
      cs.push_back({{"g", c.g},
                    {"alpha", c.alpha},
                    {"gamma", c.gamma},
                    {"h", c.h},
                    {"basis_index", c.basis_index},
                    {"phase", complex_to_json(c.phase)},
                    {"residual", c.residual}});
    j["certificates"] = cs;
    j["max_certificate_residual"] = t.max_certificate_residual;
  }
  return j;
}

}  // namespace mpsprep
