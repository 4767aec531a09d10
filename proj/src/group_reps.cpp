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

#include "mpsprep/group_reps.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <sstream>

namespace mpsprep {

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (table[a][b] != table[b][a]) return false;
  return true;
}

int FiniteGroup::index_of(const std::string& label) const {
  for (int g = 0; g < order; ++g)
    if (labels[g] == label) return g;
  fail(ErrorKind::InvalidArgument, "unknown group element: " + label);
}

void validate_group(const FiniteGroup& g) {
  require(g.order >= 1 && static_cast<int>(g.table.size()) == g.order, "group: bad table size");
  for (int a = 0; a < g.order; ++a) {
    require(g.table[a][g.id] == a && g.table[g.id][a] == a, "group: identity law fails");
    require(g.table[a][g.inv[a]] == g.id && g.table[g.inv[a]][a] == g.id, "group: inverse law fails");
  }
  if (g.order <= 64)
    for (int a = 0; a < g.order; ++a)
      for (int b = 0; b < g.order; ++b)
        for (int c = 0; c < g.order; ++c)
          require(g.table[g.table[a][b]][c] == g.table[a][g.table[b][c]], "group: not associative");
}

namespace {

void fill_inverses(FiniteGroup& g) {
  g.inv.assign(g.order, -1);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (g.table[a][b] == g.id) g.inv[a] = b;
  for (int a = 0; a < g.order; ++a) require(g.inv[a] >= 0, "group: element without inverse");
}

}  // namespace

FiniteGroup cyclic_product_group(const std::vector<int>& ns) {
  require(!ns.empty(), "cyclic product needs at least one factor");
  FiniteGroup g;
  g.order = 1;
  for (int n : ns) {
    require(n >= 1, "cyclic factor order must be positive");
    g.order *= n;
  }
  auto coords = [&](int idx) {
    std::vector<int> c(ns.size());
    for (int k = static_cast<int>(ns.size()) - 1; k >= 0; --k) {
      c[k] = idx % ns[k];
      idx /= ns[k];
    }
    return c;
  };
  auto index = [&](const std::vector<int>& c) {
    int idx = 0;
    for (std::size_t k = 0; k < ns.size(); ++k) idx = idx * ns[k] + c[k];
    return idx;
  };
  g.table.assign(g.order, std::vector<int>(g.order));
  for (int a = 0; a < g.order; ++a) {
    const auto ca = coords(a);
    std::ostringstream lab;
    lab << "(";
    for (std::size_t k = 0; k < ns.size(); ++k) lab << (k ? "," : "") << ca[k];
    lab << ")";
    g.labels.push_back(lab.str());
    for (int b = 0; b < g.order; ++b) {
      auto cb = coords(b);
      for (std::size_t k = 0; k < ns.size(); ++k) cb[k] = (ca[k] + cb[k]) % ns[k];
      g.table[a][b] = index(cb);
    }
  }
  g.id = 0;
  fill_inverses(g);
  for (std::size_t k = 0; k < ns.size(); ++k) {
    std::vector<int> e(ns.size(), 0);
    if (ns[k] > 1) {
      e[k] = 1;
      g.gens.push_back(index(e));
    }
  }
  // Parent: decrement the last nonzero coordinate, so words read X^a Z^b.
  g.parent.assign(g.order, -1);
  g.parent_gen.assign(g.order, -1);
  for (int a = 1; a < g.order; ++a) {
    auto c = coords(a);
    int k = static_cast<int>(ns.size()) - 1;
    while (c[k] == 0) --k;
    c[k] -= 1;
    g.parent[a] = index(c);
    int gi = 0;
    for (int kk = 0; kk < k; ++kk)
      if (ns[kk] > 1) ++gi;
    g.parent_gen[a] = gi;
  }
  std::ostringstream spec;
  for (std::size_t k = 0; k < ns.size(); ++k) spec << (k ? "x" : "") << "Z" << ns[k];
  g.spec = spec.str();
  return g;
}

FiniteGroup permutation_group(const std::vector<std::vector<int>>& gens,
                              const std::vector<std::string>& gen_names, std::string spec) {
  require(!gens.empty() && gens.size() == gen_names.size(), "permutation_group: one name per generator");
  const std::size_t n = gens[0].size();
  std::vector<int> ident(n);
  for (std::size_t i = 0; i < n; ++i) ident[i] = static_cast<int>(i);
  auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a[b[i]];
    return c;
  };
  std::vector<std::vector<int>> elems{ident};
  std::vector<std::string> labels{"e"};
  std::map<std::vector<int>, int> where{{ident, 0}};
  std::vector<int> parent{-1}, parent_gen{-1};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto p = compose(elems[cur], gens[k]);
      if (where.count(p)) continue;
      where[p] = static_cast<int>(elems.size());
      elems.push_back(p);
      labels.push_back(cur == 0 ? gen_names[k] : labels[cur] + gen_names[k]);
      parent.push_back(cur);
      parent_gen.push_back(static_cast<int>(k));
      queue.push_back(static_cast<int>(elems.size()) - 1);
    }
  }
  FiniteGroup g;
  g.order = static_cast<int>(elems.size());
  g.labels = labels;
  g.table.assign(g.order, std::vector<int>(g.order));
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) g.table[a][b] = where.at(compose(elems[a], elems[b]));
  g.id = 0;
  fill_inverses(g);
  for (std::size_t k = 0; k < gens.size(); ++k) g.gens.push_back(where.at(gens[k]));
  g.parent = parent;
  g.parent_gen = parent_gen;
  g.spec = std::move(spec);
  return g;
}

FiniteGroup a4_group() {
  // x = (0 1)(2 3), y = (0 1 2): x^2 = y^3 = (xy)^3 = e.
  return permutation_group({{1, 0, 3, 2}, {1, 2, 0, 3}}, {"x", "y"}, "A4");
}

FiniteGroup dihedral_group(int n) {
  require(n >= 3, "dihedral group D_n needs n >= 3");
  std::vector<int> r(n), s(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  return permutation_group({r, s}, {"r", "s"}, "D" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  g.order = a.order * b.order;
  g.table.assign(g.order, std::vector<int>(g.order));
  for (int x = 0; x < g.order; ++x) {
    g.labels.push_back(a.labels[x / b.order] + "." + b.labels[x % b.order]);
    for (int y = 0; y < g.order; ++y)
      g.table[x][y] = a.mul(x / b.order, y / b.order) * b.order + b.mul(x % b.order, y % b.order);
  }
  g.id = a.id * b.order + b.id;
  fill_inverses(g);
  for (int ga : a.gens) g.gens.push_back(ga * b.order + b.id);
  for (int gb : b.gens) g.gens.push_back(a.id * b.order + gb);
  // Spanning tree: walk the b factor first, then the a factor.
  if (!a.parent.empty() && !b.parent.empty()) {
    g.parent.assign(g.order, -1);
    g.parent_gen.assign(g.order, -1);
    for (int x = 0; x < g.order; ++x) {
      const int xa = x / b.order, xb = x % b.order;
      if (x == g.id) continue;
      if (xb != b.id) {
        g.parent[x] = xa * b.order + b.parent[xb];
        g.parent_gen[x] = static_cast<int>(a.gens.size()) + b.parent_gen[xb];
      } else {
        g.parent[x] = a.parent[xa] * b.order + b.id;
        g.parent_gen[x] = a.parent_gen[xa];
      }
    }
  }
  g.spec = a.spec + "x" + b.spec;
  return g;
}

FiniteGroup build_group(const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  auto parse_int = [&](const std::string& s) {
    require(!s.empty() && s.find_first_not_of("0123456789") == std::string::npos,
            "unsupported group spec: " + spec);
    return std::stoi(s);
  };
  bool all_cyclic = true;
  for (const auto& p : parts) all_cyclic = all_cyclic && !p.empty() && p[0] == 'Z';
  if (all_cyclic) {
    std::vector<int> ns;
    for (const auto& p : parts) ns.push_back(parse_int(p.substr(1)));
    return cyclic_product_group(ns);
  }
  auto one = [&](const std::string& p) -> FiniteGroup {
    require(!p.empty(), "unsupported group spec: " + spec);
    if (p == "A4") return a4_group();
    if (p[0] == 'Z') return cyclic_product_group({parse_int(p.substr(1))});
    if (p[0] == 'D') return dihedral_group(parse_int(p.substr(1)));
    fail(ErrorKind::InvalidArgument, "unsupported group family: " + p);
  };
  FiniteGroup g = one(parts[0]);
  for (std::size_t k = 1; k < parts.size(); ++k) g = direct_product(g, one(parts[k]));
  g.spec = spec;
  return g;
}

std::vector<std::vector<int>> dihedral_vertex_action(const FiniteGroup& dn, int n) {
  // Rebuild each element's permutation along the spanning tree.
  std::vector<int> r(n), s(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  const std::vector<std::vector<int>> gen{r, s};
  std::vector<std::vector<int>> perm(dn.order);
  for (int g = 0; g < dn.order; ++g) {
    if (g == dn.id) {
      perm[g].resize(n);
      for (int i = 0; i < n; ++i) perm[g][i] = i;
      continue;
    }
    const auto& p = perm[dn.parent[g]];
    const auto& q = gen[dn.parent_gen[g]];
    perm[g].resize(n);
    for (int i = 0; i < n; ++i) perm[g][i] = p[q[i]];
  }
  return perm;
}

namespace {

std::vector<std::vector<cd>> compute_cocycle(const FiniteGroup& g, const std::vector<Mat>& mats, int dim) {
  std::vector<std::vector<cd>> w(g.order, std::vector<cd>(g.order));
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      w[a][b] = (mats[g.mul(a, b)].adjoint() * mats[a] * mats[b]).trace() / static_cast<double>(dim);
  return w;
}

}  // namespace

ProjectiveRep rep_from_generators(const FiniteGroup& g, const std::vector<Mat>& gen_mats, std::string name) {
  require(gen_mats.size() == g.gens.size(), "one matrix per generator");
  require(!gen_mats.empty(), "generator list is empty; use rep_from_matrix_set for the trivial group");
  require(!g.parent.empty(), "group has no spanning tree");
  ProjectiveRep rep;
  rep.group = g;
  rep.dim = static_cast<int>(gen_mats[0].rows());
  rep.name = std::move(name);
  rep.mats.assign(g.order, Mat());
  rep.mats[g.id] = Mat::Identity(rep.dim, rep.dim);
  std::vector<bool> done(g.order, false);
  done[g.id] = true;
  // Parents may appear later than children in index order, so iterate.
  for (int pass = 0; pass < g.order; ++pass) {
    bool progress = false;
    for (int x = 0; x < g.order; ++x) {
      if (done[x] || !done[g.parent[x]]) continue;
      rep.mats[x] = rep.mats[g.parent[x]] * gen_mats[g.parent_gen[x]];
      done[x] = true;
      progress = true;
    }
    if (!progress) break;
  }
  for (int x = 0; x < g.order; ++x) require(done[x], "spanning tree does not reach every element");
  rep.cocycle = compute_cocycle(g, rep.mats, rep.dim);
  return rep;
}

int identify_element(const ProjectiveRep& rep, const Mat& m, cd* phase, double tol) {
  for (int g = 0; g < rep.eta(); ++g) {
    auto c = proportional_phase(rep.mats[g], m, tol);
    if (c) {
      if (phase) *phase = *c;
      return g;
    }
  }
  return -1;
}

ProjectiveRep rep_from_matrix_set(const std::vector<Mat>& mats, const std::vector<std::string>& labels,
                                  std::string spec, std::string name) {
  require(!mats.empty() && mats.size() == labels.size(), "matrix set needs one label per matrix");
  ProjectiveRep rep;
  rep.dim = static_cast<int>(mats[0].rows());
  rep.mats = mats;
  rep.name = std::move(name);
  FiniteGroup& g = rep.group;
  g.order = static_cast<int>(mats.size());
  g.labels = labels;
  g.spec = std::move(spec);
  g.table.assign(g.order, std::vector<int>(g.order));
  rep.group.order = g.order;
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) {
      const int c = identify_element(rep, mats[a] * mats[b], nullptr);
      if (c < 0) fail(ErrorKind::InvalidArgument, "matrix set is not closed under products up to phase");
      g.table[a][b] = c;
    }
  g.id = identify_element(rep, Mat::Identity(rep.dim, rep.dim), nullptr);
  require(g.id >= 0, "matrix set does not contain the identity up to phase");
  fill_inverses(g);
  rep.cocycle = compute_cocycle(g, rep.mats, rep.dim);
  return rep;
}

ProjectiveRep tensor_product_rep(const ProjectiveRep& a, const ProjectiveRep& b, std::string name) {
  ProjectiveRep rep;
  rep.group = direct_product(a.group, b.group);
  rep.dim = a.dim * b.dim;
  rep.name = std::move(name);
  for (int x = 0; x < rep.group.order; ++x)
    rep.mats.push_back(kron(a.mats[x / b.eta()], b.mats[x % b.eta()]));
  rep.cocycle = compute_cocycle(rep.group, rep.mats, rep.dim);
  return rep;
}

ProjectiveRep qudit_pauli_basis(int D) {
  require(D >= 1, "QuditPauli needs D >= 1");
  FiniteGroup g = cyclic_product_group({D, D});
  ProjectiveRep rep;
  if (D == 1) {
    rep.group = g;
    rep.dim = 1;
    rep.mats = {Mat::Identity(1, 1)};
    rep.cocycle = {{cd(1.0)}};
  } else {
    rep = rep_from_generators(g, {shift_matrix(D), clock_matrix(D)}, "");
  }
  rep.name = "pauli" + std::to_string(D);
  return rep;
}

ProjectiveRep weighted_pauli_basis(int l) {
  require(l >= 1, "WeightedPauli needs l >= 1");
  FiniteGroup g = cyclic_product_group(std::vector<int>(2 * static_cast<std::size_t>(l), 2));
  std::vector<Mat> gens;
  const Mat x = shift_matrix(2), z = clock_matrix(2);
  for (int k = 0; k < l; ++k)
    for (const Mat& p : {x, z}) {
      std::vector<Mat> f(static_cast<std::size_t>(l), Mat::Identity(2, 2));
      f[k] = p;
      gens.push_back(kron_all(f));
    }
  return rep_from_generators(g, gens, "wpauli" + std::to_string(l));
}

namespace {

Mat a4_vx() {
  Mat v = Mat::Zero(3, 3);
  v(0, 2) = -1.0;
  v(1, 1) = -1.0;
  v(2, 0) = -1.0;
  return v;
}

Mat a4_vy() {
  const double r = std::sqrt(2.0);
  Mat v(3, 3);
  v << kI / r, 1.0, -kI / r, -kI, 0.0, -kI, kI / r, -1.0, -kI / r;
  return v / r;
}

}  // namespace

ProjectiveRep a4_triplet_basis() { return rep_from_generators(a4_group(), {a4_vx(), a4_vy()}, "a4"); }

ProjectiveRep sp2n_basis(int n) {
  require(n >= 1, "Sp2n needs n >= 1");
  const int D = 2 * n;
  const Mat In = Mat::Identity(n, n), O = Mat::Zero(n, n);
  const Mat xn = shift_matrix(n), zn = clock_matrix(n);
  Mat a(D, D), b(D, D), r(D, D), s(D, D);
  a << In, O, O, -In;
  a *= kI;
  b << xn, O, O, xn;
  r << zn, O, O, zn.conjugate();
  s << O, In, In, O;
  s *= kI;
  std::vector<Mat> mats;
  std::vector<std::string> labels;
  auto add = [&](const Mat& m, const std::string& label) {
    for (const auto& e : mats)
      if (proportional_phase(e, m, 1e-9).has_value()) return;
    mats.push_back(m);
    labels.push_back(label);
  };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l)
          add(mpow(a, i) * mpow(b, j) * mpow(r, k) * mpow(s, l),
              "a" + std::to_string(i) + "b" + std::to_string(j) + "r" + std::to_string(k) + "s" + std::to_string(l));
  // For n >= 3 the indexed products are not closed (b and r only commute up to a block-dependent phase),
  // so complete to the group they generate.
  const std::vector<std::pair<Mat, std::string>> gens{{a, "a"}, {b, "b"}, {r, "r"}, {s, "s"}};
  for (std::size_t idx = 0; idx < mats.size(); ++idx)
    for (const auto& [g, name] : gens) add(mats[idx] * g, labels[idx] + "." + name);
  return rep_from_matrix_set(mats, labels, "sp2n" + std::to_string(n), "sp2n" + std::to_string(n));
}

ProjectiveRep named_defect_basis(const std::string& spec) {
  auto num = [&](std::size_t prefix) {
    const std::string tail = spec.substr(prefix);
    require(!tail.empty() && tail.find_first_not_of("0123456789") == std::string::npos,
            "unknown defect basis: " + spec);
    return std::stoi(tail);
  };
  if (spec == "a4") return a4_triplet_basis();
  if (spec.rfind("wpauli", 0) == 0) return weighted_pauli_basis(num(6));
  if (spec.rfind("pauli", 0) == 0) return qudit_pauli_basis(num(5));
  if (spec.rfind("sp2n", 0) == 0) return sp2n_basis(num(4));
  fail(ErrorKind::InvalidArgument, "unknown defect basis: " + spec);
}

CocycleReport verify_projective_rep(const ProjectiveRep& rep, double tol) {
  CocycleReport out;
  const FiniteGroup& g = rep.group;
  out.cocycle.assign(g.order, std::vector<cd>(g.order));
  double unit = 0.0, res = 0.0;
  bool phases_ok = true;
  for (const auto& m : rep.mats)
    unit = std::max(unit, (m.adjoint() * m - Mat::Identity(rep.dim, rep.dim)).cwiseAbs().maxCoeff());
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) {
      const Mat& target = rep.mats[g.mul(a, b)];
      const Mat prod = rep.mats[a] * rep.mats[b];
      const cd w = (target.adjoint() * prod).trace() / static_cast<double>(rep.dim);
      out.cocycle[a][b] = w;
      res = std::max(res, (prod - w * target).cwiseAbs().maxCoeff());
      phases_ok = phases_ok && std::abs(std::abs(w) - 1.0) <= tol;
    }
  out.max_residual = res;
  out.unitarity_residual = unit;
  out.ok = res <= tol && unit <= tol && phases_ok;
  return out;
}

PovmReport verify_povm_completeness(const ProjectiveRep& rep, double tol) {
  const int D = rep.dim;
  // S[(i,j),(l,m)] = sum_k conj(B_ij) B_lm should be (eta/D) delta_il delta_jm.
  Mat S = Mat::Zero(D * D, D * D);
  for (const auto& b : rep.mats) {
    const Vec v = vec_r(b);
    S += v.conjugate() * v.transpose();
  }
  const double c = static_cast<double>(rep.eta()) / D;
  PovmReport out;
  out.eta_over_D = c;
  out.residual = (S - c * Mat::Identity(D * D, D * D)).cwiseAbs().maxCoeff();
  out.pass = out.residual <= tol;
  return out;
}

CosetData stabilizer_and_cosets(const FiniteGroup& g, const std::vector<std::vector<int>>& perm, int K) {
  require(K >= 1 && static_cast<int>(perm.size()) == g.order, "one permutation per group element");
  for (const auto& p : perm) {
    require(static_cast<int>(p.size()) == K, "permutation must act on K blocks");
    std::vector<bool> seen(K, false);
    for (int x : p) {
      require(x >= 0 && x < K && !seen[x], "perm entries must be a permutation of the blocks");
      seen[x] = true;
    }
  }
  for (int a = 0; a < K; ++a) require(perm[g.id][a] == a, "identity must act trivially");
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y)
      for (int a = 0; a < K; ++a)
        require(perm[g.mul(x, y)][a] == perm[x][perm[y][a]], "perm is not a group action");
  CosetData c;
  c.K = K;
  c.reps.assign(K, -1);
  for (int x = 0; x < g.order; ++x) {
    if (perm[x][0] == 0) c.H.push_back(x);
    if (c.reps[perm[x][0]] < 0) c.reps[perm[x][0]] = x;
  }
  for (int a = 0; a < K; ++a)
    if (c.reps[a] < 0)
      fail(ErrorKind::InvalidArgument, "action is not transitive: split into superblocks first");
  c.hmap.assign(g.order, std::vector<int>(K));
  c.gammamap.assign(g.order, std::vector<int>(K));
  for (int x = 0; x < g.order; ++x)
    for (int a = 0; a < K; ++a) {
      const int gamma = perm[x][a];
      const int h = g.mul(g.inv[c.reps[gamma]], g.mul(x, c.reps[a]));
      require(perm[h][0] == 0, "coset construction produced h outside H");
      c.gammamap[x][a] = gamma;
      c.hmap[x][a] = h;
    }
  return c;
}

json group_to_json(const FiniteGroup& g) {
  json j;
  j["spec"] = g.spec;
  j["order"] = g.order;
  j["id"] = g.id;
  j["labels"] = g.labels;
  j["table"] = g.table;
  j["gens"] = g.gens;
  j["parent"] = g.parent;
  j["parent_gen"] = g.parent_gen;
  return j;
}

json rep_to_json(const ProjectiveRep& rep) {
  json j;
  j["name"] = rep.name;
  j["group"] = group_to_json(rep.group);
  j["dim"] = rep.dim;
  json mats = json::array();
  for (const auto& m : rep.mats) mats.push_back(mat_to_json(m));
  j["mats"] = mats;
  json w = json::array();
  for (const auto& row : rep.cocycle) {
    json r = json::array();
    for (cd z : row) r.push_back(complex_to_json(z));
    w.push_back(r);
  }
  j["cocycle"] = w;
  return j;
}

ProjectiveRep rep_from_json(const json& j) {
  ProjectiveRep rep;
  rep.name = j.value("name", std::string());
  const json& gj = j.at("group");
  FiniteGroup& g = rep.group;
  g.spec = gj.at("spec").get<std::string>();
  g.order = gj.at("order").get<int>();
  g.id = gj.at("id").get<int>();
  g.labels = gj.at("labels").get<std::vector<std::string>>();
  g.table = gj.at("table").get<std::vector<std::vector<int>>>();
  g.gens = gj.at("gens").get<std::vector<int>>();
  g.parent = gj.at("parent").get<std::vector<int>>();
  g.parent_gen = gj.at("parent_gen").get<std::vector<int>>();
  fill_inverses(g);
  validate_group(g);
  rep.dim = j.at("dim").get<int>();
  for (const auto& m : j.at("mats")) rep.mats.push_back(mat_from_json(m));
  require(static_cast<int>(rep.mats.size()) == g.order, "rep file: one matrix per element");
  for (const auto& row : j.at("cocycle")) {
    std::vector<cd> r;
    for (const auto& z : row) r.push_back(complex_from_json(z));
    rep.cocycle.push_back(r);
  }
  return rep;
}

}  // namespace mpsprep
