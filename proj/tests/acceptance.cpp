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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "mpsprep/circuit_sim.hpp"
#include "mpsprep/constructor.hpp"
#include "mpsprep/gallery.hpp"
#include "mpsprep/protocols.hpp"
#include "mpsprep/pushing.hpp"
#include "oracles.hpp"

using namespace mpsprep;

namespace {

constexpr double kFid = 1.0 - 1e-9;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

// tr(A1^{m1} ... An^{mn} X) over a chain of possibly distinct tensors, site 0 most significant.
Vec chain_trace_state(const std::vector<MpsTensor>& chain, const Mat& x) {
  int total = 1;
  for (const auto& t : chain) total *= t.d;
  Vec v(total);
  for (int idx = 0; idx < total; ++idx) {
    Mat p = Mat::Identity(chain[0].D, chain[0].D);
    int rem = idx, stride = total;
    for (const auto& t : chain) {
      stride /= t.d;
      p = p * t.mats[rem / stride];
      rem %= stride;
    }
    v(idx) = (p * x).trace();
  }
  return v.normalized();
}

ProtocolConfig p1_config(const MpsTensor& t, const DefectBasis& basis, int n, int q) {
  ProtocolConfig c;
  c.tensor = t;
  c.basis = basis;
  c.n = n;
  c.q = q;
  c.boundary = BoundarySpec::entangled();
  c.mode = RunMode::AllBranches;
  return c;
}

// 1. Protocol 1, every fusion branch, against the entangled-boundary target and an independent contraction.
void criterion1(Outcome& o) {
  struct Case {
    std::string name;
    json params;
  };
  const std::vector<Case> cases{{"z2_family", {{"g", -0.9}}}, {"z2_family", {{"g", -0.5}}},
                                {"z2_family", {{"g", 0.3}}},  {"aklt", json::object()},
                                {"su3", json::object()},      {"a4_family", {{"theta", kPi / 3.0}, {"phi", 0.7}}},
                                {"ghz", {{"d", 2}}},          {"ghz", {{"d", 3}}}};
  std::int64_t branches = 0;
  double worst = 1.0;
  for (const auto& c : cases) {
    const auto item = gallery_tensor(c.name, c.params);
    const auto basis = gallery_bases(item)[0];
    for (int n : {2, 3, 4}) {
      const auto rs = protocol1(p1_config(*item.tensor, basis, n, item.entry.q));
      const auto sum = summarize(rs);
      const std::int64_t expect = static_cast<std::int64_t>(std::pow(basis.eta(), n - 1));
      o.check(sum.branch_count == expect, c.name + " branch count");
      o.check(std::abs(sum.total_probability - 1.0) < 1e-9, c.name + " total probability");
      const Vec ref = oracle::open_leg_state(item.tensor->mats, n * item.entry.q);
      for (const auto& r : rs) {
        const double f = std::min(r.fidelity, oracle::overlap_fidelity(r.state.amps, ref));
        worst = std::min(worst, f);
        o.check(f >= kFid, c.name + " n=" + std::to_string(n) + " fidelity");
      }
      branches += sum.branch_count;
    }
  }
  o.detail << branches << " branches, min fidelity " << worst;
}

// 2. Protocol 2 on both non-normal examples at N=4, all fusion and disentangling outcomes.
void criterion2(Outcome& o) {
  std::int64_t branches = 0;
  double worst = 1.0;
  for (const std::string name : {"majumdar_ghosh", "z4xz2"}) {
    const auto item = gallery_tensor(name);
    const auto& bs = *item.blocks;
    Protocol2Config c;
    c.blocks = bs;
    c.bases = gallery_bases(item);
    c.n = 4;
    c.q = item.entry.q;
    c.mode = RunMode::AllBranches;
    const int kd = bs.K() * bs.Dbar();
    const std::int64_t expect =
        static_cast<std::int64_t>(std::pow(c.bases[0].eta(), c.n - 1)) * static_cast<std::int64_t>(std::pow(bs.K(), c.n));

    c.boundary = BoundarySpec::entangled();
    auto rs = protocol2(c);
    o.check(summarize(rs).branch_count == expect, name + " entangled branch count");
    o.check(std::abs(summarize(rs).total_probability - 1.0) < 1e-9, name + " total probability");
    for (const auto& r : rs) {
      worst = std::min(worst, r.fidelity);
      o.check(r.fidelity >= kFid, name + " entangled fidelity");
    }
    branches += static_cast<std::int64_t>(rs.size());

    c.boundary = BoundarySpec::matrix(Mat::Identity(kd, kd));
    rs = protocol2(c);
    o.check(summarize(rs).branch_count == expect, name + " periodic branch count");
    const Vec ref = oracle::trace_state(direct_sum(bs).mats, c.n * c.q, Mat::Identity(kd, kd));
    for (const auto& r : rs) {
      const double f = std::min(r.fidelity, oracle::overlap_fidelity(r.state.amps, ref));
      worst = std::min(worst, f);
      o.check(f >= kFid, name + " periodic fidelity");
    }
    branches += static_cast<std::int64_t>(rs.size());
  }
  o.detail << branches << " branches, min fidelity " << worst;
}

// 3. Closed-form correlation lengths over 20-point grids.
void criterion3(Outcome& o) {
  double err = 0.0;
  for (int k = 0; k < 20; ++k) {
    // g in (-1, 1) avoiding 0 and the endpoints.
    const double g = -0.95 + 1.9 * k / 19.0 + (k == 10 ? 0.01 : 0.0);
    const double ln = std::log((1.0 + g) / (1.0 - g));
    const double expect = 1.0 / std::abs(ln);
    const auto xi = correlation_length(z2_family_tensor(g));
    o.check(!xi.infinite, "z2 xi finite");
    err = std::max(err, std::abs(xi.value - expect));
  }
  for (int k = 0; k < 20; ++k) {
    // theta in (0, pi) avoiding the infinite-xi endpoints.
    const double th = 0.05 + (kPi - 0.1) * k / 19.0;
    const double c = std::cos(th);
    const double expect = -1.0 / std::log(0.5 * std::sqrt(1.0 + 3.0 * c * c));
    const auto xi = correlation_length(a4_family_tensor(th, 0.3 * k));
    o.check(!xi.infinite, "a4 xi finite");
    err = std::max(err, std::abs(xi.value - expect));
  }
  o.check(err < 1e-9, "xi error");
  o.detail << "max abs error " << err;
}

// 4. Theorem oracles: unitarity implies existence; singular-value invariant; ZCL universality.
void criterion4(Outcome& o) {
  Rng rng(2026);
  std::vector<MpsTensor> pool{aklt_tensor(), su3_tensor(), so5_tensor(), ghz_tensor(2), ghz_tensor(3)};
  std::vector<DefectBasis> bases{named_defect_basis("pauli2"), named_defect_basis("pauli3"),
                                 named_defect_basis("wpauli2"), named_defect_basis("pauli2"),
                                 named_defect_basis("pauli3")};
  for (double g : {-0.9, -0.5, -0.2, 0.3, 0.7}) {
    pool.push_back(z2_family_tensor(g));
    bases.push_back(named_defect_basis("pauli2"));
  }
  for (double th : {0.4, 1.1, kPi / 2.0}) {
    pool.push_back(a4_family_tensor(th, th));
    bases.push_back(named_defect_basis("a4"));
  }
  int passing = 0, counterexamples = 0;
  double sv_worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t pick = rng() % pool.size();
    const Mat map = block_tensor(pool[pick], 1).map.mat;
    const auto& b = bases[pick];
    const int D = pool[pick].D;
    Mat ol, orr;
    switch (trial % 3) {
      case 0:
        ol = b.mats[rng() % b.eta()];
        orr = b.mats[rng() % b.eta()];
        break;
      case 1: {
        const Mat v = b.mats[rng() % b.eta()];
        ol = v.adjoint();
        orr = v;
        break;
      }
      default:
        ol = oracle::random_unitary(D, rng);
        orr = oracle::random_unitary(D, rng);
    }
    if (!unitarity_check(ol, orr, map).pass) continue;
    ++passing;
    if (!existence_check(ol, orr, map).pass) ++counterexamples;
    sv_worst = std::max(sv_worst, singular_value_block_residual(ol, orr, map));
  }
  o.check(counterexamples == 0, "unitarity without existence");
  o.check(passing >= 50, "too few passing trials");
  o.check(sv_worst <= kPushTol, "singular-value invariant");

  // ZCL tensors: cluster blocked twice, the dimer block and full-selection constructions.
  std::vector<Mat> zcl{block_tensor(z2_family_tensor(-1.0), 2).map.mat,
                       block_tensor(majumdar_ghosh_blocks().blocks[1], 1).map.mat};
  for (const std::string spec : {"pauli2", "pauli3"}) {
    const auto v = named_defect_basis(spec);
    const auto dec = irrep_decomposition(tensor_square_rep(v));
    std::vector<std::pair<int, int>> all;
    for (std::size_t j = 0; j < dec.irreps.size(); ++j)
      for (int k = 0; k < dec.multiplicity[j]; ++k) all.push_back({static_cast<int>(j), k});
    const auto c = construct_tensor(v, dec, sample_intertwiner(dec, rng), select_irreps(dec, all));
    zcl.push_back(block_tensor(c.tensor, 1).map.mat);
  }
  int zcl_fail = 0;
  for (const auto& map : zcl) {
    const int D = static_cast<int>(std::lround(std::sqrt(static_cast<double>(map.cols()))));
    for (int t = 0; t < 100; ++t)
      if (!unitarity_check(oracle::random_unitary(D, rng), oracle::random_unitary(D, rng), map).pass) ++zcl_fail;
  }
  o.check(zcl_fail == 0, "ZCL pair rejected");
  o.detail << passing << "/500 passing trials, 0 counterexamples required (" << counterexamples
           << "), sv residual " << sv_worst << ", ZCL failures " << zcl_fail << "/" << 100 * zcl.size();
}

// 5. A4 fusion: ancilla dimension and Born probabilities.
void criterion5(Outcome& o) {
  const auto basis = named_defect_basis("a4");
  const auto f = fusion_basis_unitary(basis);
  o.check(f.p == std::lcm(12, 9) / 9 && f.p == 4, "ancilla dimension");
  o.check(is_unitary(f.U, 1e-12), "fusion unitary");
  const int D = f.D;
  double resid = 0.0;

  // Bonds each maximally entangled with their own segment: every outcome at 1/eta.
  PureState s = basis_state({D, D, D, D}, {"r1", "b1", "b2", "r2"}, {0, 0, 0, 0});
  s.amps.setZero();
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) s.amps(((i * D + i) * D + j) * D + j) = 1.0 / D;
  append_wire(s, f.p, "anc");
  apply_unitary(s, f.U, {1, 2, 4});
  auto p = outcome_probabilities(s, {1, 2, 4});
  for (int k = 0; k < f.eta; ++k) resid = std::max(resid, std::abs(p[k] - 1.0 / 12.0));
  for (std::size_t k = f.eta; k < p.size(); ++k) resid = std::max(resid, p[k]);

  // Bond pair maximally entangled with each other: probabilities |<B_k|Phi>|^2 from the amplitude formula.
  PureState phi = basis_state({D, D}, {"b1", "b2"}, {0, 0});
  phi.amps.setZero();
  for (int i = 0; i < D; ++i) phi.amps(i * D + i) = 1.0 / std::sqrt(static_cast<double>(D));
  append_wire(phi, f.p, "anc");
  apply_unitary(phi, f.U, {0, 1, 2});
  p = outcome_probabilities(phi, {0, 1, 2});
  double total = 0.0;
  for (int k = 0; k < f.eta; ++k) {
    const double expect = static_cast<double>(D) / f.eta * std::norm(basis.mats[k].trace()) / D;
    resid = std::max(resid, std::abs(p[k] - expect));
    total += p[k];
  }
  resid = std::max(resid, std::abs(total - 1.0));
  o.check(resid < 1e-12, "Born residual");
  o.detail << "p=" << f.p << ", 12 outcomes, residual " << resid;
}

// 6. AKLT N=8 boundary statistics.
void criterion6(Outcome& o) {
  const int n = 8;
  const auto a = aklt_tensor();
  const PureState target = dense_state(a, BoundarySpec::entangled(), n);
  const std::vector<int> left{0}, right{n + 1};

  // Exact distribution: project onto each realised boundary matrix.
  Rng rng(8);
  std::map<int, Mat> realised;
  std::map<int, int> counts;
  const int shots = 10000;
  for (int t = 0; t < shots; ++t) {
    PureState copy = target;
    const auto rec = project_boundary(copy, left, right, BoundarySpec::matrix(Mat::Identity(2, 2)), &rng);
    ++counts[rec.outcome];
    realised.emplace(rec.outcome, rec.X);
  }
  double tv = 0.0, prob_dev = 0.0, total = 0.0;
  const auto basis = named_defect_basis("pauli2");
  for (int k = 0; k < basis.eta(); ++k) {
    // Boundary matrix for outcome k, taken from a realised shot when available.
    double exact = 0.0;
    auto it = realised.find(k);
    if (it != realised.end()) {
      PureState copy = target;
      exact = project_boundary(copy, left, right, BoundarySpec::matrix(it->second), nullptr).probability;
    }
    total += exact;
    tv += 0.5 * std::abs(exact - static_cast<double>(counts[k]) / shots);
    prob_dev = std::max(prob_dev, std::abs(exact - 0.25));
  }
  o.check(realised.size() == 4u, "all four outcomes observed");
  o.check(std::abs(total - 1.0) < 1e-10, "exact probabilities sum to one");
  o.check(tv <= 0.02, "total variation");
  o.check(prob_dev <= 1e-3, "exact probabilities near 1/4");

  // Open boundary, right edge grown from |R>.
  ProtocolConfig c = p1_config(a, basis, n, 1);
  c.mode = RunMode::Branch;
  c.branch = std::vector<int>(n - 1, 0);
  Vec e(2);
  e << 1, 0;
  c.boundary = BoundarySpec::open_edges(e, e);
  c.open_bc_optimization = true;
  const auto r = protocol1(c)[0];
  o.check(std::abs(r.boundary.probability - 0.5) <= 1e-3, "open-opt probability near 1/2");
  o.check(r.fidelity >= kFid, "open-opt fidelity");
  o.detail << "TV " << tv << ", max |p-1/4| " << prob_dev << ", open-opt p " << r.boundary.probability;
}

// 7. Constructor round trips, certificates and pushing completeness.
void criterion7(Outcome& o) {
  {
    const auto v = named_defect_basis("pauli2");
    const auto dec = irrep_decomposition(tensor_square_rep(v));
    const std::vector<cd> f{1.0, kI, -1.0, 1.0};
    std::vector<Mat> factors;
    for (cd z : f) factors.push_back(Mat::Constant(1, 1, z));
    const auto c = construct_tensor(v, dec, sample_intertwiner(dec, factors), select_irreps(dec, {{1, 0}, {2, 0}, {3, 0}}));
    const double r = 1.0 / std::sqrt(2.0);
    Mat s(3, 3);
    s << -kI * r, 0.0, r, kI * r, 0.0, r, 0.0, 1.0, 0.0;
    std::vector<Mat> mapped(3, Mat::Zero(2, 2));
    for (int a = 0; a < 3; ++a)
      for (int m = 0; m < 3; ++m) mapped[a] += s(a, m) * c.raw.mats[m];
    const Mat id = Mat::Identity(2, 2);
    const double fid = oracle::overlap_fidelity(oracle::trace_state(mapped, 4, id),
                                                oracle::trace_state(aklt_tensor().mats, 4, id));
    o.check(fid >= 1.0 - 1e-10, "AKLT round trip");
    o.check(c.certificate.pass && c.certificate.max_residual <= 1e-9, "AKLT certificate");
    o.detail << "AKLT fidelity " << fid << "; ";
  }
  {
    const auto v = rep_from_generators(cyclic_product_group({2}), {oracle::pauli(2)}, "Z2y");
    const auto dec = irrep_decomposition(tensor_square_rep(v));
    double worst = 1.0;
    for (double g : {-0.9, -0.5, -0.2}) {
      const double eta = 1.0 / std::sqrt(1.0 + std::abs(g));
      const double w1 = eta / std::sqrt(2.0), w5 = -std::sqrt(-g) * eta / std::sqrt(2.0);
      Mat even(4, 2), odd(4, 2);
      even << w1, w5, w5, -w1, -w5, w1, w1, w5;
      odd << w1, w5, w5, -w1, w5, -w1, -w1, -w5;
      const Mat w = sample_intertwiner(dec, {dec.canonical[0].adjoint() * even, dec.canonical[1].adjoint() * odd});
      const auto c = construct_tensor(v, dec, w, select_irreps(dec, {{0, 0}, {1, 0}}));
      o.check(c.certificate.pass && c.certificate.max_residual <= 1e-9, "Z2 certificate");
      const std::vector<Mat> pm{(c.raw.mats[0] + c.raw.mats[1]) / std::sqrt(2.0),
                                (c.raw.mats[0] - c.raw.mats[1]) / std::sqrt(2.0)};
      const Mat id = Mat::Identity(2, 2);
      const double fid = oracle::overlap_fidelity(oracle::trace_state(pm, 4, id),
                                                  oracle::trace_state(z2_family_tensor(g).mats, 4, id));
      worst = std::min(worst, fid);
    }
    o.check(worst >= 1.0 - 1e-10, "Z2 round trip");
    o.detail << "Z2 fidelity " << worst << "; ";
  }
  Rng rng(77);
  int built = 0, pushed = 0;
  for (const std::string spec : {"pauli2", "pauli3", "a4", "wpauli2"}) {
    const auto v = named_defect_basis(spec);
    const auto dec = irrep_decomposition(tensor_square_rep(v));
    std::vector<std::pair<int, int>> all;
    for (std::size_t j = 0; j < dec.irreps.size(); ++j)
      for (int k = 0; k < dec.multiplicity[j]; ++k) all.push_back({static_cast<int>(j), k});
    for (int t = 0; t < 6; ++t) {
      std::shuffle(all.begin(), all.end(), rng);
      const std::size_t keep = std::min(all.size(), 2 + rng() % (all.size() - 1));
      const std::vector<std::pair<int, int>> picks(all.begin(), all.begin() + keep);
      const auto c = construct_tensor(v, dec, sample_intertwiner(dec, rng), select_irreps(dec, picks));
      ++built;
      o.check(c.certificate.pass && c.certificate.max_residual <= 1e-9, spec + " certificate");
      if (!c.normal) continue;
      ++pushed;
      o.check(build_pushing_table(block_tensor(c.tensor, 1), v).complete, spec + " pushing table");
    }
  }
  o.check(pushed > 0, "no normal constructions");
  o.detail << built << " Haar constructions certified, " << pushed << " normal with complete tables";
}

// 8. Samplers against the recorded-tensor oracle.
void criterion8(Outcome& o) {
  Rng rng(808);
  double worst = 1.0;
  for (int run = 0; run < 50; ++run) {
    const int n = 2 + run % 4;
    const int d = 2 + run % 2, D = 1 + run % 3;
    const auto r = sample_random_mps(d, D, n, rng);
    const double f = std::min(r.fidelity, oracle::overlap_fidelity(r.state.amps, chain_trace_state(r.tensors, r.boundary.X)));
    worst = std::min(worst, f);
    o.check(f >= kFid, "random sampler fidelity");
  }
  for (int run = 0; run < 50; ++run) {
    const int n = 2 + run % 4;
    const int junk = 1 + run % 2;
    const auto r = sample_spt_phase(junk, n, rng);
    const double f = std::min(r.fidelity, oracle::overlap_fidelity(r.state.amps, chain_trace_state(r.tensors, r.boundary.X)));
    worst = std::min(worst, f);
    o.check(f >= kFid, "spt sampler fidelity");
    o.check(r.factor_residual < 1e-9, "spt protected factor");
  }
  o.detail << "100 runs, min fidelity " << worst;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"1 all-branch determinism (protocol 1)", criterion1},
      {"2 non-normal determinism (protocol 2)", criterion2},
      {"3 correlation-length closed forms", criterion3},
      {"4 theorem oracles", criterion4},
      {"5 POVM/ancilla arithmetic (A4)", criterion5},
      {"6 boundary statistics (AKLT N=8)", criterion6},
      {"7 constructor round trips", criterion7},
      {"8 sampling oracles", criterion8},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.str().c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
