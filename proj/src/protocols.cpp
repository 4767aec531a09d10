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

#include "mpsprep/protocols.hpp"

#include <chrono>
#include <cmath>
#include <functional>

#include "mpsprep/gallery.hpp"

namespace mpsprep {

namespace {

using Clock = std::chrono::steady_clock;

std::string mode_name(RunMode m) {
  switch (m) {
    case RunMode::Sample:
      return "sample";
    case RunMode::Branch:
      return "branch";
    case RunMode::AllBranches:
      return "all-branches";
  }
  return "";
}

std::string boundary_name(const BoundarySpec& b) {
  switch (b.kind) {
    case BoundarySpec::Kind::Entangled:
      return "entangled";
    case BoundarySpec::Kind::Matrix:
      return "matrix";
    case BoundarySpec::Kind::OpenEdges:
      return "open";
  }
  return "";
}

json boundary_json(const BoundarySpec& b) {
  json j;
  j["kind"] = boundary_name(b);
  if (b.kind == BoundarySpec::Kind::Matrix) j["X"] = mat_to_json(b.X);
  if (b.kind == BoundarySpec::Kind::OpenEdges) {
    j["L"] = vec_to_json(b.L);
    j["R"] = vec_to_json(b.R);
  }
  return j;
}

bool is_identity(const Mat& m, double tol = 1e-14) {
  return m.rows() == m.cols() && (m - Mat::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

/// Segment grown with one dilation per site, applied right to left.
PureState grow_segment(const std::vector<Mat>& dilations, int D, int d, const std::optional<Vec>& right) {
  const int q = static_cast<int>(dilations.size());
  PureState s;
  if (right) {
    require(right->size() == D && right->norm() > 0.0, "right boundary vector must have size D");
    s.dims = {D};
    s.labels = {"bL"};
    s.amps = *right / right->norm();
  } else {
    s.dims = {D, D};
    s.labels = {"bL", "bR"};
    s.amps = Vec::Zero(D * D);
    for (int j = 0; j < D; ++j) s.amps(j * D + j) = 1.0 / std::sqrt(static_cast<double>(D));
  }
  std::vector<int> pdims(q, d);
  std::vector<std::string> plabels;
  for (int t = 0; t < q; ++t) plabels.push_back("p" + std::to_string(t));
  s = tensor_product(s, basis_state(pdims, plabels, std::vector<int>(q, 0)));
  if (!right) {
    std::vector<int> order{0};
    for (int t = 0; t < q; ++t) order.push_back(2 + t);
    order.push_back(1);
    permute_wires(s, order);
  }
  for (int t = q - 1; t >= 0; --t) apply_unitary(s, dilations[t], {0, 1 + t});
  return s;
}

std::vector<std::string> chain_labels(int n_phys, bool with_right) {
  std::vector<std::string> l{"bL"};
  for (int k = 0; k < n_phys; ++k) l.push_back("p" + std::to_string(k));
  if (with_right) l.push_back("bR");
  return l;
}

/// Generalised Bell vectors of qudit Paulis, or nullopt if `target` is not among them.
std::optional<std::pair<Mat, int>> bell_basis_containing(const Vec& target, int D) {
  const ProjectiveRep pauli = qudit_pauli_basis(D);
  Mat W(D * D, D * D);
  int hit = -1;
  for (int k = 0; k < pauli.eta(); ++k) {
    W.col(k) = bell_vector(pauli.mats[k]);
    if (std::abs(std::abs(W.col(k).dot(target)) - 1.0) < 1e-10) hit = k;
  }
  if (hit < 0) return std::nullopt;
  // Use the requested vector itself so the realised boundary matches it exactly.
  W.col(hit) = target;
  return std::make_pair(W, hit);
}

struct MeasuredVector {
  int outcome = 0;
  double probability = 0.0;
  Vec vec;
  bool success = false;
};

/// Measures `wires` in an orthonormal basis containing `target` (normalised); removes them.
MeasuredVector measure_in_basis_with(PureState& s, const std::vector<int>& wires, const Vec& target, Rng& rng,
                                     bool prefer_bell, int D) {
  Mat W;
  int hit = 0;
  std::optional<std::pair<Mat, int>> bell;
  if (prefer_bell) bell = bell_basis_containing(target, D);
  if (bell) {
    W = bell->first;
    hit = bell->second;
  } else {
    W = complete_unitary(target, {0}, static_cast<int>(target.size()), 1e-9);
  }
  apply_unitary(s, W.adjoint(), wires);
  const MeasurementRecord r = measure(s, wires, rng);
  remove_wires(s, wires);
  return {r.outcome, r.probability, W.col(r.outcome), r.outcome == hit};
}

std::int64_t wires_dim(const PureState& s, const std::vector<int>& wires) {
  std::int64_t n = 1;
  for (int w : wires) n *= s.dims[w];
  return n;
}

}  // namespace

PureState sequential_prepare(const MpsTensor& a, int q_sites, const std::optional<Vec>& right) {
  require(q_sites >= 1, "sequential_prepare: need at least one site");
  const Mat U = stinespring_dilation(a);
  return grow_segment(std::vector<Mat>(q_sites, U), a.D, a.d, right);
}

Corrections resolve_defects(const std::vector<int>& outcomes, const PushingTable& table, int n_segments) {
  require(n_segments >= 1, "resolve_defects: need at least one segment");
  require(static_cast<int>(outcomes.size()) == n_segments - 1, "resolve_defects: one outcome per fusion");
  const ProjectiveRep& B = table.basis;
  const FiniteGroup& G = B.group;
  require(is_identity(B.mats[G.id], 1e-12), "resolve_defects: identity element must be represented by 1");
  const int dq = table.blocked.d_phys();
  Corrections c;
  c.site.assign(n_segments, Mat::Identity(dq, dq));
  c.defect.assign(n_segments, G.id);
  c.partner.assign(n_segments, G.id);
  int g = G.id;
  cd lambda(1.0);
  for (int s = n_segments - 1; s >= 0; --s) {
    if (s < n_segments - 1) {
      const int k = outcomes[s];
      require(k >= 0 && k < B.eta(), "resolve_defects: outcome out of range");
      lambda *= B.cocycle[k][g];
      g = G.mul(k, g);
    }
    c.defect[s] = g;
    if (g == G.id) continue;
    const PushingEntry& e = table.entry(g);
    c.site[s] = e.Ophys_lifted.adjoint();
    c.partner[s] = e.partner;
    // (B^h)^dagger = B^{h^-1} / omega(h^-1, h).
    const int h = e.partner;
    lambda /= B.cocycle[G.inv[h]][h];
    g = G.inv[h];
  }
  c.edge_defect = g;
  c.edge_phase = lambda;
  c.edge = (lambda * B.mats[g]).adjoint();
  return c;
}

BranchSummary summarize(const std::vector<ProtocolReport>& reports) {
  BranchSummary s;
  s.branch_count = static_cast<std::int64_t>(reports.size());
  for (const auto& r : reports) {
    s.min_fidelity = std::min(s.min_fidelity, r.fidelity);
    s.min_bulk_fidelity = std::min(s.min_bulk_fidelity, r.bulk_fidelity);
    double p = 1.0;
    for (double x : r.outcome_probabilities) p *= x;
    s.total_probability += p;
  }
  return s;
}

BoundaryRecord project_boundary(PureState& s, const std::vector<int>& left, const std::vector<int>& right,
                                const BoundarySpec& boundary, Rng* rng) {
  BoundaryRecord rec;
  rec.kind = boundary_name(boundary);
  switch (boundary.kind) {
    case BoundarySpec::Kind::Entangled:
      return rec;
    case BoundarySpec::Kind::Matrix: {
      const int Dl = static_cast<int>(wires_dim(s, left));
      require(Dl == wires_dim(s, right) && boundary.X.rows() == Dl, "project_boundary: boundary size mismatch");
      std::vector<int> wires = left;
      wires.insert(wires.end(), right.begin(), right.end());
      // |B> with B = X^T, so that the surviving amplitude is tr(P X).
      const Vec target = bell_vector(boundary.X.transpose()).normalized();
      if (!rng) {
        rec.probability = project_onto(s, wires, target);
        rec.outcome = 0;
        rec.X = boundary.X;
        return rec;
      }
      const MeasuredVector m = measure_in_basis_with(s, wires, target, *rng, true, Dl);
      rec.outcome = m.outcome;
      rec.probability = m.probability;
      rec.success = m.success;
      rec.X = unvec_r(m.vec.conjugate(), Dl, Dl).transpose();
      rec.X /= rec.X.norm();
      return rec;
    }
    case BoundarySpec::Kind::OpenEdges: {
      require(wires_dim(s, left) == boundary.L.size(), "project_boundary: left vector size mismatch");
      if (!rng) {
        rec.probability = project_onto(s, left, boundary.L);
        rec.outcome = 0;
        rec.L = boundary.L;
      } else {
        const MeasuredVector m = measure_in_basis_with(s, left, boundary.L, *rng, false, 0);
        rec.outcome = m.outcome;
        rec.probability = m.probability;
        rec.success = m.success;
        rec.L = m.vec;
      }
      if (!right.empty()) {
        // Right wires shift left once the left edge is gone.
        std::vector<int> r = right;
        for (int& w : r)
          for (int l : left)
            if (l < w) --w;
        const Vec target = boundary.R.conjugate();
        if (!rng) {
          rec.probability *= project_onto(s, r, target);
        } else {
          const MeasuredVector m = measure_in_basis_with(s, r, target, *rng, false, 0);
          rec.probability *= m.probability;
          rec.success = rec.success && m.success;
          rec.outcome = rec.outcome * static_cast<int>(target.size()) + m.outcome;
          if (!m.success) fail(ErrorKind::InvariantViolation,
                               "project_boundary: sampling both open edges needs the optimised variant");
        }
      }
      return rec;
    }
  }
  return rec;
}

namespace {

struct P1Context {
  const ProtocolConfig* cfg = nullptr;
  PushingTable table;
  FusionUnitary fu;
  PureState segment;
  PureState last_segment;
  bool open_right = false;
  int N = 0;
  PureState bulk_target;
  std::string hash;
  Rng rng;
};

std::string config_hash(const json& j) { return fnv1a_hex(dump_json(j, 0)); }

json p1_config_json(const ProtocolConfig& cfg) {
  json j;
  j["tensor"] = cfg.tensor.name;
  j["params"] = cfg.tensor.params;
  j["d"] = cfg.tensor.d;
  j["D"] = cfg.tensor.D;
  j["q"] = cfg.q;
  j["n"] = cfg.n;
  j["basis"] = cfg.basis.name;
  j["boundary"] = boundary_json(cfg.boundary);
  j["mode"] = mode_name(cfg.mode);
  j["seed"] = cfg.seed;
  j["branch"] = cfg.branch;
  j["open_bc_optimization"] = cfg.open_bc_optimization;
  j["literal_fusion"] = cfg.literal_fusion;
  return j;
}

/// Fuses the last bond of the register with the first bond of a fresh segment.
double fuse(PureState& st, int left_bond, int right_bond, const FusionUnitary& fu, RunMode mode, bool literal,
            int* outcome, Rng& rng) {
  std::vector<int> wires{left_bond, right_bond};
  if (mode == RunMode::Sample || literal) {
    if (fu.p > 1) {
      append_wire(st, fu.p, "anc");
      wires.push_back(st.num_wires() - 1);
    }
    apply_unitary(st, fu.U, wires);
    double p = 0.0;
    if (mode == RunMode::Sample) {
      const MeasurementRecord r = measure(st, wires, rng);
      *outcome = r.outcome;
      p = r.probability;
    } else {
      p = project(st, wires, *outcome);
    }
    remove_wires(st, wires);
    return p;
  }
  const Vec v = fu.VB.row(*outcome).adjoint();
  return project_onto(st, wires, v);
}

void p1_finish(P1Context& ctx, PureState st, const std::vector<int>& outcomes, const std::vector<double>& probs,
               std::vector<ProtocolReport>& out, Clock::time_point t0) {
  const ProtocolConfig& cfg = *ctx.cfg;
  ProtocolReport r;
  r.protocol = "protocol1";
  r.config_hash = ctx.hash;
  r.seed = cfg.seed;
  r.mode = mode_name(cfg.mode);
  r.outcomes = outcomes;
  r.outcome_probabilities = probs;
  const Corrections c = resolve_defects(outcomes, ctx.table, cfg.n);
  for (int s = 0; s < cfg.n; ++s) {
    if (is_identity(c.site[s])) continue;
    std::vector<int> wires;
    for (int t = 0; t < cfg.q; ++t) wires.push_back(1 + s * cfg.q + t);
    apply_unitary(st, c.site[s], wires);
  }
  if (!is_identity(c.edge)) apply_unitary(st, c.edge, {0});
  r.corrected_defects = {c.defect};
  r.partners = {c.partner};
  r.corrections = {c.site};
  r.edge_corrections = {c.edge};
  r.bulk_fidelity = fidelity(st, ctx.bulk_target);

  const bool sample = cfg.mode == RunMode::Sample;
  std::vector<int> left{0}, right;
  if (!ctx.open_right) right.push_back(st.num_wires() - 1);
  if (cfg.boundary.kind == BoundarySpec::Kind::Entangled) {
    r.fidelity = r.bulk_fidelity;
  } else {
    r.boundary = project_boundary(st, left, right, cfg.boundary, sample ? &ctx.rng : nullptr);
    BoundarySpec realised = cfg.boundary;
    if (cfg.boundary.kind == BoundarySpec::Kind::Matrix) realised = BoundarySpec::matrix(r.boundary.X);
    if (cfg.boundary.kind == BoundarySpec::Kind::OpenEdges)
      realised = BoundarySpec::open_edges(r.boundary.L, cfg.boundary.R);
    r.fidelity = fidelity(st, dense_state(cfg.tensor, realised, ctx.N));
  }
  r.wall_time_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  r.state = std::move(st);
  out.push_back(std::move(r));
}

void p1_recurse(P1Context& ctx, PureState st, int seg, std::vector<int>& outcomes, std::vector<double>& probs,
                std::vector<ProtocolReport>& out, Clock::time_point t0) {
  const ProtocolConfig& cfg = *ctx.cfg;
  if (seg == cfg.n) {
    p1_finish(ctx, std::move(st), outcomes, probs, out, t0);
    return;
  }
  const bool last = seg == cfg.n - 1;
  const PureState& fresh = last && ctx.open_right ? ctx.last_segment : ctx.segment;
  PureState joined = tensor_product(st, fresh);
  const int left_bond = st.num_wires() - 1;
  const int right_bond = st.num_wires();
  const int n_phys = (seg + 1) * cfg.q;
  const bool with_right = !(last && ctx.open_right);

  auto relabel = [&](PureState& s) { s.labels = chain_labels(n_phys, with_right); };

  switch (cfg.mode) {
    case RunMode::Sample: {
      int k = 0;
      const double p = fuse(joined, left_bond, right_bond, ctx.fu, cfg.mode, true, &k, ctx.rng);
      relabel(joined);
      outcomes.push_back(k);
      probs.push_back(p);
      p1_recurse(ctx, std::move(joined), seg + 1, outcomes, probs, out, t0);
      outcomes.pop_back();
      probs.pop_back();
      return;
    }
    case RunMode::Branch: {
      int k = cfg.branch[seg - 1];
      const double p = fuse(joined, left_bond, right_bond, ctx.fu, cfg.mode, cfg.literal_fusion, &k, ctx.rng);
      relabel(joined);
      outcomes.push_back(k);
      probs.push_back(p);
      p1_recurse(ctx, std::move(joined), seg + 1, outcomes, probs, out, t0);
      outcomes.pop_back();
      probs.pop_back();
      return;
    }
    case RunMode::AllBranches: {
      for (int k = 0; k < ctx.fu.eta; ++k) {
        PureState child = joined;
        int kk = k;
        const double p = fuse(child, left_bond, right_bond, ctx.fu, cfg.mode, cfg.literal_fusion, &kk, ctx.rng);
        relabel(child);
        outcomes.push_back(k);
        probs.push_back(p);
        p1_recurse(ctx, std::move(child), seg + 1, outcomes, probs, out, t0);
        outcomes.pop_back();
        probs.pop_back();
      }
      return;
    }
  }
}

void p1_validate(const ProtocolConfig& cfg) {
  require(cfg.q >= 1 && cfg.n >= 1, "protocol1: q and n must be positive");
  require(cfg.basis.dim == cfg.tensor.D, "protocol1: defect basis must act on the bond dimension");
  if (cfg.open_bc_optimization)
    require(cfg.boundary.kind == BoundarySpec::Kind::OpenEdges, "open-BC optimisation needs open edges");
  if (cfg.mode == RunMode::Branch)
    require(static_cast<int>(cfg.branch.size()) == cfg.n - 1, "branch mode needs one outcome per fusion");
}

P1Context p1_context(const ProtocolConfig& cfg) {
  P1Context ctx;
  ctx.cfg = &cfg;
  ctx.N = cfg.n * cfg.q;
  ctx.rng = Rng(cfg.seed);
  ctx.hash = config_hash(p1_config_json(cfg));
  if (left_canonical_residual(cfg.tensor) > 1e-10)
    fail(ErrorKind::InvalidArgument, "protocol1: tensor must be left-canonical");
  ctx.table = build_pushing_table(block_tensor(cfg.tensor, cfg.q), cfg.basis);
  if (cfg.n > 1 && !ctx.table.complete)
    fail(ErrorKind::InvariantViolation, "protocol1: pushing table is incomplete for basis " + cfg.basis.name +
                                            " at q=" + std::to_string(cfg.q));
  ctx.fu = fusion_basis_unitary(cfg.basis);
  ctx.open_right = cfg.open_bc_optimization;
  ctx.segment = sequential_prepare(cfg.tensor, cfg.q);
  if (ctx.open_right) ctx.last_segment = sequential_prepare(cfg.tensor, cfg.q, cfg.boundary.R);
  ctx.bulk_target = dense_state(cfg.tensor, BoundarySpec::entangled(), ctx.N);
  if (ctx.open_right) {
    // Bulk target with the right bond fixed to |R>.
    project_onto(ctx.bulk_target, {ctx.bulk_target.num_wires() - 1}, cfg.boundary.R.conjugate());
  }
  return ctx;
}

}  // namespace

std::vector<ProtocolReport> protocol1(const ProtocolConfig& cfg) {
  const auto t0 = Clock::now();
  p1_validate(cfg);
  P1Context ctx = p1_context(cfg);
  if (cfg.mode == RunMode::AllBranches) {
    double count = std::pow(static_cast<double>(ctx.fu.eta), cfg.n - 1);
    if (count > static_cast<double>(cfg.max_branches))
      fail(ErrorKind::BudgetExceeded, "protocol1: " + fmt_double(count) + " branches exceed the cap");
  }
  std::vector<ProtocolReport> out;
  std::vector<int> outcomes;
  std::vector<double> probs;
  const PureState& first = cfg.n == 1 && ctx.open_right ? ctx.last_segment : ctx.segment;
  PureState st = first;
  st.labels = chain_labels(cfg.q, !(cfg.n == 1 && ctx.open_right));
  p1_recurse(ctx, std::move(st), 1, outcomes, probs, out, t0);
  return out;
}

ProtocolReport protocol1_parallel_branch(const ProtocolConfig& cfg, const std::vector<int>& outcomes) {
  const auto t0 = Clock::now();
  require(static_cast<int>(outcomes.size()) == cfg.n - 1, "one outcome per fusion");
  require(!cfg.open_bc_optimization, "parallel cross-check uses two-sided segments");
  P1Context ctx = p1_context(cfg);
  // All segments first, then every fusion on the joint register.
  PureState st = ctx.segment;
  for (int s = 1; s < cfg.n; ++s) st = tensor_product(st, ctx.segment);
  const int w = cfg.q + 2;
  std::vector<double> probs;
  for (int s = cfg.n - 2; s >= 0; --s) {
    const int left_bond = s * w + w - 1;
    const Vec v = ctx.fu.VB.row(outcomes[s]).adjoint();
    probs.insert(probs.begin(), project_onto(st, {left_bond, left_bond + 1}, v));
  }
  st.labels = chain_labels(ctx.N, true);
  std::vector<ProtocolReport> out;
  p1_finish(ctx, std::move(st), outcomes, probs, out, t0);
  out[0].protocol = "protocol1-parallel";
  return out[0];
}

DisentangleRecord disentangle_blocks(PureState& s, const std::vector<int>& bulk, int edge, int K, Rng* rng,
                                     const std::vector<int>* branch) {
  require(rng || branch, "disentangle_blocks: need a generator or an explicit branch");
  if (branch) require(branch->size() == bulk.size(), "disentangle_blocks: one outcome per bulk qudit");
  const std::string edge_label = s.labels[edge];
  std::vector<std::string> bulk_labels;
  for (int w : bulk) {
    require(s.dims[w] == K, "disentangle_blocks: bulk wire is not a block qudit");
    bulk_labels.push_back(s.labels[w]);
  }
  const Mat W = dft_matrix(K);
  DisentangleRecord rec;
  int total = 0;
  for (std::size_t j = 0; j < bulk_labels.size(); ++j) {
    const int w = s.wire(bulk_labels[j]);
    int k = 0;
    if (branch) {
      k = (*branch)[j];
      require(k >= 0 && k < K, "disentangle_blocks: outcome out of range");
      rec.probability *= project_onto(s, {w}, W.row(k).adjoint());
    } else {
      apply_unitary(s, W, {w});
      const MeasurementRecord r = measure(s, {w}, *rng);
      k = r.outcome;
      rec.probability *= r.probability;
      remove_wires(s, {w});
    }
    rec.outcomes.push_back(k);
    total += k;
  }
  rec.phase_shift = total % K;
  if (rec.phase_shift != 0) {
    Mat fix = Mat::Zero(K, K);
    for (int a = 0; a < K; ++a) fix(a, a) = std::polar(1.0, 2.0 * kPi * a * rec.phase_shift / K);
    apply_unitary(s, fix, {s.wire(edge_label)});
  }
  return rec;
}

namespace {

struct P2Context {
  const Protocol2Config* cfg = nullptr;
  int K = 0, Dbar = 0, d = 0, N = 0;
  std::vector<PushingTable> tables;
  std::vector<FusionUnitary> fus;
  std::vector<Mat> dilations;
  bool shared = true;
  PureState bulk_target;
  std::string hash;
  Rng rng;
};

json p2_config_json(const Protocol2Config& cfg) {
  json j;
  json blocks = json::array();
  for (const auto& b : cfg.blocks.blocks) blocks.push_back(b.name);
  j["blocks"] = blocks;
  json bases = json::array();
  for (const auto& b : cfg.bases) bases.push_back(b.name);
  j["bases"] = bases;
  j["q"] = cfg.q;
  j["n"] = cfg.n;
  j["boundary"] = boundary_json(cfg.boundary);
  j["mode"] = mode_name(cfg.mode);
  j["seed"] = cfg.seed;
  j["branch"] = cfg.branch;
  return j;
}

PureState ghz_blocks(int K, int N) {
  PureState s;
  s.dims.assign(N + 2, K);
  s.labels.push_back("eL");
  for (int t = 0; t < N; ++t) s.labels.push_back("c" + std::to_string(t));
  s.labels.push_back("eR");
  s.amps = Vec::Zero(register_size(s.dims));
  std::int64_t all = 0, unit = 0;
  for (int t = 0; t < N + 2; ++t) unit = unit * K + 1;
  for (int a = 0; a < K; ++a, all += unit) s.amps(all) = 1.0 / std::sqrt(static_cast<double>(K));
  return s;
}

void p2_add_segment(P2Context& ctx, PureState& st, int seg) {
  const Protocol2Config& cfg = *ctx.cfg;
  PureState fresh;
  fresh.dims = {ctx.Dbar, ctx.Dbar};
  fresh.labels = {"bL" + std::to_string(seg), "bR" + std::to_string(seg)};
  fresh.amps = Vec::Zero(ctx.Dbar * ctx.Dbar);
  for (int j = 0; j < ctx.Dbar; ++j) fresh.amps(j * ctx.Dbar + j) = 1.0 / std::sqrt(static_cast<double>(ctx.Dbar));
  st = tensor_product(st, fresh);
  for (int t = 0; t < cfg.q; ++t) append_wire(st, ctx.d, "p" + std::to_string(seg * cfg.q + t));
  const std::string bond = "bL" + std::to_string(seg);
  for (int t = cfg.q - 1; t >= 0; --t) {
    const int site = seg * cfg.q + t;
    apply_controlled(st, st.wire("c" + std::to_string(site)), ctx.dilations,
                     {st.wire(bond), st.wire("p" + std::to_string(site))});
  }
}

double p2_fuse(P2Context& ctx, PureState& st, int seg, int* outcome) {
  const Protocol2Config& cfg = *ctx.cfg;
  const std::vector<int> bonds{st.wire("bR" + std::to_string(seg - 1)), st.wire("bL" + std::to_string(seg))};
  if (ctx.shared && cfg.mode != RunMode::Sample)
    return project_onto(st, bonds, ctx.fus[0].VB.row(*outcome).adjoint());
  std::vector<int> wires = bonds;
  const int p = ctx.fus[0].p;
  if (p > 1) {
    append_wire(st, p, "anc");
    wires.push_back(st.num_wires() - 1);
  }
  if (ctx.shared) {
    apply_unitary(st, ctx.fus[0].U, wires);
  } else {
    std::vector<Mat> us;
    for (const auto& f : ctx.fus) us.push_back(f.U);
    apply_controlled(st, st.wire("c" + std::to_string(seg * cfg.q)), us, wires);
  }
  double prob = 0.0;
  if (cfg.mode == RunMode::Sample) {
    const MeasurementRecord r = measure(st, wires, ctx.rng);
    *outcome = r.outcome;
    prob = r.probability;
  } else {
    prob = project(st, wires, *outcome);
  }
  remove_wires(st, wires);
  return prob;
}

void p2_finish(P2Context& ctx, PureState st, const std::vector<int>& outcomes, const std::vector<double>& probs,
               std::vector<ProtocolReport>& out, Clock::time_point t0) {
  const Protocol2Config& cfg = *ctx.cfg;
  ProtocolReport base;
  base.protocol = "protocol2";
  base.config_hash = ctx.hash;
  base.seed = cfg.seed;
  base.mode = mode_name(cfg.mode);
  base.outcomes = outcomes;
  base.outcome_probabilities = probs;
  std::vector<Corrections> cs;
  for (int a = 0; a < ctx.K; ++a) cs.push_back(resolve_defects(outcomes, ctx.tables[a], cfg.n));
  for (int s = 0; s < cfg.n; ++s) {
    std::vector<Mat> per;
    bool trivial = true;
    for (int a = 0; a < ctx.K; ++a) {
      per.push_back(cs[a].site[s]);
      trivial = trivial && is_identity(cs[a].site[s]);
    }
    if (trivial) continue;
    std::vector<int> wires;
    for (int t = 0; t < cfg.q; ++t) wires.push_back(st.wire("p" + std::to_string(s * cfg.q + t)));
    apply_controlled(st, st.wire("c" + std::to_string(s * cfg.q)), per, wires);
  }
  {
    std::vector<Mat> per;
    for (int a = 0; a < ctx.K; ++a) per.push_back(cs[a].edge);
    apply_controlled(st, st.wire("eL"), per, {st.wire("bL0")});
  }
  for (int a = 0; a < ctx.K; ++a) {
    base.corrected_defects.push_back(cs[a].defect);
    base.partners.push_back(cs[a].partner);
    base.corrections.push_back(cs[a].site);
    base.edge_corrections.push_back(cs[a].edge);
  }

  auto complete_branch = [&](PureState s2, const DisentangleRecord& dr) {
    ProtocolReport r = base;
    r.wh_outcomes = dr.outcomes;
    r.phase_shift = dr.phase_shift;
    r.outcome_probabilities.push_back(dr.probability);
    std::vector<int> order{s2.wire("eL"), s2.wire("bL0")};
    for (int t = 0; t < ctx.N; ++t) order.push_back(s2.wire("p" + std::to_string(t)));
    order.push_back(s2.wire("eR"));
    order.push_back(s2.wire("bR" + std::to_string(cfg.n - 1)));
    permute_wires(s2, order);
    PureState merged = s2;
    merged.dims = ctx.bulk_target.dims;
    merged.labels = ctx.bulk_target.labels;
    r.bulk_fidelity = fidelity(merged, ctx.bulk_target);
    if (cfg.boundary.kind == BoundarySpec::Kind::Entangled) {
      r.fidelity = r.bulk_fidelity;
      r.state = std::move(merged);
    } else {
      require(cfg.boundary.kind == BoundarySpec::Kind::Matrix, "protocol2 supports entangled or matrix boundaries");
      // mu_alpha^N folded into the boundary matrix.
      Mat mu = Mat::Zero(ctx.K * ctx.Dbar, ctx.K * ctx.Dbar);
      for (int a = 0; a < ctx.K; ++a)
        mu.block(a * ctx.Dbar, a * ctx.Dbar, ctx.Dbar, ctx.Dbar) =
            std::pow(cfg.blocks.mu[a], ctx.N) * Mat::Identity(ctx.Dbar, ctx.Dbar);
      const BoundarySpec folded = BoundarySpec::matrix(mu * cfg.boundary.X);
      const int last = s2.num_wires() - 1;
      r.boundary = project_boundary(s2, {0, 1}, {last - 1, last}, folded,
                                    cfg.mode == RunMode::Sample ? &ctx.rng : nullptr);
      const MpsTensor sum = direct_sum(cfg.blocks, false);
      r.fidelity = fidelity(s2, dense_state(sum, BoundarySpec::matrix(r.boundary.X), ctx.N));
      r.state = std::move(s2);
    }
    r.wall_time_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    out.push_back(std::move(r));
  };

  std::vector<int> bulk;
  for (int t = 0; t < ctx.N; ++t) bulk.push_back(st.wire("c" + std::to_string(t)));
  switch (cfg.mode) {
    case RunMode::Sample: {
      PureState s2 = st;
      const DisentangleRecord dr = disentangle_blocks(s2, bulk, s2.wire("eL"), ctx.K, &ctx.rng, nullptr);
      complete_branch(std::move(s2), dr);
      return;
    }
    case RunMode::Branch: {
      const std::vector<int> wh(cfg.branch.begin() + (cfg.n - 1), cfg.branch.end());
      PureState s2 = st;
      const DisentangleRecord dr = disentangle_blocks(s2, bulk, s2.wire("eL"), ctx.K, nullptr, &wh);
      complete_branch(std::move(s2), dr);
      return;
    }
    case RunMode::AllBranches: {
      std::vector<int> dims(ctx.N, ctx.K);
      const std::int64_t count = register_size(dims);
      for (std::int64_t idx = 0; idx < count; ++idx) {
        const std::vector<int> wh = to_digits(idx, dims);
        PureState s2 = st;
        std::vector<int> bw;
        for (int t = 0; t < ctx.N; ++t) bw.push_back(s2.wire("c" + std::to_string(t)));
        const DisentangleRecord dr = disentangle_blocks(s2, bw, s2.wire("eL"), ctx.K, nullptr, &wh);
        complete_branch(std::move(s2), dr);
      }
      return;
    }
  }
}

void p2_recurse(P2Context& ctx, PureState st, int seg, std::vector<int>& outcomes, std::vector<double>& probs,
                std::vector<ProtocolReport>& out, Clock::time_point t0) {
  const Protocol2Config& cfg = *ctx.cfg;
  if (seg == cfg.n) {
    p2_finish(ctx, std::move(st), outcomes, probs, out, t0);
    return;
  }
  p2_add_segment(ctx, st, seg);
  auto descend = [&](PureState child, int k, double p) {
    outcomes.push_back(k);
    probs.push_back(p);
    p2_recurse(ctx, std::move(child), seg + 1, outcomes, probs, out, t0);
    outcomes.pop_back();
    probs.pop_back();
  };
  switch (cfg.mode) {
    case RunMode::Sample: {
      int k = 0;
      const double p = p2_fuse(ctx, st, seg, &k);
      descend(std::move(st), k, p);
      return;
    }
    case RunMode::Branch: {
      int k = cfg.branch[seg - 1];
      const double p = p2_fuse(ctx, st, seg, &k);
      descend(std::move(st), k, p);
      return;
    }
    case RunMode::AllBranches: {
      for (int k = 0; k < ctx.fus[0].eta; ++k) {
        PureState child = st;
        int kk = k;
        const double p = p2_fuse(ctx, child, seg, &kk);
        descend(std::move(child), k, p);
      }
      return;
    }
  }
}

}  // namespace

std::vector<ProtocolReport> protocol2(const Protocol2Config& cfg) {
  const auto t0 = Clock::now();
  const BlockStructure& bs = cfg.blocks;
  require(bs.K() >= 1 && static_cast<int>(cfg.bases.size()) == bs.K(), "protocol2: one defect basis per block");
  require(cfg.q >= 1 && cfg.n >= 1, "protocol2: q and n must be positive");
  if (cfg.mode == RunMode::Branch)
    require(static_cast<int>(cfg.branch.size()) == cfg.n - 1 + (bs.K() > 1 ? cfg.n * cfg.q : 0),
            "protocol2 branch mode needs fusion outcomes followed by one Walsh-Hadamard outcome per site");
  if (bs.K() == 1) {
    ProtocolConfig c;
    c.tensor = bs.blocks[0];
    c.q = cfg.q;
    c.n = cfg.n;
    c.basis = cfg.bases[0];
    c.boundary = cfg.boundary;
    c.mode = cfg.mode;
    c.seed = cfg.seed;
    c.branch = cfg.branch;
    c.max_branches = cfg.max_branches;
    return protocol1(c);
  }
  P2Context ctx;
  ctx.cfg = &cfg;
  ctx.K = bs.K();
  ctx.Dbar = bs.Dbar();
  ctx.d = bs.d();
  ctx.N = cfg.n * cfg.q;
  ctx.rng = Rng(cfg.seed);
  ctx.hash = config_hash(p2_config_json(cfg));
  for (int a = 0; a < ctx.K; ++a) {
    const MpsTensor& A = bs.blocks[a];
    require(A.d == ctx.d, "protocol2: blocks must share the physical dimension");
    if (left_canonical_residual(A) > 1e-10) fail(ErrorKind::InvalidArgument, "protocol2: every block must be left-canonical");
    require(cfg.bases[a].dim == ctx.Dbar, "protocol2: defect basis must act on Dbar");
    require(cfg.bases[a].eta() == cfg.bases[0].eta(), "protocol2: per-block bases must have equal eta");
    ctx.tables.push_back(build_pushing_table(block_tensor(A, cfg.q), cfg.bases[a]));
    if (cfg.n > 1 && !ctx.tables.back().complete)
      fail(ErrorKind::InvariantViolation, "protocol2: pushing table of block " + std::to_string(a) + " is incomplete");
    ctx.fus.push_back(fusion_basis_unitary(cfg.bases[a]));
    ctx.dilations.push_back(stinespring_dilation(A));
    for (int g = 0; g < cfg.bases[a].eta(); ++g)
      ctx.shared = ctx.shared && frobenius_distance(cfg.bases[a].mats[g], cfg.bases[0].mats[g]) < 1e-12;
  }
  if (cfg.mode == RunMode::AllBranches) {
    const double count = std::pow(static_cast<double>(ctx.fus[0].eta), cfg.n - 1) *
                         std::pow(static_cast<double>(ctx.K), ctx.N);
    if (count > static_cast<double>(cfg.max_branches))
      fail(ErrorKind::BudgetExceeded, "protocol2: " + fmt_double(count) + " branches exceed the cap");
  }
  ctx.bulk_target = dense_state(direct_sum(bs, false), BoundarySpec::entangled(), ctx.N);
  PureState st = ghz_blocks(ctx.K, ctx.N);
  std::vector<ProtocolReport> out;
  std::vector<int> outcomes;
  std::vector<double> probs;
  p2_add_segment(ctx, st, 0);
  p2_recurse(ctx, std::move(st), 1, outcomes, probs, out, t0);
  return out;
}

namespace {

MpsTensor tensor_from_dilation(const Mat& U, int D, int d, const std::string& name) {
  std::vector<Mat> mats(d, Mat::Zero(D, D));
  for (int m = 0; m < d; ++m)
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j) mats[m](i, j) = U(i * d + m, j * d);
  return make_tensor(std::move(mats), name);
}

/// Bell-basis boundary measurement shared by the samplers.
BoundarySpec sample_boundary(PureState& st, int D, Rng& rng, int* outcome) {
  const BoundaryRecord b =
      project_boundary(st, {0}, {st.num_wires() - 1}, BoundarySpec::matrix(Mat::Identity(D, D)), &rng);
  *outcome = b.outcome;
  return BoundarySpec::matrix(b.X);
}

}  // namespace

SampleResult sample_random_mps(int d, int D, int n, Rng& rng) {
  require(d >= 1 && D >= 1 && n >= 1, "sample_random_mps: d, D and n must be positive");
  const FusionUnitary fu = fusion_basis_unitary(qudit_pauli_basis(D));
  const ProjectiveRep pauli = qudit_pauli_basis(D);
  SampleResult res;
  std::vector<Mat> us;
  for (int s = 0; s < n; ++s) {
    us.push_back(haar_unitary(d * D, rng));
    res.tensors.push_back(tensor_from_dilation(us.back(), D, d, "haar_site_" + std::to_string(s)));
  }
  PureState st = grow_segment({us[0]}, D, d, std::nullopt);
  for (int s = 1; s < n; ++s) {
    PureState fresh = grow_segment({us[s]}, D, d, std::nullopt);
    const int left_bond = st.num_wires() - 1;
    st = tensor_product(st, fresh);
    int k = 0;
    fuse(st, left_bond, left_bond + 1, fu, RunMode::Sample, true, &k, rng);
    res.outcomes.push_back(k);
    // The defect is absorbed into the left neighbour.
    for (auto& m : res.tensors[s - 1].mats) m = m * pauli.mats[k];
    res.tensors[s - 1].canonical = false;
  }
  st.labels = chain_labels(n, true);
  res.boundary = sample_boundary(st, D, rng, &res.boundary_outcome);
  res.fidelity = fidelity(st, dense_state_chain(res.tensors, res.boundary));
  res.state = std::move(st);
  return res;
}

SampleResult sample_spt_phase(int junk_dim, int n, Rng& rng) {
  require(junk_dim >= 1 && n >= 1, "sample_spt_phase: junk_dim and n must be positive");
  const MpsTensor aklt = aklt_tensor();
  const ProjectiveRep prot = qudit_pauli_basis(2);
  const ProjectiveRep junk = qudit_pauli_basis(junk_dim);
  const ProjectiveRep basis = tensor_product_rep(prot, junk, "pauli2xpauli" + std::to_string(junk_dim));
  const PushingTable table = build_pushing_table(block_tensor(aklt, 1), prot);
  require(table.complete, "sample_spt_phase: protected pushing table incomplete");
  const FusionUnitary fu = fusion_basis_unitary(basis);
  const int D = 2 * junk_dim, d = aklt.d;
  const Mat Ij = Mat::Identity(junk_dim, junk_dim);

  SampleResult res;
  std::vector<MpsTensor> sites;
  for (int s = 0; s < n; ++s) {
    std::vector<Mat> mats;
    for (int m = 0; m < d; ++m) {
      Mat w = haar_unitary(junk_dim, rng);
      // Fix the determinant so the junk factor lies in SU(junk_dim).
      const cd det = w.determinant();
      w *= std::polar(1.0, -std::arg(det) / junk_dim);
      mats.push_back(kron(aklt.mats[m], w));
    }
    sites.push_back(make_tensor(std::move(mats), "spt_site_" + std::to_string(s)));
  }
  PureState st = sequential_prepare(sites[0], 1);
  for (int s = 1; s < n; ++s) {
    PureState fresh = sequential_prepare(sites[s], 1);
    const int left_bond = st.num_wires() - 1;
    st = tensor_product(st, fresh);
    int k = 0;
    fuse(st, left_bond, left_bond + 1, fu, RunMode::Sample, true, &k, rng);
    res.outcomes.push_back(k);
  }
  st.labels = chain_labels(n, true);

  // Right-to-left: correct the protected factor, record the junk factor in the tensors.
  res.tensors.resize(n);
  Mat carried = Mat::Identity(2, 2);
  const int J2 = junk_dim * junk_dim;
  for (int s = n - 1; s >= 0; --s) {
    Mat right_prot = carried;
    Mat right_junk = Ij;
    if (s < n - 1) {
      const int k = res.outcomes[s];
      right_prot = prot.mats[k / J2] * carried;
      right_junk = junk.mats[k % J2];
    }
    cd lam;
    const int g = identify_element(prot, right_prot, &lam);
    require(g >= 0, "sample_spt_phase: protected defect left the Pauli group");
    const PushingEntry& e = table.entry(g);
    const Mat O = e.Ophys_lifted;
    const Mat Vh = prot.mats[e.partner];
    const Mat right = kron(right_prot, right_junk);
    std::vector<Mat> rec(d, Mat::Zero(D, D));
    for (int nn = 0; nn < d; ++nn)
      for (int m = 0; m < d; ++m) rec[nn] += std::conj(O(m, nn)) * sites[s].mats[m] * right;
    for (auto& r : rec) r = kron(Vh, Ij) * r;
    res.tensors[s] = make_tensor(std::move(rec), "spt_recorded_" + std::to_string(s));
    if (!is_identity(O, 1e-14)) apply_unitary(st, O.adjoint(), {1 + s});
    carried = Vh.adjoint();
  }
  apply_unitary(st, kron(carried, Ij).adjoint(), {0});

  // Protected factor of every recorded tensor must be A_AKLT.
  for (const auto& t : res.tensors)
    for (int m = 0; m < d; ++m) {
      const Mat& a = aklt.mats[m];
      Mat jm = Mat::Zero(junk_dim, junk_dim);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) jm += std::conj(a(i, j)) * t.mats[m].block(i * junk_dim, j * junk_dim, junk_dim, junk_dim);
      jm /= a.squaredNorm();
      res.factor_residual = std::max(res.factor_residual, (t.mats[m] - kron(a, jm)).cwiseAbs().maxCoeff());
    }

  res.boundary = sample_boundary(st, D, rng, &res.boundary_outcome);
  res.fidelity = fidelity(st, dense_state_chain(res.tensors, res.boundary));
  res.state = std::move(st);
  return res;
}

json report_to_json(const ProtocolReport& r) {
  json j;
  j["protocol"] = r.protocol;
  j["config_hash"] = r.config_hash;
  j["seed"] = r.seed;
  j["mode"] = r.mode;
  j["outcomes"] = r.outcomes;
  j["outcome_probabilities"] = r.outcome_probabilities;
  if (!r.wh_outcomes.empty()) {
    j["wh_outcomes"] = r.wh_outcomes;
    j["phase_shift"] = r.phase_shift;
  }
  j["corrected_defects"] = r.corrected_defects;
  j["partners"] = r.partners;
  json corr = json::array();
  for (const auto& block : r.corrections) {
    json b = json::array();
    for (const auto& m : block) b.push_back(mat_to_json(m));
    corr.push_back(b);
  }
  j["corrections"] = corr;
  json edge = json::array();
  for (const auto& m : r.edge_corrections) edge.push_back(mat_to_json(m));
  j["edge_corrections"] = edge;
  json b;
  b["kind"] = r.boundary.kind;
  b["outcome"] = r.boundary.outcome;
  b["success"] = r.boundary.success;
  b["probability"] = r.boundary.probability;
  if (r.boundary.X.size()) b["X"] = mat_to_json(r.boundary.X);
  if (r.boundary.L.size()) b["L"] = vec_to_json(r.boundary.L);
  j["boundary"] = b;
  j["bulk_fidelity"] = r.bulk_fidelity;
  j["fidelity"] = r.fidelity;
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

ProtocolReport report_from_json(const json& j) {
  ProtocolReport r;
  r.protocol = j.at("protocol").get<std::string>();
  r.config_hash = j.at("config_hash").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.mode = j.at("mode").get<std::string>();
  r.outcomes = j.at("outcomes").get<std::vector<int>>();
  r.outcome_probabilities = j.at("outcome_probabilities").get<std::vector<double>>();
  if (j.contains("wh_outcomes")) {
    r.wh_outcomes = j.at("wh_outcomes").get<std::vector<int>>();
    r.phase_shift = j.at("phase_shift").get<int>();
  }
  r.corrected_defects = j.at("corrected_defects").get<std::vector<std::vector<int>>>();
  r.partners = j.at("partners").get<std::vector<std::vector<int>>>();
  for (const auto& block : j.at("corrections")) {
    std::vector<Mat> b;
    for (const auto& m : block) b.push_back(mat_from_json(m));
    r.corrections.push_back(b);
  }
  for (const auto& m : j.at("edge_corrections")) r.edge_corrections.push_back(mat_from_json(m));
  const json& b = j.at("boundary");
  r.boundary.kind = b.at("kind").get<std::string>();
  r.boundary.outcome = b.at("outcome").get<int>();
  r.boundary.success = b.at("success").get<bool>();
  r.boundary.probability = b.at("probability").get<double>();
  if (b.contains("X")) r.boundary.X = mat_from_json(b.at("X"));
  if (b.contains("L")) r.boundary.L = vec_from_json(b.at("L"));
  r.bulk_fidelity = j.at("bulk_fidelity").get<double>();
  r.fidelity = j.at("fidelity").get<double>();
  r.wall_time_ms = j.at("wall_time_ms").get<double>();
  return r;
}

json summary_to_json(const BranchSummary& s) {
  json j;
  j["branch_count"] = s.branch_count;
  j["min_fidelity"] = s.min_fidelity;
  j["min_bulk_fidelity"] = s.min_bulk_fidelity;
  j["total_probability"] = s.total_probability;
  return j;
}

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::vector<int> split_ints(const std::string& s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(' ', pos);
    if (next == std::string::npos) next = s.size();
    if (next > pos) out.push_back(std::stoi(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

std::string join_doubles(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + fmt_double(v[i]);
  return s;
}

std::vector<double> split_doubles(const std::string& s) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(' ', pos);
    if (next == std::string::npos) next = s.size();
    if (next > pos) out.push_back(std::stod(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

}  // namespace

std::string reports_to_csv(const std::vector<ProtocolReport>& reports) {
  const std::vector<std::string> header{"protocol",      "config_hash",       "seed",           "mode",
                                        "outcomes",      "outcome_probabilities", "wh_outcomes", "phase_shift",
                                        "boundary_kind", "boundary_outcome",  "boundary_success",
                                        "boundary_probability", "bulk_fidelity", "fidelity", "wall_time_ms"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports)
    rows.push_back({r.protocol, r.config_hash, std::to_string(r.seed), r.mode, join_ints(r.outcomes),
                    join_doubles(r.outcome_probabilities), join_ints(r.wh_outcomes), std::to_string(r.phase_shift),
                    r.boundary.kind, std::to_string(r.boundary.outcome), r.boundary.success ? "1" : "0",
                    fmt_double(r.boundary.probability), fmt_double(r.bulk_fidelity), fmt_double(r.fidelity),
                    fmt_double(r.wall_time_ms)});
  return write_csv(header, rows);
}

std::vector<ProtocolReport> reports_from_csv(const std::string& text) {
  const auto rows = read_csv(text);
  require(!rows.empty(), "report csv: missing header");
  std::vector<ProtocolReport> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& c = rows[i];
    require(c.size() == 15, "report csv: wrong column count");
    ProtocolReport r;
    r.protocol = c[0];
    r.config_hash = c[1];
    r.seed = std::stoull(c[2]);
    r.mode = c[3];
    r.outcomes = split_ints(c[4]);
    r.outcome_probabilities = split_doubles(c[5]);
    r.wh_outcomes = split_ints(c[6]);
    r.phase_shift = std::stoi(c[7]);
    r.boundary.kind = c[8];
    r.boundary.outcome = std::stoi(c[9]);
    r.boundary.success = c[10] == "1";
    r.boundary.probability = std::stod(c[11]);
    r.bulk_fidelity = std::stod(c[12]);
    r.fidelity = std::stod(c[13]);
    r.wall_time_ms = std::stod(c[14]);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace mpsprep
