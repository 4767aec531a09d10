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

#include "mpsprep/circuit_sim.hpp"

#include <cmath>
#include <numeric>

namespace mpsprep {

namespace {

constexpr double kMinProbability = 1e-14;

/// Index sets splitting the register into `wires` (rows) and the rest (columns).
struct Split {
  std::vector<std::int64_t> offsets;  ///< one per joint outcome on `wires`.
  std::vector<std::int64_t> bases;    ///< one per configuration of the other wires, in order.
  std::vector<int> rest;
};

Split split_wires(const PureState& s, const std::vector<int>& wires) {
  const int n = s.num_wires();
  std::vector<bool> in(n, false);
  for (int w : wires) {
    require(w >= 0 && w < n, "wire index out of range");
    require(!in[w], "repeated wire");
    in[w] = true;
  }
  std::vector<std::int64_t> stride(n, 1);
  for (int w = n - 2; w >= 0; --w) stride[w] = stride[w + 1] * s.dims[w + 1];
  Split sp;
  for (int w = 0; w < n; ++w)
    if (!in[w]) sp.rest.push_back(w);
  auto enumerate = [&](const std::vector<int>& ws) {
    std::int64_t count = 1;
    for (int w : ws) count *= s.dims[w];
    std::vector<std::int64_t> out(count);
    std::vector<int> digit(ws.size(), 0);
    std::int64_t idx = 0;
    for (std::int64_t c = 0; c < count; ++c) {
      out[c] = idx;
      for (int k = static_cast<int>(ws.size()) - 1; k >= 0; --k) {
        const int w = ws[k];
        if (++digit[k] < s.dims[w]) {
          idx += stride[w];
          break;
        }
        idx -= stride[w] * (s.dims[w] - 1);
        digit[k] = 0;
      }
    }
    return out;
  };
  sp.offsets = enumerate(wires);
  sp.bases = enumerate(sp.rest);
  return sp;
}

Mat gather(const PureState& s, const Split& sp) {
  Mat g(sp.offsets.size(), sp.bases.size());
  for (std::size_t b = 0; b < sp.bases.size(); ++b)
    for (std::size_t t = 0; t < sp.offsets.size(); ++t) g(t, b) = s.amps(sp.bases[b] + sp.offsets[t]);
  return g;
}

void scatter(PureState& s, const Split& sp, const Mat& g) {
  for (std::size_t b = 0; b < sp.bases.size(); ++b)
    for (std::size_t t = 0; t < sp.offsets.size(); ++t) s.amps(sp.bases[b] + sp.offsets[t]) = g(t, b);
}

void drop_wires(PureState& s, const std::vector<int>& rest, Vec amps) {
  std::vector<int> dims;
  std::vector<std::string> labels;
  for (int w : rest) {
    dims.push_back(s.dims[w]);
    labels.push_back(s.labels[w]);
  }
  s.dims = std::move(dims);
  s.labels = std::move(labels);
  s.amps = std::move(amps);
}

}  // namespace

void apply_unitary(PureState& s, const Mat& U, const std::vector<int>& wires, bool check_unitary) {
  std::int64_t k = 1;
  for (int w : wires) {
    require(w >= 0 && w < s.num_wires(), "wire index out of range");
    k *= s.dims[w];
  }
  require(U.rows() == k && U.cols() == k, "apply_unitary: operator does not match the wires");
  if (check_unitary && !is_unitary(U, 1e-9)) fail(ErrorKind::InvalidArgument, "apply_unitary: operator is not unitary");
  const Split sp = split_wires(s, wires);
  Mat g = gather(s, sp);
  g = (U * g).eval();
  scatter(s, sp, g);
}

Mat controlled_unitary(const std::vector<Mat>& per_control) {
  require(!per_control.empty(), "controlled_unitary: no blocks");
  const auto n = per_control[0].rows();
  const auto K = static_cast<Eigen::Index>(per_control.size());
  Mat out = Mat::Zero(K * n, K * n);
  for (Eigen::Index c = 0; c < K; ++c) {
    require(per_control[c].rows() == n && per_control[c].cols() == n, "controlled_unitary: block size mismatch");
    out.block(c * n, c * n, n, n) = per_control[c];
  }
  return out;
}

void apply_controlled(PureState& s, int control, const std::vector<Mat>& per_control,
                      const std::vector<int>& targets) {
  require(static_cast<int>(per_control.size()) == s.dims[control], "one block per control value");
  std::vector<int> wires{control};
  wires.insert(wires.end(), targets.begin(), targets.end());
  apply_unitary(s, controlled_unitary(per_control), wires);
}

std::vector<double> outcome_probabilities(const PureState& s, const std::vector<int>& wires) {
  const Split sp = split_wires(s, wires);
  const Mat g = gather(s, sp);
  std::vector<double> p(sp.offsets.size());
  const double total = s.amps.squaredNorm();
  for (std::size_t t = 0; t < p.size(); ++t) p[t] = g.row(t).squaredNorm() / total;
  return p;
}

MeasurementRecord measure(PureState& s, const std::vector<int>& wires, Rng& rng) {
  const auto p = outcome_probabilities(s, wires);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  MeasurementRecord r;
  r.wires = wires;
  r.draw = uni(rng);
  double acc = 0.0;
  int pick = -1;
  for (std::size_t t = 0; t < p.size(); ++t) {
    if (p[t] <= 0.0) continue;
    acc += p[t];
    pick = static_cast<int>(t);
    if (r.draw < acc) break;
  }
  require(pick >= 0, "measure: state has zero norm");
  r.outcome = pick;
  std::vector<int> dims;
  for (int w : wires) dims.push_back(s.dims[w]);
  r.digits = to_digits(pick, dims);
  r.probability = project(s, wires, pick);
  return r;
}

double project(PureState& s, const std::vector<int>& wires, int outcome) {
  const Split sp = split_wires(s, wires);
  require(outcome >= 0 && outcome < static_cast<int>(sp.offsets.size()), "project: outcome out of range");
  const double total = s.amps.squaredNorm();
  Mat g = gather(s, sp);
  const double p = g.row(outcome).squaredNorm() / total;
  if (p <= kMinProbability) fail(ErrorKind::InvariantViolation, "project: zero-probability outcome");
  for (Eigen::Index t = 0; t < g.rows(); ++t)
    if (t != outcome) g.row(t).setZero();
  s.amps.setZero();
  scatter(s, sp, g / std::sqrt(p * total));
  return p;
}

double project_onto(PureState& s, const std::vector<int>& wires, const Vec& v) {
  const Split sp = split_wires(s, wires);
  require(v.size() == static_cast<Eigen::Index>(sp.offsets.size()), "project_onto: vector size mismatch");
  const double total = s.amps.squaredNorm();
  Vec out = (v.adjoint() * gather(s, sp)).transpose();
  const double p = out.squaredNorm() / total;
  if (p <= kMinProbability) fail(ErrorKind::InvariantViolation, "project_onto: zero-probability outcome");
  out /= out.norm();
  drop_wires(s, sp.rest, std::move(out));
  return p;
}

void remove_wires(PureState& s, const std::vector<int>& wires) {
  const Split sp = split_wires(s, wires);
  const Mat g = gather(s, sp);
  Eigen::Index keep = -1;
  for (Eigen::Index t = 0; t < g.rows(); ++t)
    if (g.row(t).squaredNorm() > 1e-24) {
      require(keep < 0, "remove_wires: wires are not in a definite basis state");
      keep = t;
    }
  require(keep >= 0, "remove_wires: zero state");
  drop_wires(s, sp.rest, g.row(keep).transpose());
}

void permute_wires(PureState& s, const std::vector<int>& order) {
  const int n = s.num_wires();
  require(static_cast<int>(order.size()) == n, "permute_wires: order must list every wire");
  std::vector<bool> seen(n, false);
  for (int w : order) {
    require(w >= 0 && w < n && !seen[w], "permute_wires: not a permutation");
    seen[w] = true;
  }
  std::vector<std::int64_t> old_stride(n, 1);
  for (int w = n - 2; w >= 0; --w) old_stride[w] = old_stride[w + 1] * s.dims[w + 1];
  std::vector<int> dims(n);
  std::vector<std::string> labels(n);
  for (int k = 0; k < n; ++k) {
    dims[k] = s.dims[order[k]];
    labels[k] = s.labels[order[k]];
  }
  Vec out(s.amps.size());
  std::vector<int> digit(n, 0);
  std::int64_t old_idx = 0;
  for (std::int64_t idx = 0; idx < out.size(); ++idx) {
    out(idx) = s.amps(old_idx);
    for (int k = n - 1; k >= 0; --k) {
      const std::int64_t st = old_stride[order[k]];
      if (++digit[k] < dims[k]) {
        old_idx += st;
        break;
      }
      old_idx -= st * (dims[k] - 1);
      digit[k] = 0;
    }
  }
  s.dims = std::move(dims);
  s.labels = std::move(labels);
  s.amps = std::move(out);
}

void append_wire(PureState& s, int dim, const std::string& label, int digit) {
  PureState w = basis_state({dim}, {label}, {digit});
  s = tensor_product(s, w);
}

Mat stinespring_dilation(const MpsTensor& a) {
  const int d = a.d, D = a.D;
  if (left_canonical_residual(a) > 1e-10)
    fail(ErrorKind::InvalidArgument, "stinespring_dilation: tensor is not left-canonical");
  Mat cols(D * d, D);
  std::vector<int> pos(D);
  for (int j = 0; j < D; ++j) {
    pos[j] = j * d;
    for (int i = 0; i < D; ++i)
      for (int m = 0; m < d; ++m) cols(i * d + m, j) = a.mats[m](i, j);
  }
  return complete_unitary(cols, pos, D * d, 1e-9);
}

Vec bell_vector(const Mat& b) { return vec_r(b.conjugate()) / std::sqrt(static_cast<double>(b.rows())); }

FusionUnitary fusion_basis_unitary(const DefectBasis& basis) {
  const PovmReport povm = verify_povm_completeness(basis);
  if (!povm.pass)
    fail(ErrorKind::InvariantViolation, "fusion_basis_unitary: defect basis is not POVM-complete (residual " +
                                            fmt_double(povm.residual) + ")");
  FusionUnitary f;
  f.D = basis.dim;
  f.eta = basis.eta();
  const int D2 = f.D * f.D;
  f.p = std::lcm(f.eta, D2) / D2;
  f.VB = Mat(f.eta, D2);
  const double scale = f.D / std::sqrt(static_cast<double>(f.eta));
  for (int k = 0; k < f.eta; ++k) f.VB.row(k) = scale * bell_vector(basis.mats[k]).adjoint();
  const int dim = D2 * f.p;
  Mat cols = Mat::Zero(dim, D2);
  std::vector<int> pos(D2);
  for (int x = 0; x < D2; ++x) {
    pos[x] = x * f.p;
    cols.block(0, x, f.eta, 1) = f.VB.col(x);
  }
  // Columns with the ancilla in |0> carry V_B; the rest is an orthonormal completion.
  f.U = complete_unitary(cols, pos, dim, 1e-9);
  return f;
}

double entanglement_entropy(const PureState& s, int cut) {
  require(cut >= 0 && cut <= s.num_wires(), "entanglement_entropy: bad cut");
  std::int64_t left = 1;
  for (int w = 0; w < cut; ++w) left *= s.dims[w];
  const std::int64_t right = s.size() / left;
  Eigen::Map<const Mat> m(s.amps.data(), right, left);
  Eigen::JacobiSVD<Mat> svd(m / s.amps.norm());
  double S = 0.0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    const double p = svd.singularValues()(i) * svd.singularValues()(i);
    if (p > 1e-300) S -= p * std::log(p);
  }
  return S;
}

json state_to_json(const PureState& s) {
  json j;
  j["dims"] = s.dims;
  j["labels"] = s.labels;
  j["amps"] = vec_to_json(s.amps);
  return j;
}

PureState state_from_json(const json& j) {
  PureState s;
  s.dims = j.at("dims").get<std::vector<int>>();
  s.labels = j.at("labels").get<std::vector<std::string>>();
  s.amps = vec_from_json(j.at("amps"));
  require(s.amps.size() == register_size(s.dims), "state file: amplitude count does not match dims");
  return s;
}

json record_to_json(const MeasurementRecord& r) {
  json j;
  j["wires"] = r.wires;
  j["digits"] = r.digits;
  j["outcome"] = r.outcome;
  j["probability"] = r.probability;
  j["draw"] = r.draw;
  return j;
}

}  // namespace mpsprep
