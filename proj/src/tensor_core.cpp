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

#include "mpsprep/tensor_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mpsprep {

MpsTensor make_tensor(std::vector<Mat> mats, std::string name, json params) {
  require(!mats.empty(), "tensor needs at least one matrix");
  MpsTensor t;
  t.d = static_cast<int>(mats.size());
  t.D = static_cast<int>(mats[0].rows());
  require(t.D >= 1, "bond dimension must be positive");
  for (const auto& m : mats) {
    require(m.rows() == t.D && m.cols() == t.D, "tensor matrices must all be D x D");
    require(m.allFinite(), "tensor entries must be finite");
  }
  t.mats = std::move(mats);
  t.name = std::move(name);
  t.params = std::move(params);
  t.canonical = left_canonical_residual(t) <= kTol;
  return t;
}

double left_canonical_residual(const MpsTensor& a) {
  Mat s = Mat::Zero(a.D, a.D);
  for (const auto& m : a.mats) s += m.adjoint() * m;
  return (s - Mat::Identity(a.D, a.D)).cwiseAbs().maxCoeff();
}

VirtualToPhysicalMap virtual_to_physical_map(const MpsTensor& a) {
  VirtualToPhysicalMap out;
  out.mat.resize(a.d, static_cast<Eigen::Index>(a.D) * a.D);
  for (int m = 0; m < a.d; ++m) out.mat.row(m) = vec_r(a.mats[m]).transpose();
  out.rank = numerical_rank(out.mat, 1e-12);
  return out;
}

Mat blocked_products(const MpsTensor& a, int q) {
  require(q >= 1, "blocking parameter q must be >= 1");
  const std::int64_t rows = static_cast<std::int64_t>(std::pow(a.d, q));
  check_budget(rows * a.D * a.D, "block_tensor");
  std::vector<Mat> prods{Mat::Identity(a.D, a.D)};
  for (int s = 0; s < q; ++s) {
    std::vector<Mat> next;
    next.reserve(prods.size() * a.d);
    for (const auto& p : prods)
      for (int m = 0; m < a.d; ++m) next.push_back(p * a.mats[m]);
    prods = std::move(next);
  }
  Mat out(rows, static_cast<Eigen::Index>(a.D) * a.D);
  for (std::int64_t r = 0; r < rows; ++r) out.row(r) = vec_r(prods[r]).transpose();
  return out;
}

Mat BlockedTensor::lift(const Mat& op) const {
  require(op.rows() == d_eff() && op.cols() == d_eff(), "lift: operator must act on d_eff");
  const int n = d_phys();
  Mat proj = basis.adjoint() * basis;
  return basis.adjoint() * op * basis + (Mat::Identity(n, n) - proj);
}

BlockedTensor block_tensor(const MpsTensor& a, int q) {
  BlockedTensor b;
  b.q = q;
  b.base = a;
  Mat prod = blocked_products(a, q);
  Eigen::JacobiSVD<Mat> svd(prod, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) fail(ErrorKind::InvalidArgument, "block_tensor: zero tensor");
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > 1e-12 * s(0)) ++r;
  if (r == prod.rows()) {
    b.map.mat = prod;
    b.basis = Mat::Identity(prod.rows(), prod.rows());
  } else {
    b.map.mat = s.head(r).cast<cd>().asDiagonal() * svd.matrixV().leftCols(r).adjoint();
    b.basis = svd.matrixU().leftCols(r).adjoint();
  }
  b.map.rank = r;
  b.reconstruction_error = (b.basis.adjoint() * b.map.mat - prod).cwiseAbs().maxCoeff();
  return b;
}

CanonicalForm left_canonicalize_with_gauge(const MpsTensor& a) {
  const int D = a.D;
  if (left_canonical_residual(a) <= 1e-13) {
    MpsTensor t = a;
    t.canonical = true;
    return {t, Mat::Identity(D, D), 1.0};
  }
  // Fixed point of X -> sum_m A^m+ X A^m, row-major vectorised.
  Mat M = Mat::Zero(D * D, D * D);
  for (const auto& m : a.mats) M += kron(m.adjoint(), m.transpose());
  Eigen::ComplexEigenSolver<Mat> es(M);
  if (es.info() != Eigen::Success) fail(ErrorKind::NumericalFailure, "left_canonicalize: eigensolver failed");
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()(i)) > std::abs(es.eigenvalues()(best))) best = i;
  const cd lambda = es.eigenvalues()(best);
  if (std::abs(lambda.imag()) > 1e-8 * std::abs(lambda) || lambda.real() <= 0.0)
    fail(ErrorKind::NumericalFailure, "left_canonicalize: dominant eigenvalue is not positive");
  Mat rho = unvec_r(es.eigenvectors().col(best), D, D);
  const cd tr = rho.trace();
  if (std::abs(tr) < 1e-14) fail(ErrorKind::NumericalFailure, "left_canonicalize: traceless fixed point");
  rho /= tr;
  rho = 0.5 * (rho + rho.adjoint()).eval();
  Eigen::LLT<Mat> llt(rho);
  if (llt.info() != Eigen::Success)
    fail(ErrorKind::NumericalFailure,
         "left_canonicalize: fixed point not positive definite (decompose non-normal input first)");
  // rho = L L^dagger, so the gauge is G = L^dagger.
  Mat g = llt.matrixL().adjoint();
  Mat ginv = g.inverse();
  const double scale = lambda.real();
  std::vector<Mat> mats;
  for (const auto& m : a.mats) mats.push_back(g * m * ginv / std::sqrt(scale));
  MpsTensor t = make_tensor(std::move(mats), a.name, a.params);
  if (!t.canonical)
    fail(ErrorKind::NumericalFailure, "left_canonicalize: residual above tolerance after gauge");
  return {t, g, scale};
}

MpsTensor left_canonicalize(const MpsTensor& a) { return left_canonicalize_with_gauge(a).tensor; }

std::vector<cd> transfer_spectrum(const MpsTensor& a) {
  Mat E = Mat::Zero(a.D * a.D, a.D * a.D);
  for (const auto& m : a.mats) E += kron(m, m.conjugate());
  Eigen::ComplexEigenSolver<Mat> es(E, false);
  std::vector<cd> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::stable_sort(ev.begin(), ev.end(), [](cd x, cd y) {
    const double ax = std::abs(x), ay = std::abs(y);
    if (std::abs(ax - ay) > 1e-12 * std::max(1.0, std::max(ax, ay))) return ax > ay;
    return std::arg(x) < std::arg(y);
  });
  return ev;
}

CorrelationLength correlation_length(const MpsTensor& a, double tol) {
  const auto ev = transfer_spectrum(a);
  if (ev.size() < 2) return {false, 0.0};
  const double l1 = std::abs(ev[0]);
  const double l2 = std::abs(ev[1]);
  if (l2 <= tol) return {false, 0.0};
  const double ratio = l2 / l1;
  if (ratio < 1e-4) {
    // A nilpotent remainder is resolved by the eigensolver only to ~sqrt(eps); E^(D^2) is then rank one.
    Mat E = Mat::Zero(a.D * a.D, a.D * a.D);
    for (const auto& m : a.mats) E += kron(m, m.conjugate());
    Mat p = Mat::Identity(E.rows(), E.cols());
    for (int k = 0; k < a.D * a.D; ++k) p = (p * E / l1).eval();
    const auto sv = Eigen::JacobiSVD<Mat>(p).singularValues();
    if (sv.size() < 2 || sv(1) <= tol * sv(0)) return {false, 0.0};
  }
  if (ratio >= 1.0 - tol) return {true, 0.0};
  return {false, -1.0 / std::log(ratio)};
}

bool is_normal(const MpsTensor& a, double tol) {
  const auto ev = transfer_spectrum(a);
  if (ev.size() < 2) return true;
  return std::abs(ev[1]) < std::abs(ev[0]) * (1.0 - tol);
}

BoundarySpec BoundarySpec::entangled() { return BoundarySpec{}; }

BoundarySpec BoundarySpec::matrix(const Mat& x) {
  require(x.rows() == x.cols() && x.norm() > 0.0, "boundary matrix must be square and nonzero");
  BoundarySpec b;
  b.kind = Kind::Matrix;
  b.X = x / x.norm();
  return b;
}

BoundarySpec BoundarySpec::open_edges(const Vec& l, const Vec& r) {
  require(l.size() == r.size() && l.norm() > 0.0 && r.norm() > 0.0, "open edges need nonzero vectors of equal size");
  BoundarySpec b;
  b.kind = Kind::OpenEdges;
  b.L = l / l.norm();
  b.R = r / r.norm();
  return b;
}

PureState dense_state(const MpsTensor& a, const BoundarySpec& boundary, int n_sites) {
  require(n_sites >= 1, "dense_state: need at least one site");
  return dense_state_chain(std::vector<MpsTensor>(static_cast<std::size_t>(n_sites), a), boundary);
}

PureState dense_state_chain(const std::vector<MpsTensor>& chain, const BoundarySpec& boundary) {
  require(!chain.empty(), "dense_state: empty chain");
  const int D = chain[0].D;
  std::int64_t phys = 1;
  std::vector<int> pdims;
  for (const auto& t : chain) {
    require(t.D == D, "dense_state: bond dimensions must agree along the chain");
    phys *= t.d;
    pdims.push_back(t.d);
    check_budget(phys * D * D, "dense_state");
  }
  // Row r of `prods` holds the row-major flattening of A^{m_1}..A^{m_k}.
  Mat prods = vec_r(Mat::Identity(D, D)).transpose();
  for (const auto& t : chain) {
    Mat next(prods.rows() * t.d, D * D);
    for (Eigen::Index r = 0; r < prods.rows(); ++r) {
      const Mat p = unvec_r(prods.row(r).transpose(), D, D);
      for (int m = 0; m < t.d; ++m) next.row(r * t.d + m) = vec_r(p * t.mats[m]).transpose();
    }
    prods = std::move(next);
  }
  PureState s;
  switch (boundary.kind) {
    case BoundarySpec::Kind::Entangled: {
      s.dims.push_back(D);
      s.labels.push_back("bL");
      for (std::size_t k = 0; k < pdims.size(); ++k) {
        s.dims.push_back(pdims[k]);
        s.labels.push_back("p" + std::to_string(k));
      }
      s.dims.push_back(D);
      s.labels.push_back("bR");
      s.amps.resize(phys * D * D);
      for (int i = 0; i < D; ++i)
        for (std::int64_t m = 0; m < phys; ++m)
          for (int j = 0; j < D; ++j) s.amps((i * phys + m) * D + j) = prods(m, i * D + j);
      break;
    }
    case BoundarySpec::Kind::Matrix:
    case BoundarySpec::Kind::OpenEdges: {
      Mat x = boundary.kind == BoundarySpec::Kind::Matrix ? boundary.X
                                                          : Mat(boundary.R * boundary.L.adjoint());
      require(x.rows() == D && x.cols() == D, "dense_state: boundary size mismatch");
      for (std::size_t k = 0; k < pdims.size(); ++k) {
        s.dims.push_back(pdims[k]);
        s.labels.push_back("p" + std::to_string(k));
      }
      // tr(P X) = sum_ij P_ij X_ji.
      Vec xt = vec_r(x.transpose());
      s.amps = prods * xt;
      break;
    }
  }
  const double n = s.amps.norm();
  if (n < 1e-300) fail(ErrorKind::NumericalFailure, "dense_state: boundary annihilates the state");
  s.amps /= n;
  return s;
}

int BlockStructure::Dbar() const {
  require(!blocks.empty(), "block structure is empty");
  const int D0 = blocks[0].D;
  for (const auto& b : blocks)
    if (b.D != D0) fail(ErrorKind::InvalidArgument, "blocks differ in dimension; inflate first");
  return D0;
}

BlockStructure make_block_structure(std::vector<MpsTensor> blocks, std::vector<cd> mu) {
  require(!blocks.empty(), "block structure needs at least one block");
  const int d = blocks[0].d;
  for (const auto& b : blocks) require(b.d == d, "blocks must share the physical dimension");
  if (mu.empty()) mu.assign(blocks.size(), cd(1.0));
  require(mu.size() == blocks.size(), "one amplitude per block");
  BlockStructure bs;
  bs.blocks = std::move(blocks);
  bs.mu = std::move(mu);
  bs.inflation.assign(bs.blocks.size(), 1);
  return bs;
}

BlockStructure inflate_blocks(const BlockStructure& bs) {
  require(!bs.blocks.empty(), "inflate_blocks: no blocks");
  int l = 1;
  for (const auto& b : bs.blocks) l = std::lcm(l, b.D);
  BlockStructure out = bs;
  for (std::size_t a = 0; a < bs.blocks.size(); ++a) {
    const int r = l / bs.blocks[a].D;
    out.inflation[a] = bs.inflation[a] * r;
    if (r == 1) continue;
    std::vector<Mat> mats;
    for (const auto& m : bs.blocks[a].mats) mats.push_back(kron(m, Mat::Identity(r, r)));
    out.blocks[a] = make_tensor(std::move(mats), bs.blocks[a].name, bs.blocks[a].params);
  }
  return out;
}

MpsTensor direct_sum(const BlockStructure& bs, bool with_mu) {
  int total = 0;
  for (const auto& b : bs.blocks) total += b.D;
  std::vector<Mat> mats(static_cast<std::size_t>(bs.d()), Mat::Zero(total, total));
  int off = 0;
  for (std::size_t a = 0; a < bs.blocks.size(); ++a) {
    const auto& b = bs.blocks[a];
    for (int m = 0; m < bs.d(); ++m)
      mats[m].block(off, off, b.D, b.D) = (with_mu ? bs.mu[a] : cd(1.0)) * b.mats[m];
    off += b.D;
  }
  return make_tensor(std::move(mats), "direct_sum");
}

json tensor_to_json(const MpsTensor& a) {
  json j;
  j["d"] = a.d;
  j["D"] = a.D;
  json mats = json::array();
  for (const auto& m : a.mats) mats.push_back(mat_to_json(m));
  j["mats"] = mats;
  j["name"] = a.name;
  j["params"] = a.params;
  return j;
}

MpsTensor tensor_from_json(const json& j) {
  require(j.contains("mats") && j["mats"].is_array(), "tensor file: missing mats");
  std::vector<Mat> mats;
  for (const auto& m : j["mats"]) mats.push_back(mat_from_json(m));
  MpsTensor t = make_tensor(std::move(mats), j.value("name", std::string()),
                            j.contains("params") ? j["params"] : json::object());
  if (j.contains("d")) require(j["d"].get<int>() == t.d, "tensor file: d disagrees with mats");
  if (j.contains("D")) require(j["D"].get<int>() == t.D, "tensor file: D disagrees with mats");
  return t;
}

json block_structure_to_json(const BlockStructure& bs) {
  json j;
  j["K"] = bs.K();
  json blocks = json::array();
  for (std::size_t a = 0; a < bs.blocks.size(); ++a) {
    json b = tensor_to_json(bs.blocks[a]);
    b["mu"] = complex_to_json(bs.mu[a]);
    b["inflation"] = bs.inflation[a];
    blocks.push_back(b);
  }
  j["blocks"] = blocks;
  return j;
}

}  // namespace mpsprep
