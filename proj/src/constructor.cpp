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

#include "mpsprep/constructor.hpp"

#include <cmath>

namespace mpsprep {

namespace {

/// Irrep of one factor as generator images.
struct FactorIrrep {
  std::string label;
  int dim = 1;
  std::vector<Mat> gens;
};

Mat scalar(cd z) {
  Mat m(1, 1);
  m(0, 0) = z;
  return m;
}

std::vector<FactorIrrep> cyclic_irreps(int n) {
  std::vector<FactorIrrep> out;
  for (int k = 0; k < n; ++k) {
    FactorIrrep f;
    f.label = std::to_string(k);
    if (n > 1) f.gens.push_back(scalar(std::polar(1.0, 2.0 * kPi * k / n)));
    out.push_back(f);
  }
  return out;
}

std::vector<FactorIrrep> a4_irreps() {
  std::vector<FactorIrrep> out;
  const char* names[] = {"1", "1'", "1''"};
  for (int k = 0; k < 3; ++k)
    out.push_back({names[k], 1, {scalar(1.0), scalar(std::polar(1.0, 2.0 * kPi * k / 3.0))}});
  const ProjectiveRep t = a4_triplet_basis();
  out.push_back({"3", 3, {t.mats[t.group.gens[0]], t.mats[t.group.gens[1]]}});
  return out;
}

std::vector<FactorIrrep> dihedral_irreps(int n) {
  std::vector<FactorIrrep> out;
  out.push_back({"A1", 1, {scalar(1.0), scalar(1.0)}});
  out.push_back({"A2", 1, {scalar(1.0), scalar(-1.0)}});
  if (n % 2 == 0) {
    out.push_back({"B1", 1, {scalar(-1.0), scalar(1.0)}});
    out.push_back({"B2", 1, {scalar(-1.0), scalar(-1.0)}});
  }
  for (int k = 1; 2 * k < n; ++k) {
    Mat r = Mat::Zero(2, 2), s = Mat::Zero(2, 2);
    r(0, 0) = std::polar(1.0, 2.0 * kPi * k / n);
    r(1, 1) = std::conj(r(0, 0));
    s(0, 1) = s(1, 0) = 1.0;
    out.push_back({"E" + std::to_string(k), 2, {r, s}});
  }
  return out;
}

std::vector<FactorIrrep> factor_irreps(const std::string& p) {
  require(!p.empty(), "empty group factor");
  if (p == "A4") return a4_irreps();
  const int n = std::stoi(p.substr(1));
  if (p[0] == 'Z') return cyclic_irreps(n);
  if (p[0] == 'D') return dihedral_irreps(n);
  fail(ErrorKind::InvalidArgument, "no character table for group factor " + p);
}

std::vector<std::string> split_spec(const std::string& spec) {
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
  return parts;
}

double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

std::vector<Irrep> group_irreps(const FiniteGroup& g) {
  if (g.spec.empty()) fail(ErrorKind::InvalidArgument, "group has no spec; no character table available");
  FiniteGroup ref;
  try {
    ref = build_group(g.spec);
  } catch (const MpsError&) {
    fail(ErrorKind::InvalidArgument, "no character table for group " + g.spec);
  }
  if (ref.table != g.table || ref.gens != g.gens || g.parent.empty())
    fail(ErrorKind::InvalidArgument, "group " + g.spec + " does not match its built-in presentation");

  // Product over factors; generator lists concatenate in factor order.
  std::vector<FactorIrrep> acc{{"", 1, {}}};
  bool first = true;
  for (const auto& part : split_spec(g.spec)) {
    const auto fs = factor_irreps(part);
    std::vector<FactorIrrep> next;
    for (const auto& a : acc)
      for (const auto& f : fs) {
        FactorIrrep c;
        c.label = first ? f.label : a.label + "." + f.label;
        c.dim = a.dim * f.dim;
        const Mat Ia = Mat::Identity(a.dim, a.dim), If = Mat::Identity(f.dim, f.dim);
        for (const auto& m : a.gens) c.gens.push_back(kron(m, If));
        for (const auto& m : f.gens) c.gens.push_back(kron(Ia, m));
        next.push_back(std::move(c));
      }
    acc = std::move(next);
    first = false;
  }
  std::vector<Irrep> out;
  int sum_sq = 0;
  for (const auto& f : acc) {
    Irrep ir;
    ir.label = f.label;
    ir.dim = f.dim;
    if (g.gens.empty()) {
      ir.mats.assign(g.order, Mat::Identity(1, 1));
    } else {
      const ProjectiveRep r = rep_from_generators(g, f.gens, f.label);
      for (const auto& row : r.cocycle)
        for (cd w : row)
          if (std::abs(w - 1.0) > 1e-9)
            fail(ErrorKind::InvariantViolation, "irrep " + f.label + " of " + g.spec + " is not linear");
      ir.mats = r.mats;
    }
    for (const auto& m : ir.mats) ir.character.push_back(m.trace());
    sum_sq += ir.dim * ir.dim;
    out.push_back(std::move(ir));
  }
  if (sum_sq != g.order) fail(ErrorKind::InvariantViolation, "irreps of " + g.spec + " are incomplete");
  return out;
}

ProjectiveRep tensor_square_rep(const ProjectiveRep& v) {
  ProjectiveRep out;
  out.group = v.group;
  out.dim = v.dim * v.dim;
  out.name = v.name + "^2";
  for (const auto& m : v.mats) out.mats.push_back(kron(m, m.conjugate()));
  out.cocycle.assign(v.group.order, std::vector<cd>(v.group.order));
  for (int a = 0; a < v.group.order; ++a)
    for (int b = 0; b < v.group.order; ++b) {
      const cd w = (out.mats[v.group.mul(a, b)].adjoint() * out.mats[a] * out.mats[b]).trace() /
                   static_cast<double>(out.dim);
      out.cocycle[a][b] = w;
      if (std::abs(w - 1.0) > 1e-9) fail(ErrorKind::InvariantViolation, "tensor square is not a linear rep");
    }
  return out;
}

IrrepDecomposition irrep_decomposition(const ProjectiveRep& vbar) {
  for (const auto& row : vbar.cocycle)
    for (cd w : row)
      if (std::abs(w - 1.0) > 1e-9) fail(ErrorKind::InvalidArgument, "irrep_decomposition needs a linear rep");
  const FiniteGroup& G = vbar.group;
  const int n = vbar.dim;
  IrrepDecomposition dec;
  dec.source = vbar;
  dec.irreps = group_irreps(G);
  int col = 0;
  for (const auto& ir : dec.irreps) {
    cd s = 0.0;
    for (int g = 0; g < G.order; ++g) s += std::conj(ir.character[g]) * vbar.mats[g].trace();
    s /= static_cast<double>(G.order);
    const int m = static_cast<int>(std::lround(s.real()));
    dec.multiplicity_residual = std::max(dec.multiplicity_residual, std::abs(s - static_cast<double>(m)));
    dec.multiplicity.push_back(m);
    dec.offset.push_back(col);
    col += m * ir.dim;
    dec.parameter_count += m * m;
  }
  if (dec.multiplicity_residual > 1e-8)
    fail(ErrorKind::InvariantViolation, "non-integer irrep multiplicities (residual " +
                                            fmt_double(dec.multiplicity_residual) + ")");
  require(col == n, "irrep multiplicities do not add up to the rep dimension");

  for (std::size_t j = 0; j < dec.irreps.size(); ++j) {
    const Irrep& ir = dec.irreps[j];
    const int nj = dec.multiplicity[j];
    Mat wj(n, nj * ir.dim);
    if (nj > 0) {
      auto proj = [&](int mu) {
        Mat p = Mat::Zero(n, n);
        for (int g = 0; g < G.order; ++g) p += std::conj(ir.mats[g](mu, 0)) * vbar.mats[g];
        return Mat(p * (static_cast<double>(ir.dim) / G.order));
      };
      const Mat p00 = proj(0);
      std::vector<Vec> heads;
      for (int i = 0; i < n && static_cast<int>(heads.size()) < nj; ++i) {
        Vec v = p00.col(i);
        for (int pass = 0; pass < 2; ++pass)
          for (const auto& h : heads) v -= h.dot(v) * h;
        if (v.norm() < 1e-8) continue;
        heads.push_back(v.normalized());
      }
      require(static_cast<int>(heads.size()) == nj, "isotypic projector has the wrong rank");
      for (int mu = 0; mu < ir.dim; ++mu) {
        const Mat p = mu == 0 ? p00 : proj(mu);
        for (int c = 0; c < nj; ++c) wj.col(c * ir.dim + mu) = p * heads[c];
      }
    }
    dec.canonical.push_back(wj);
  }
  for (int g = 0; g < G.order; ++g) {
    Mat u = Mat::Zero(n, n);
    for (std::size_t j = 0; j < dec.irreps.size(); ++j) {
      const int dj = dec.irreps[j].dim;
      for (int c = 0; c < dec.multiplicity[j]; ++c)
        u.block(dec.offset[j] + c * dj, dec.offset[j] + c * dj, dj, dj) = dec.irreps[j].mats[g];
    }
    dec.model.push_back(u);
  }
  const Mat w = sample_intertwiner(dec, std::vector<Mat>{});
  dec.intertwining_residual = intertwining_residual(dec, w);

  // Dimension of the full solution space of V W = W U (column-major vec).
  const Mat I = Mat::Identity(n, n);
  Mat gram = Mat::Zero(n * n, n * n);
  for (int g = 0; g < G.order; ++g) {
    const Mat m = kron(I, vbar.mats[g]) - kron(dec.model[g].transpose(), I);
    gram += m.adjoint() * m;
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(gram, Eigen::EigenvaluesOnly);
  const double top = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()(i)) < 1e-9 * top) ++dec.intertwiner_dim;
  return dec;
}

Mat sample_intertwiner(const IrrepDecomposition& dec, const std::vector<Mat>& factors) {
  require(factors.empty() || factors.size() == dec.irreps.size(), "one factor per irrep");
  const int n = dec.source.dim;
  Mat w(n, n);
  for (std::size_t j = 0; j < dec.irreps.size(); ++j) {
    const int nj = dec.multiplicity[j], dj = dec.irreps[j].dim;
    if (nj == 0) continue;
    Mat m = Mat::Identity(nj, nj);
    if (!factors.empty() && factors[j].size() > 0) {
      if (factors[j].rows() != nj || factors[j].cols() != nj)
        fail(ErrorKind::InvalidArgument, "intertwiner factor for irrep " + dec.irreps[j].label + " must be " +
                                             std::to_string(nj) + "x" + std::to_string(nj));
      if (!is_unitary(factors[j], 1e-10)) fail(ErrorKind::InvalidArgument, "intertwiner factors must be unitary");
      m = factors[j];
    }
    w.middleCols(dec.offset[j], nj * dj) = dec.canonical[j] * kron(m, Mat::Identity(dj, dj));
  }
  return w;
}

Mat sample_intertwiner(const IrrepDecomposition& dec, Rng& rng) {
  std::vector<Mat> f;
  for (std::size_t j = 0; j < dec.irreps.size(); ++j)
    f.push_back(dec.multiplicity[j] > 0 ? haar_unitary(dec.multiplicity[j], rng) : Mat());
  return sample_intertwiner(dec, f);
}

double intertwining_residual(const IrrepDecomposition& dec, const Mat& w) {
  double r = max_abs(w.adjoint() * w - Mat::Identity(w.cols(), w.cols()));
  for (int g = 0; g < dec.source.group.order; ++g)
    r = std::max(r, max_abs(dec.source.mats[g] * w - w * dec.model[g]));
  return r;
}

IrrepSelection select_irreps(const IrrepDecomposition& dec, const std::vector<std::pair<int, int>>& picks) {
  require(!picks.empty(), "irrep selection must be nonempty");
  IrrepSelection sel;
  sel.picks = picks;
  std::vector<int> cols;
  for (const auto& [j, c] : picks) {
    require(j >= 0 && j < static_cast<int>(dec.irreps.size()), "selected irrep out of range");
    require(c >= 0 && c < dec.multiplicity[j], "selected copy out of range");
    for (int mu = 0; mu < dec.irreps[j].dim; ++mu) {
      const int k = dec.offset[j] + c * dec.irreps[j].dim + mu;
      for (int x : cols) require(x != k, "irrep copy selected twice");
      cols.push_back(k);
    }
  }
  sel.d = static_cast<int>(cols.size());
  sel.P = Mat::Zero(dec.source.dim, sel.d);
  for (int m = 0; m < sel.d; ++m) sel.P(cols[m], m) = 1.0;
  return sel;
}

SymmetryCertificate symmetry_certificate(const MpsTensor& a, const ProjectiveRep& v, const std::vector<Mat>& u,
                                         double tol) {
  require(static_cast<int>(u.size()) == v.eta() && v.dim == a.D, "certificate: rep sizes do not match");
  SymmetryCertificate cert;
  const int D = a.D;
  for (int g = 0; g < v.eta(); ++g) {
    require(u[g].rows() == a.d, "certificate: physical rep has the wrong dimension");
    Mat lhs(a.d * D, D), rhs(a.d * D, D);
    for (int m = 0; m < a.d; ++m) {
      Mat l = Mat::Zero(D, D);
      for (int n = 0; n < a.d; ++n) l += u[g](m, n) * a.mats[n];
      lhs.block(m * D, 0, D, D) = l;
      rhs.block(m * D, 0, D, D) = v.mats[g] * a.mats[m] * v.mats[g].adjoint();
    }
    const auto ph = proportional_phase(rhs, lhs, std::max(tol, 1e-8));
    cert.phases.push_back(ph.value_or(cd(0.0)));
    const double r = ph ? max_abs(lhs - *ph * rhs) : std::max(1.0, max_abs(lhs - rhs));
    cert.max_residual = std::max(cert.max_residual, r);
  }
  cert.pass = cert.max_residual <= tol;
  return cert;
}

ConstructedTensor construct_tensor(const ProjectiveRep& v, const IrrepDecomposition& dec, const Mat& w,
                                   const IrrepSelection& sel, json provenance) {
  const int D = v.dim;
  require(dec.source.dim == D * D && w.rows() == D * D && w.cols() == D * D, "intertwiner has the wrong size");
  require(sel.d >= 1, "selection must pick at least one irrep");
  const double wres = intertwining_residual(dec, w);
  if (wres > 1e-9)
    fail(ErrorKind::InvalidArgument, "W is not a unitary intertwiner (residual " + fmt_double(wres) + ")");
  ConstructedTensor out;
  const Mat abar = w * sel.P;
  const double s = std::sqrt(static_cast<double>(D) / sel.d);
  std::vector<Mat> mats;
  for (int m = 0; m < sel.d; ++m) mats.push_back(s * unvec_r(abar.col(m), D, D));
  out.provenance = std::move(provenance);
  out.provenance["group"] = v.group.spec;
  out.provenance["rep"] = v.name;
  json picks = json::array();
  for (const auto& [j, c] : sel.picks) picks.push_back({{"irrep", dec.irreps[j].label}, {"copy", c}});
  out.provenance["selection"] = picks;
  out.raw = make_tensor(std::move(mats), "constructed", out.provenance);
  for (const auto& ub : dec.model) out.physical.push_back(Mat((sel.P.transpose() * ub * sel.P).transpose()));
  out.certificate = symmetry_certificate(out.raw, v, out.physical);
  out.normal = is_normal(out.raw);
  out.tensor = out.raw;
  out.gauge = Mat::Identity(D, D);
  if (!out.raw.canonical) {
    try {
      const CanonicalForm cf = left_canonicalize_with_gauge(out.raw);
      out.tensor = cf.tensor;
      out.gauge = cf.gauge;
      out.scale = cf.scale;
    } catch (const MpsError&) {
      out.normal = false;
    }
  }
  out.tensor.name = "constructed";
  out.tensor.params = out.provenance;
  return out;
}

json decomposition_to_json(const IrrepDecomposition& dec) {
  json j;
  j["group"] = dec.source.group.spec;
  j["dim"] = dec.source.dim;
  json irr = json::array();
  for (std::size_t k = 0; k < dec.irreps.size(); ++k)
    irr.push_back({{"label", dec.irreps[k].label},
                   {"dim", dec.irreps[k].dim},
                   {"multiplicity", dec.multiplicity[k]},
                   {"offset", dec.offset[k]}});
  j["irreps"] = irr;
  j["intertwiner_dim"] = dec.intertwiner_dim;
  j["parameter_count"] = dec.parameter_count;
  j["intertwining_residual"] = dec.intertwining_residual;
  j["multiplicity_residual"] = dec.multiplicity_residual;
  return j;
}

json constructed_to_json(const ConstructedTensor& c) {
  json j;
  j["tensor"] = tensor_to_json(c.tensor);
  j["normal"] = c.normal;
  j["scale"] = c.scale;
  j["gauge"] = mat_to_json(c.gauge);
  j["certificate"] = {{"pass", c.certificate.pass}, {"max_residual", c.certificate.max_residual}};
  j["provenance"] = c.provenance;
  return j;
}

}  // namespace mpsprep
