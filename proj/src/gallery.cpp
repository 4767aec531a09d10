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

#include "mpsprep/gallery.hpp"

#include <cmath>

namespace mpsprep {

namespace {

Mat m2(cd a, cd b, cd c, cd d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

Mat sigma_plus() { return m2(0, 1, 0, 0); }
Mat sigma_minus() { return m2(0, 0, 1, 0); }
Mat pauli_x() { return m2(0, 1, 1, 0); }
Mat pauli_y() { return m2(0, -kI, kI, 0); }
Mat pauli_z() { return m2(1, 0, 0, -1); }

Mat block_diag(const Mat& a, const Mat& b) {
  Mat m = Mat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

}  // namespace

MpsTensor z2_family_tensor(double g) {
  require(g >= -1.0 && g <= 1.0, "z2_family: g must lie in [-1, 1]");
  const double eta = 1.0 / std::sqrt(1.0 + std::abs(g));
  const cd s = std::sqrt(cd(-g, 0.0));
  return make_tensor({eta * m2(1, 0, s, 0), eta * m2(0, -s, 0, 1)}, "z2_family", {{"g", g}});
}

MpsTensor aklt_tensor() {
  const double a = std::sqrt(2.0 / 3.0), b = std::sqrt(1.0 / 3.0);
  return make_tensor({a * sigma_plus(), -a * sigma_minus(), -b * pauli_z()}, "aklt");
}

MpsTensor su3_tensor() {
  const double r = 1.0 / std::sqrt(2.0);
  Mat p = Mat::Zero(3, 3), m = Mat::Zero(3, 3), z = Mat::Zero(3, 3);
  p(0, 1) = p(1, 2) = r;
  m(1, 0) = m(2, 1) = -r;
  z(0, 0) = r;
  z(2, 2) = -r;
  return make_tensor({p, m, z}, "su3");
}

MpsTensor a4_family_tensor(double theta, double phi) {
  const cd e = std::polar(1.0, phi);
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  const cd u = (c + e * s) / std::sqrt(2.0), v = (c - e * s) / std::sqrt(2.0);
  const double r = 1.0 / std::sqrt(2.0);
  Mat p(3, 3), m(3, 3), z(3, 3);
  p << 0, u, 0, v, 0, u, 0, -v, 0;
  m << 0, v, 0, -u, 0, -v, 0, -u, 0;
  z << u, 0, -v, 0, 0, 0, v, 0, -u;
  return make_tensor({r * p, r * m, r * z}, "a4_family", {{"theta", theta}, {"phi", phi}});
}

MpsTensor so5_tensor() {
  const Mat I = Mat::Identity(2, 2);
  const std::vector<Mat> gamma{kron(pauli_x(), I), kron(pauli_y(), I), kron(pauli_z(), pauli_x()),
                               kron(pauli_z(), pauli_y()), kron(pauli_z(), pauli_z())};
  std::vector<Mat> mats;
  for (const auto& g : gamma) mats.push_back(g / std::sqrt(5.0));
  return make_tensor(std::move(mats), "so5");
}

MpsTensor ghz_tensor(int d) {
  require(d >= 1, "ghz: d must be positive");
  std::vector<Mat> mats;
  for (int m = 0; m < d; ++m) {
    Mat a = Mat::Zero(d, d);
    a(m, m) = 1.0;
    mats.push_back(a);
  }
  return make_tensor(std::move(mats), "ghz", {{"d", d}});
}

MpsTensor majumdar_ghosh_raw() {
  const double r = 1.0 / std::sqrt(2.0);
  Mat a0 = Mat::Zero(3, 3), a1 = Mat::Zero(3, 3);
  a0(0, 1) = 1.0;
  a0(2, 0) = r;
  a1(0, 2) = 1.0;
  a1(1, 0) = -r;
  return make_tensor({a0, a1}, "majumdar_ghosh_raw");
}

BlockStructure majumdar_ghosh_blocks() {
  const std::vector<Mat> paulis{Mat::Identity(2, 2), pauli_x(), pauli_y(), pauli_z()};
  std::vector<Mat> b0, b1;
  for (int m = 0; m < 4; ++m) {
    b0.push_back(Mat::Constant(1, 1, m == 0 ? 1.0 : 0.0));
    b1.push_back(-paulis[m] / 2.0);
  }
  return inflate_blocks(make_block_structure(
      {make_tensor(std::move(b0), "mg_block0"), make_tensor(std::move(b1), "mg_block1")}));
}

BlockStructure z4xz2_blocks() {
  const double a = std::sqrt(2.0 / 3.0), b = std::sqrt(1.0 / 3.0);
  MpsTensor upper = make_tensor({a * sigma_plus(), -a * sigma_minus(), -b * pauli_z()}, "z4xz2_block0");
  MpsTensor lower =
      make_tensor({kI * a * sigma_minus(), -kI * a * sigma_plus(), -b * pauli_z()}, "z4xz2_block1");
  return make_block_structure({upper, lower});
}

BlockSymmetryData z4xz2_symmetry() {
  BlockSymmetryData sym;
  sym.group = build_group("Z4xZ2");
  const MpsTensor sum = direct_sum(z4xz2_blocks());
  const Mat X = pauli_x(), Z = pauli_z(), I = Mat::Identity(2, 2);
  const Mat map = virtual_to_physical_map(sum).mat;
  const Mat rinv = right_inverse(map);
  for (int g = 0; g < sym.group.order; ++g) {
    const int a = g / 2, b = g % 2;
    const Mat v = block_diag(mpow(X, b) * mpow(Z, a / 2), mpow(X, b) * mpow(Z, (a + 1) / 2)) * kron(mpow(X, a), I);
    sym.V.push_back(v);
    sym.perm.push_back({a % 2, (1 + a) % 2});
    // Physical action read off from V A^m V^dagger = sum_n U_mn A^n.
    Mat t(sum.d, 16);
    for (int m = 0; m < sum.d; ++m) t.row(m) = vec_r(v * sum.mats[m] * v.adjoint()).transpose();
    const Mat u = t * rinv;
    if ((u * map - t).cwiseAbs().maxCoeff() > 1e-10 || !is_unitary(u, 1e-10))
      fail(ErrorKind::InvariantViolation, "z4xz2: no physical symmetry for " + sym.group.labels[g]);
    sym.U.push_back(u);
  }
  sym.cosets = stabilizer_and_cosets(sym.group, sym.perm, 2);
  return sym;
}

double z2_family_xi(double g) { return 1.0 / std::abs(std::log((1.0 + g) / (1.0 - g))); }

double a4_family_xi(double theta) {
  const double c = std::cos(theta);
  return -1.0 / std::log(0.5 * std::sqrt(1.0 + 3.0 * c * c));
}

const std::vector<GalleryEntry>& gallery_entries() {
  static const std::vector<GalleryEntry> entries{
      {"z2_family", "Z2-symmetric d=2, D=2 family from cluster (g=-1) to GHZ (g=0)",
       {{"g", -0.5, -1.0, 1.0, false}}, "pauli2", 1, "|ln((1+g)/(1-g))|^-1", "protocol1"},
      {"aklt", "spin-1 AKLT state, d=3, D=2", {}, "pauli2", 1, "1/ln(3)", "protocol1"},
      {"su3", "SO(3)-symmetric spin-1 state with SU(3) edge modes, d=3, D=3", {}, "pauli3", 2, "", "protocol1"},
      {"a4_family", "A4-symmetric d=3, D=3 family",
       {{"theta", kPi / 3.0, 0.0, kPi, false}, {"phi", 0.7, -2.0 * kPi, 2.0 * kPi, false}}, "a4", 1,
       "-1/ln(sqrt(1+3cos^2(theta))/2)", "protocol1"},
      {"so5", "SO(5) AKLT-type state, d=5, D=4", {}, "wpauli2", 1, "", "protocol1"},
      {"ghz", "qudit GHZ state, d=D", {{"d", 2, 2, 8, true}}, "pauli", 1, "", "protocol1"},
      {"majumdar_ghosh", "Majumdar-Ghosh dimer state, blocked pairs (d=4) as two blocks", {}, "pauli2", 1, "",
       "protocol2"},
      {"z4xz2", "Z4xZ2 -> Z2xZ2 symmetry-broken state, d=3, K=2, Dbar=2", {}, "pauli2", 1, "", "protocol2"},
  };
  return entries;
}

const GalleryEntry& gallery_entry(const std::string& name) {
  for (const auto& e : gallery_entries())
    if (e.name == name) return e;
  fail(ErrorKind::InvalidArgument, "unknown gallery entry: " + name);
}

GalleryItem gallery_tensor(const std::string& name, const json& params) {
  GalleryItem item;
  item.entry = gallery_entry(name);
  require(params.is_object(), "gallery params must be an object");
  for (auto it = params.begin(); it != params.end(); ++it) {
    bool known = false;
    for (const auto& p : item.entry.params) known = known || p.name == it.key();
    if (!known) fail(ErrorKind::InvalidArgument, "gallery entry " + name + " has no parameter " + it.key());
  }
  item.params = json::object();
  for (const auto& p : item.entry.params) {
    double v = p.def;
    if (params.contains(p.name)) {
      if (!params.at(p.name).is_number())
        fail(ErrorKind::InvalidArgument, "parameter " + p.name + " must be a number");
      v = params.at(p.name).get<double>();
    }
    if (v < p.min || v > p.max || !std::isfinite(v))
      fail(ErrorKind::InvalidArgument, "parameter " + p.name + " out of range [" + fmt_double(p.min) + ", " +
                                           fmt_double(p.max) + "]");
    if (p.integer) {
      if (v != std::floor(v)) fail(ErrorKind::InvalidArgument, "parameter " + p.name + " must be an integer");
      item.params[p.name] = static_cast<int>(v);
    } else {
      item.params[p.name] = v;
    }
  }
  if (name == "z2_family") {
    const double g = item.params["g"].get<double>();
    item.tensor = z2_family_tensor(g);
    if (std::abs(g) < 1.0 && g != 0.0) item.xi = z2_family_xi(g);
  } else if (name == "aklt") {
    item.tensor = aklt_tensor();
    item.xi = 1.0 / std::log(3.0);
  } else if (name == "su3") {
    item.tensor = su3_tensor();
  } else if (name == "a4_family") {
    const double th = item.params["theta"].get<double>();
    item.tensor = a4_family_tensor(th, item.params["phi"].get<double>());
    item.xi = a4_family_xi(th);
  } else if (name == "so5") {
    item.tensor = so5_tensor();
  } else if (name == "ghz") {
    const int d = item.params["d"].get<int>();
    item.tensor = ghz_tensor(d);
    item.entry.basis = "pauli" + std::to_string(d);
  } else if (name == "majumdar_ghosh") {
    item.blocks = majumdar_ghosh_blocks();
  } else if (name == "z4xz2") {
    item.blocks = z4xz2_blocks();
  }
  if (item.tensor) {
    item.normal = is_normal(*item.tensor);
  } else {
    item.normal = false;
  }
  return item;
}

std::vector<DefectBasis> gallery_bases(const GalleryItem& item) {
  const DefectBasis b = named_defect_basis(item.entry.basis);
  if (item.blocks) return std::vector<DefectBasis>(static_cast<std::size_t>(item.blocks->K()), b);
  return {b};
}

json gallery_entry_to_json(const GalleryEntry& e) {
  json j;
  j["name"] = e.name;
  j["summary"] = e.summary;
  json ps = json::array();
  for (const auto& p : e.params)
    ps.push_back({{"name", p.name}, {"default", p.def}, {"min", p.min}, {"max", p.max}, {"integer", p.integer}});
  j["params"] = ps;
  j["basis"] = e.basis;
  j["q"] = e.q;
  j["xi_formula"] = e.xi_formula;
  j["route"] = e.route;
  return j;
}

json gallery_item_to_json(const GalleryItem& item) {
  json j = gallery_entry_to_json(item.entry);
  j["resolved_params"] = item.params;
  j["normal"] = item.normal;
  if (item.xi) j["xi"] = *item.xi;
  if (item.tensor) j["tensor"] = tensor_to_json(*item.tensor);
  if (item.blocks) j["blocks"] = block_structure_to_json(*item.blocks);
  return j;
}

}  // namespace mpsprep
