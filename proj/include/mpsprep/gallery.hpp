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

#include <optional>
#include <string>
#include <vector>

#include "mpsprep/group_reps.hpp"
#include "mpsprep/pushing.hpp"
#include "mpsprep/serialize.hpp"
#include "mpsprep/tensor_core.hpp"

namespace mpsprep {

MpsTensor z2_family_tensor(double g);
MpsTensor aklt_tensor();
MpsTensor su3_tensor();
MpsTensor a4_family_tensor(double theta, double phi);
MpsTensor so5_tensor();
MpsTensor ghz_tensor(int d);
/// Single-site D=3 tensor before blocking.
MpsTensor majumdar_ghosh_raw();
/// Two-site blocked form, split into its two blocks and inflated to Dbar = 2.
BlockStructure majumdar_ghosh_blocks();
BlockStructure z4xz2_blocks();
/// Z4 x Z2 action on the direct sum: virtual V_(a,b), block permutation, physical U_(a,b).
BlockSymmetryData z4xz2_symmetry();

double z2_family_xi(double g);
double a4_family_xi(double theta);

struct ParamSpec {
  std::string name;
  double def = 0.0;
  double min = 0.0;
  double max = 0.0;
  bool integer = false;
};

struct GalleryEntry {
  std::string name;
  std::string summary;
  std::vector<ParamSpec> params;
  std::string basis;              ///< named_defect_basis spec (per block for protocol2).
  int q = 1;
  std::string xi_formula;         ///< empty when no closed form is known.
  std::string route;              ///< "protocol1" or "protocol2".
};

struct GalleryItem {
  GalleryEntry entry;
  json params;                          ///< resolved, defaults filled.
  std::optional<MpsTensor> tensor;      ///< protocol1 entries.
  std::optional<BlockStructure> blocks; ///< protocol2 entries.
  std::optional<double> xi;             ///< closed form evaluated at params.
  bool normal = false;
};

const std::vector<GalleryEntry>& gallery_entries();
const GalleryEntry& gallery_entry(const std::string& name);
/// `params` is an object of name -> number; missing names take defaults.
GalleryItem gallery_tensor(const std::string& name, const json& params = json::object());

std::vector<DefectBasis> gallery_bases(const GalleryItem& item);

json gallery_entry_to_json(const GalleryEntry& e);
json gallery_item_to_json(const GalleryItem& item);

}  // namespace mpsprep
