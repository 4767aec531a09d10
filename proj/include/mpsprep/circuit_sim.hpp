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

#include <cstdint>
#include <string>
#include <vector>

#include "mpsprep/group_reps.hpp"
#include "mpsprep/linalg.hpp"
#include "mpsprep/serialize.hpp"
#include "mpsprep/state.hpp"
#include "mpsprep/tensor_core.hpp"

namespace mpsprep {

/// Applies U to `wires` (first listed wire most significant inside U).
void apply_unitary(PureState& s, const Mat& U, const std::vector<int>& wires, bool check_unitary = true);

/// Block diagonal sum_c |c><c| (x) U_c; the control wire is the most significant.
Mat controlled_unitary(const std::vector<Mat>& per_control);

/// Applies U_{c} to `targets`, selected by the value c of `control`.
void apply_controlled(PureState& s, int control, const std::vector<Mat>& per_control,
                      const std::vector<int>& targets);

/// Born probabilities of the joint computational basis outcomes on `wires`.
std::vector<double> outcome_probabilities(const PureState& s, const std::vector<int>& wires);

struct MeasurementRecord {
  std::vector<int> wires;
  std::vector<int> digits;
  int outcome = 0;        ///< flattened over the wire dims.
  double probability = 0.0;
  double draw = 0.0;      ///< uniform variate consumed from the generator.
};

MeasurementRecord measure(PureState& s, const std::vector<int>& wires, Rng& rng);

/// Postselects `wires` on the flattened outcome and renormalises; returns the probability.
double project(PureState& s, const std::vector<int>& wires, int outcome);

/// Contracts `wires` with <v| and removes them; returns ||<v|psi>||^2 / ||psi||^2.
/// v is indexed by the flattened outcome over the wires.
double project_onto(PureState& s, const std::vector<int>& wires, const Vec& v);

/// Removes wires that are in a definite computational basis state.
void remove_wires(PureState& s, const std::vector<int>& wires);

/// New wire order: result wire k is old wire order[k].
void permute_wires(PureState& s, const std::vector<int>& order);

/// Appends |digit> on a new wire.
void append_wire(PureState& s, int dim, const std::string& label, int digit = 0);

/// U(|j>_bond |0>_phys) = sum_m A^m |j> |m>, ordered (bond, phys).
Mat stinespring_dilation(const MpsTensor& a);

struct FusionUnitary {
  Mat U;       ///< on (bond, bond, ancilla) with the ancilla least significant.
  Mat VB;      ///< eta x D^2 isometry.
  int D = 0;
  int eta = 0;
  int p = 1;   ///< ancilla dimension lcm(eta, D^2) / D^2.
};

FusionUnitary fusion_basis_unitary(const DefectBasis& basis);

/// |B^k> = D^{-1/2} sum_ij conj(B^k_ij) |ij>.
Vec bell_vector(const Mat& b);

/// Von Neumann entropy (natural log) across the cut after the first `cut` wires.
double entanglement_entropy(const PureState& s, int cut);

json state_to_json(const PureState& s);
PureState state_from_json(const json& j);
json record_to_json(const MeasurementRecord& r);

}  // namespace mpsprep
