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
#include <optional>
#include <string>
#include <vector>

#include "mpsprep/circuit_sim.hpp"
#include "mpsprep/group_reps.hpp"
#include "mpsprep/pushing.hpp"
#include "mpsprep/state.hpp"
#include "mpsprep/tensor_core.hpp"

namespace mpsprep {

/// Bond/physical segment [bondL, phys_1..phys_q, bondR] grown from a Bell pair, or
/// [bondL, phys_1..phys_q] grown from |R> when `right` is given.
PureState sequential_prepare(const MpsTensor& a, int q_sites, const std::optional<Vec>& right = std::nullopt);

struct Corrections {
  std::vector<Mat> site;        ///< per segment, acts on its d^q physical block.
  std::vector<int> defect;      ///< accumulated defect pushed through each segment.
  std::vector<int> partner;     ///< defect left behind on the segment's left bond.
  Mat edge;                     ///< applied to the left dangling bond qudit.
  int edge_defect = 0;
  cd edge_phase{1.0, 0.0};      ///< residual defect is edge_phase * B^{edge_defect}.
};

/// outcomes[s] is the fusion outcome between segments s and s+1.
Corrections resolve_defects(const std::vector<int>& outcomes, const PushingTable& table, int n_segments);

enum class RunMode { Sample, Branch, AllBranches };

struct ProtocolConfig {
  MpsTensor tensor;
  int q = 1;
  int n = 2;
  DefectBasis basis;
  BoundarySpec boundary;
  RunMode mode = RunMode::AllBranches;
  std::uint64_t seed = 0;
  std::vector<int> branch;                  ///< Branch mode: fusion outcomes.
  bool open_bc_optimization = false;        ///< OpenEdges only: right edge grown from |R>.
  bool literal_fusion = false;              ///< apply the fusion unitary with its ancilla.
  std::int64_t max_branches = std::int64_t{1} << 20;
};

struct BoundaryRecord {
  std::string kind = "entangled";
  int outcome = -1;
  bool success = true;           ///< outcome realises the requested boundary.
  double probability = 1.0;
  Mat X;                         ///< realised boundary matrix (Matrix kind).
  Vec L;                         ///< realised left vector (OpenEdges kind).
};

struct ProtocolReport {
  std::string protocol;
  std::string config_hash;
  std::uint64_t seed = 0;
  std::string mode;
  std::vector<int> outcomes;
  std::vector<double> outcome_probabilities;
  std::vector<int> wh_outcomes;      ///< Walsh-Hadamard outcomes (protocol 2).
  int phase_shift = 0;               ///< sum of wh outcomes mod K.
  std::vector<std::vector<int>> corrected_defects;  ///< [block][segment].
  std::vector<std::vector<int>> partners;           ///< [block][segment].
  std::vector<std::vector<Mat>> corrections;        ///< [block][segment].
  std::vector<Mat> edge_corrections;                ///< per block.
  BoundaryRecord boundary;
  double bulk_fidelity = 0.0;
  double fidelity = 0.0;
  double wall_time_ms = 0.0;
  PureState state;                   ///< final state; not serialised.
};

struct BranchSummary {
  std::int64_t branch_count = 0;
  double min_fidelity = 1.0;
  double min_bulk_fidelity = 1.0;
  double total_probability = 0.0;
};

BranchSummary summarize(const std::vector<ProtocolReport>& reports);

std::vector<ProtocolReport> protocol1(const ProtocolConfig& cfg);

/// Same protocol with every segment prepared up front and all fusions applied to the
/// joint register, for cross-checking the incremental engine on small inputs.
ProtocolReport protocol1_parallel_branch(const ProtocolConfig& cfg, const std::vector<int>& outcomes);

/// Measures or postselects the dangling bond qudits and returns the reduced state.
/// Sampling measures in the generalised Bell basis when it contains the requested
/// boundary vector and in an orthonormal completion of it otherwise; outcome 0 of a
/// completion is the requested boundary. With `rng` null the requested boundary is
/// postselected. Removes the edge wires.
BoundaryRecord project_boundary(PureState& s, const std::vector<int>& left, const std::vector<int>& right,
                                const BoundarySpec& boundary, Rng* rng);

struct Protocol2Config {
  BlockStructure blocks;             ///< inflated; all blocks share Dbar.
  std::vector<DefectBasis> bases;    ///< one per block, equal eta.
  int q = 1;
  int n = 2;
  BoundarySpec boundary;             ///< Entangled or Matrix of size K*Dbar.
  RunMode mode = RunMode::AllBranches;
  std::uint64_t seed = 0;
  std::vector<int> branch;           ///< Branch mode: fusion outcomes then Walsh-Hadamard outcomes.
  std::int64_t max_branches = std::int64_t{1} << 20;
};

std::vector<ProtocolReport> protocol2(const Protocol2Config& cfg);

struct DisentangleRecord {
  std::vector<int> outcomes;
  int phase_shift = 0;
  double probability = 1.0;
};

/// Walsh-Hadamard on each bulk block qudit, measurement (or postselection on `branch`),
/// removal of the measured wires and the diagonal phase fix on the edge block qudit.
DisentangleRecord disentangle_blocks(PureState& s, const std::vector<int>& bulk, int edge, int K, Rng* rng,
                                     const std::vector<int>* branch);

struct SampleResult {
  PureState state;
  std::vector<MpsTensor> tensors;
  BoundarySpec boundary;
  std::vector<int> outcomes;
  int boundary_outcome = 0;
  double fidelity = 0.0;
  double factor_residual = 0.0;  ///< SPT only: max distance of recorded tensors from A_AKLT (x) J.
};

SampleResult sample_random_mps(int d, int D, int n, Rng& rng);
SampleResult sample_spt_phase(int junk_dim, int n, Rng& rng);

json report_to_json(const ProtocolReport& r);
ProtocolReport report_from_json(const json& j);
json summary_to_json(const BranchSummary& s);
/// One row per report with the scalar fields.
std::string reports_to_csv(const std::vector<ProtocolReport>& reports);
std::vector<ProtocolReport> reports_from_csv(const std::string& text);

}  // namespace mpsprep
