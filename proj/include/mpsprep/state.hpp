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

#include "mpsprep/linalg.hpp"

namespace mpsprep {

/// Global amplitude budget shared by every dense allocation. Defaults to 2^26.
std::int64_t amplitude_budget();
void set_amplitude_budget(std::int64_t amplitudes);

/// Throws BudgetExceeded when `amplitudes` would not fit.
void check_budget(std::int64_t amplitudes, const std::string& what);

/// Product of dims, checked against the budget.
std::int64_t register_size(const std::vector<int>& dims);

/// Dense pure state on a mixed-radix register, wire 0 most significant.
struct PureState {
  std::vector<int> dims;
  std::vector<std::string> labels;
  Vec amps;

  int num_wires() const { return static_cast<int>(dims.size()); }
  std::int64_t size() const { return amps.size(); }
  /// Index of the wire carrying `label`; throws if absent or ambiguous.
  int wire(const std::string& label) const;
  std::vector<int> wires(const std::vector<std::string>& labels) const;
};

PureState basis_state(const std::vector<int>& dims,
                      const std::vector<std::string>& labels,
                      const std::vector<int>& digits);

/// |a> (x) |b>, wires of a first.
PureState tensor_product(const PureState& a, const PureState& b);

double fidelity(const PureState& a, const PureState& b);

}  // namespace mpsprep
