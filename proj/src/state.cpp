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

#include "mpsprep/state.hpp"

#include <atomic>

namespace mpsprep {

namespace {
std::atomic<std::int64_t> g_budget{std::int64_t{1} << 26};
}

std::int64_t amplitude_budget() { return g_budget.load(); }

void set_amplitude_budget(std::int64_t amplitudes) {
  require(amplitudes >= 1, "budget must be positive");
  g_budget.store(amplitudes);
}

void check_budget(std::int64_t amplitudes, const std::string& what) {
  if (amplitudes > amplitude_budget())
    fail(ErrorKind::BudgetExceeded, what + ": " + std::to_string(amplitudes) +
                                        " amplitudes exceeds budget " +
                                        std::to_string(amplitude_budget()));
}

std::int64_t register_size(const std::vector<int>& dims) {
  std::int64_t n = 1;
  for (int d : dims) {
    require(d >= 1, "qudit dimension must be positive");
    n *= d;
    check_budget(n, "register");
  }
  return n;
}

int PureState::wire(const std::string& label) const {
  int found = -1;
  for (int w = 0; w < num_wires(); ++w)
    if (labels[w] == label) {
      require(found < 0, "duplicate wire label: " + label);
      found = w;
    }
  require(found >= 0, "unknown wire label: " + label);
  return found;
}

std::vector<int> PureState::wires(const std::vector<std::string>& ls) const {
  std::vector<int> out;
  for (const auto& l : ls) out.push_back(wire(l));
  return out;
}

PureState basis_state(const std::vector<int>& dims, const std::vector<std::string>& labels,
                      const std::vector<int>& digits) {
  require(dims.size() == labels.size() && dims.size() == digits.size(),
          "basis_state: dims, labels and digits must align");
  PureState s;
  s.dims = dims;
  s.labels = labels;
  s.amps = Vec::Zero(register_size(dims));
  for (std::size_t w = 0; w < dims.size(); ++w)
    require(digits[w] >= 0 && digits[w] < dims[w], "basis_state: digit out of range");
  s.amps(from_digits(digits, dims)) = 1.0;
  return s;
}

PureState tensor_product(const PureState& a, const PureState& b) {
  PureState s;
  s.dims = a.dims;
  s.dims.insert(s.dims.end(), b.dims.begin(), b.dims.end());
  s.labels = a.labels;
  s.labels.insert(s.labels.end(), b.labels.begin(), b.labels.end());
  check_budget(a.size() * b.size(), "tensor_product");
  s.amps.resize(a.size() * b.size());
  for (std::int64_t i = 0; i < a.size(); ++i) s.amps.segment(i * b.size(), b.size()) = a.amps(i) * b.amps;
  return s;
}

double fidelity(const PureState& a, const PureState& b) {
  require(a.dims == b.dims, "fidelity: register shapes differ");
  const double na = a.amps.squaredNorm();
  const double nb = b.amps.squaredNorm();
  require(na > 0.0 && nb > 0.0, "fidelity: zero state");
  return std::norm(a.amps.dot(b.amps)) / (na * nb);
}

}  // namespace mpsprep
