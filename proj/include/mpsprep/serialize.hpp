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

#include <string>
#include <vector>

#include "json.hpp"
#include "mpsprep/linalg.hpp"

namespace mpsprep {

using json = nlohmann::ordered_json;

/// Pretty printer with every float rendered to 17 significant digits.
/// Non-finite values become the strings "inf", "-inf" and "nan".
std::string dump_json(const json& j, int indent = 2);

json complex_to_json(cd z);
cd complex_from_json(const json& j);
json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);
json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

std::string fnv1a_hex(const std::string& text);

/// Minimal RFC 4180 style CSV: first row is the header.
std::string write_csv(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows);
std::vector<std::vector<std::string>> read_csv(const std::string& text);

}  // namespace mpsprep
