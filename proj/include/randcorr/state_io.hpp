// Copyright 2026 The randcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>

#include <json.hpp>

#include "randcorr/named_states.hpp"

namespace randcorr {

/// {"dims": [...], "kind": "pure", "amplitudes": [[re, im], ...]} or
/// {"dims": [...], "kind": "mixed", "matrix": [[[re, im], ...], ...]}.
/// Row-major with party 0 most significant.
nlohmann::json state_to_json(const State& state);
State state_from_json(const nlohmann::json& doc);

State load_state_file(const std::filesystem::path& path);
void save_state_file(const std::filesystem::path& path, const State& state);

}  // namespace randcorr
