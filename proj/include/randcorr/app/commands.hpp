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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "randcorr/common.hpp"

namespace randcorr::app {

/// Bad flags or parameter values; maps to exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitReproduction = 2;

std::string_view version();

/// Full-precision decimal rendering used in every CSV cell.
std::string format_double(double value);

/// One checked claim. `source` is "published" when `reference` was printed
/// in the reproduced work, "derived" for independently computed references
/// and "qualitative" for ordering checks without a reference number.
struct ReportRow {
  std::string name;
  double computed = 0.0;
  std::optional<double> reference;
  double tolerance = 0.0;
  std::string source;
  bool pass = false;
  std::string note;
};

struct ReproReport {
  std::string claim;
  std::vector<ReportRow> rows;
  std::vector<std::string> diagnostics;

  void add(ReportRow row) { rows.push_back(std::move(row)); }
  /// Adds a row with reference and tolerance, deciding pass by |computed - reference| <= tolerance.
  void check(std::string name, double computed, double reference, double tolerance, std::string source,
             std::string note = {});
  bool published_failure() const;
  bool all_pass() const;
  nlohmann::json to_json() const;
};

/// One file a command produces: `<stem><suffix>`.
struct Artifact {
  std::string suffix;
  std::string content;
};

struct CommandResult {
  std::vector<Artifact> artifacts;
  std::optional<ReproReport> report;

  int exit_code() const;
};

/// Command parameters as a flat JSON object; the same object is stored in
/// the run manifest so a replay can re-run the command verbatim.
using Params = nlohmann::json;

CommandResult cmd_length(const Params& params);
CommandResult cmd_table1(const Params& params);
CommandResult cmd_cluster(const Params& params);
CommandResult cmd_counterexamples(const Params& params);
CommandResult cmd_fig2(const Params& params);
CommandResult cmd_witness(const Params& params);
CommandResult cmd_roof(const Params& params);

/// Dispatches by command name; throws UsageError for unknown names.
CommandResult run_command(std::string_view command, const Params& params);
const std::vector<std::string>& command_names();

/// 64-bit FNV-1a, used to fingerprint outputs in manifests.
std::uint64_t fingerprint(std::string_view bytes);

struct RunManifest {
  std::string command;
  Params params;
  std::uint64_t seed = 0;
  std::string tool_version;
  std::string started;
  std::string finished;
  /// Output file paths with their fingerprints, in artifact order.
  std::vector<std::pair<std::string, std::uint64_t>> outputs;

  nlohmann::json to_json() const;
  static RunManifest from_json(const nlohmann::json& doc);
};

/// Where outputs go: `--out` when given, else `$RANDCORR_OUT_DIR/<command>`,
/// else nothing (outputs are printed instead).
std::optional<std::filesystem::path> output_stem(std::string_view command, const Params& params);

/// Writes every artifact next to `stem` plus `<stem>.manifest.json`;
/// returns the manifest.
RunManifest write_outputs(const std::filesystem::path& stem, std::string_view command, const Params& params,
                          const CommandResult& result, const std::string& started);

struct ReplayOutcome {
  bool identical = false;
  std::vector<std::string> mismatches;
};

/// Re-runs the manifest's command and compares output fingerprints.
ReplayOutcome replay_manifest(const std::filesystem::path& manifest_path);

std::string utc_timestamp();

}  // namespace randcorr::app
