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

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "randcorr/app/commands.hpp"

namespace randcorr::app {
namespace {

using nlohmann::json;

std::string hex(std::uint64_t value) {
  std::ostringstream out;
  out << std::hex << value;
  return out.str();
}

std::uint64_t parse_hex(const std::string& text) {
  std::size_t used = 0;
  const std::uint64_t value = std::stoull(text, &used, 16);
  if (used != text.size()) throw Error("malformed fingerprint '" + text + "'");
  return value;
}

}  // namespace

std::uint64_t fingerprint(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

json RunManifest::to_json() const {
  json doc{{"command", command}, {"params", params},   {"seed", seed},
           {"tool_version", tool_version}, {"started", started}, {"finished", finished}};
  doc["outputs"] = json::array();
  for (const auto& [path, print] : outputs) doc["outputs"].push_back({{"path", path}, {"fingerprint", hex(print)}});
  return doc;
}

RunManifest RunManifest::from_json(const json& doc) {
  try {
    RunManifest m;
    m.command = doc.at("command").get<std::string>();
    m.params = doc.at("params");
    m.seed = doc.at("seed").get<std::uint64_t>();
    m.tool_version = doc.at("tool_version").get<std::string>();
    m.started = doc.value("started", "");
    m.finished = doc.value("finished", "");
    for (const auto& out : doc.at("outputs"))
      m.outputs.emplace_back(out.at("path").get<std::string>(), parse_hex(out.at("fingerprint").get<std::string>()));
    return m;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed manifest: ") + e.what());
  }
}

std::optional<std::filesystem::path> output_stem(std::string_view command, const Params& params) {
  if (params.contains("out") && params.at("out").is_string()) {
    std::filesystem::path out = params.at("out").get<std::string>();
    if (out.has_extension()) out.replace_extension();
    return out;
  }
  if (const char* dir = std::getenv("RANDCORR_OUT_DIR"); dir != nullptr && *dir != '\0')
    return std::filesystem::path(dir) / std::string(command);
  return std::nullopt;
}

RunManifest write_outputs(const std::filesystem::path& stem, std::string_view command, const Params& params,
                          const CommandResult& result, const std::string& started) {
  if (stem.has_parent_path()) std::filesystem::create_directories(stem.parent_path());
  RunManifest manifest;
  manifest.command = std::string(command);
  manifest.params = params;
  manifest.seed = params.value("seed", std::uint64_t{1});
  manifest.tool_version = std::string(version());
  manifest.started = started;
  for (const auto& artifact : result.artifacts) {
    const std::string path = stem.string() + artifact.suffix;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << artifact.content;
    manifest.outputs.emplace_back(path, fingerprint(artifact.content));
  }
  manifest.finished = utc_timestamp();
  const std::string manifest_path = stem.string() + ".manifest.json";
  std::ofstream out(manifest_path, std::ios::binary);
  if (!out) throw Error("cannot write " + manifest_path);
  out << manifest.to_json().dump(2) << "\n";
  return manifest;
}

ReplayOutcome replay_manifest(const std::filesystem::path& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) throw Error("cannot open manifest " + manifest_path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error("cannot parse manifest " + manifest_path.string() + ": " + e.what());
  }
  const RunManifest manifest = RunManifest::from_json(doc);
  const CommandResult result = run_command(manifest.command, manifest.params);
  ReplayOutcome outcome;
  if (result.artifacts.size() != manifest.outputs.size())
    outcome.mismatches.push_back("artifact count changed");
  const std::size_t n = std::min(result.artifacts.size(), manifest.outputs.size());
  for (std::size_t i = 0; i < n; ++i)
    if (fingerprint(result.artifacts[i].content) != manifest.outputs[i].second)
      outcome.mismatches.push_back(manifest.outputs[i].first);
  if (manifest.tool_version != version())
    outcome.mismatches.push_back("tool version " + manifest.tool_version + " differs from " + std::string(version()));
  outcome.identical = outcome.mismatches.empty();
  return outcome;
}

}  // namespace randcorr::app
