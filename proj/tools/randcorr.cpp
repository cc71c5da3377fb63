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

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "randcorr/app/commands.hpp"

namespace {

using randcorr::app::Params;

// Flags a subcommand accepts, by parameter name.
struct FlagSet {
  std::map<std::string, std::string> strings;
  std::map<std::string, std::uint64_t> integers;
  std::map<std::string, double> reals;
  bool verify = false;
};

void add_string(CLI::App* sub, FlagSet& flags, const std::string& name, const std::string& help) {
  sub->add_option("--" + name, flags.strings[name], help);
}

void add_integer(CLI::App* sub, FlagSet& flags, const std::string& name, const std::string& help) {
  sub->add_option("--" + name, flags.integers[name], help);
}

Params collect(CLI::App* sub, const FlagSet& flags) {
  Params params = Params::object();
  const auto given = [&](const std::string& name) { return sub->count("--" + name) > 0; };
  for (const auto& [name, value] : flags.strings)
    if (given(name)) params[name] = value;
  for (const auto& [name, value] : flags.integers) {
    if (!given(name)) continue;
    if (name == "max-n")
      params["max_n"] = value;
    else if (name == "calibration-trials")
      params["calibration_trials"] = value;
    else
      params[name] = value;
  }
  for (const auto& [name, value] : flags.reals)
    if (given(name)) params[name] = value;
  if (flags.verify) params["verify"] = true;
  return params;
}

int run(const std::string& command, const Params& params) {
  const std::string started = randcorr::app::utc_timestamp();
  const auto result = randcorr::app::run_command(command, params);
  if (const auto stem = randcorr::app::output_stem(command, params)) {
    const auto manifest = randcorr::app::write_outputs(*stem, command, params, result, started);
    for (const auto& [path, print] : manifest.outputs) std::cerr << "wrote " << path << "\n";
    std::cerr << "wrote " << stem->string() << ".manifest.json\n";
  } else {
    std::cout << result.artifacts.front().content;
  }
  if (result.report) {
    for (const auto& row : result.report->rows)
      std::cerr << (row.pass ? "PASS " : "FAIL ") << result.report->claim << " " << row.name << " = "
                << randcorr::app::format_double(row.computed) << "\n";
    for (const auto& line : result.report->diagnostics) std::cerr << "NOTE " << line << "\n";
  }
  return result.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlation-length and random-correlation toolkit"};
  app.set_version_flag("--version", std::string(randcorr::app::version()));
  app.require_subcommand(1);

  std::map<std::string, FlagSet> flags;
  std::map<std::string, CLI::App*> subs;
  const auto make = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    subs[name] = sub;
    FlagSet& f = flags[name];
    add_string(sub, f, "out", "Output path; writes <stem>.<ext> plus <stem>.manifest.json");
    add_string(sub, f, "format", "json or csv");
    return std::pair<CLI::App*, FlagSet*>{sub, &f};
  };

  {
    auto [sub, f] = make("length", "Length of correlations, sector lengths and the pure-state verdict");
    add_string(sub, *f, "state", "State spec (ghz:N[:d], dicke:N:k, w:N, cluster:RxC, product:..., file:<path>)");
    add_string(sub, *f, "basis", "pauli | gell-mann | weyl | mixed:<seed>");
    sub->add_flag("--verify", f->verify, "Cross-check through the purity and two-copy routes");
  }
  {
    auto [sub, f] = make("table1", "GHZ detection probabilities of the single-setting witness");
    add_string(sub, *f, "parties", "Party counts, e.g. 3-10 or 3,6,9");
    add_string(sub, *f, "shots", "Comma-separated shot regimes, e.g. 1000,inf");
    add_integer(sub, *f, "trials", "Detection trials per cell");
    add_integer(sub, *f, "calibration-trials", "Trials used to calibrate the witness bound");
    add_integer(sub, *f, "seed", "Master seed");
    add_integer(sub, *f, "threads", "Worker threads (results do not depend on it)");
    sub->add_option("--confidence", f->reals["confidence"], "Confidence level");
  }
  {
    auto [sub, f] = make("cluster", "Length of correlations of n x n cluster states");
    add_integer(sub, *f, "max-n", "Largest lattice side (2..5)");
    sub->add_flag("--verify", f->verify, "Dense cross-check for n <= 3");
  }
  make("counterexamples", "Length of correlations for the measurement and LOCC examples");
  {
    auto [sub, f] = make("fig2", "Witness sweep over the W-state family");
    add_integer(sub, *f, "steps", "Grid points in p over [0, 1]");
  }
  {
    auto [sub, f] = make("witness", "Detection probability of one pure qubit state");
    add_string(sub, *f, "state", "State spec");
    add_string(sub, *f, "shots", "Shots per setting, or inf");
    add_integer(sub, *f, "trials", "Detection trials");
    add_integer(sub, *f, "calibration-trials", "Calibration trials");
    add_integer(sub, *f, "seed", "Master seed");
    add_integer(sub, *f, "threads", "Worker threads");
    sub->add_option("--confidence", f->reals["confidence"], "Confidence level");
  }
  {
    auto [sub, f] = make("roof", "Convex roof (rank 2) or the rank-m witness");
    add_string(sub, *f, "state", "State spec");
    add_integer(sub, *f, "restarts", "Restarts of the numerical upper bound (0 disables)");
    add_integer(sub, *f, "seed", "Seed for the numerical upper bound");
  }
  std::string manifest_path;
  CLI::App* replay = app.add_subcommand("replay", "Re-run a manifest and compare output fingerprints");
  replay->add_option("manifest", manifest_path, "Manifest path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? randcorr::app::kExitOk : randcorr::app::kExitUsage;
  }

  try {
    if (replay->parsed()) {
      const auto outcome = randcorr::app::replay_manifest(manifest_path);
      for (const auto& m : outcome.mismatches) std::cerr << "MISMATCH " << m << "\n";
      std::cerr << (outcome.identical ? "replay identical\n" : "replay differs\n");
      return outcome.identical ? randcorr::app::kExitOk : randcorr::app::kExitReproduction;
    }
    for (const auto& [name, sub] : subs)
      if (sub->parsed()) return run(name, collect(sub, flags[name]));
  } catch (const randcorr::app::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return randcorr::app::kExitUsage;
  } catch (const randcorr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return randcorr::app::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return randcorr::app::kExitUsage;
  }
  return randcorr::app::kExitUsage;
}
