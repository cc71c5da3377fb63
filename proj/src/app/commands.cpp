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

#include "randcorr/app/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "randcorr/app/reproduce.hpp"
#include "randcorr/convexroof.hpp"
#include "randcorr/correlations.hpp"
#include "randcorr/named_states.hpp"
#include "randcorr/state_io.hpp"

namespace randcorr::app {
namespace {

using nlohmann::json;

template <class T>
T param(const Params& params, const char* key, T fallback) {
  if (!params.contains(key) || params.at(key).is_null()) return fallback;
  try {
    return params.at(key).get<T>();
  } catch (const json::exception&) {
    throw UsageError(std::string("parameter '") + key + "' has the wrong type");
  }
}

std::string required_string(const Params& params, const char* key) {
  const auto value = param<std::string>(params, key, "");
  if (value.empty()) throw UsageError(std::string("missing --") + key);
  return value;
}

std::string output_format(const Params& params, const std::string& fallback) {
  const auto format = param<std::string>(params, "format", fallback);
  if (format != "json" && format != "csv") throw UsageError("--format must be json or csv");
  return format;
}

Shots parse_shots(std::string_view text) {
  if (text == "inf" || text == "infinite" || text == "∞") return Shots::infinite();
  std::uint64_t count = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), count);
  if (ec != std::errc() || ptr != text.data() + text.size() || count == 0)
    throw UsageError("invalid shot count '" + std::string(text) + "'");
  return Shots::finite(count);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = text.find(sep);
    out.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) return out;
    text.remove_prefix(pos + 1);
  }
}

int parse_int(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw UsageError("invalid integer '" + std::string(text) + "'");
  return value;
}

// "3-10" or "3,5,7".
std::vector<int> parse_parties(std::string_view text) {
  std::vector<int> out;
  if (const auto dash = text.find('-'); dash != std::string_view::npos) {
    const int lo = parse_int(text.substr(0, dash));
    const int hi = parse_int(text.substr(dash + 1));
    if (lo > hi) throw UsageError("empty party range");
    for (int n = lo; n <= hi; ++n) out.push_back(n);
  } else {
    for (auto part : split(text, ',')) out.push_back(parse_int(part));
  }
  return out;
}

State load_state(const std::string& spec) {
  constexpr std::string_view prefix = "file:";
  if (spec.starts_with(prefix)) return load_state_file(spec.substr(prefix.size()));
  return make_named_state(spec);
}

std::vector<OperatorBasis> bases_for(const SystemShape& shape, const std::string& name) {
  std::vector<OperatorBasis> out;
  for (int d : shape.dims()) out.push_back(basis_from_name(name, d));
  return out;
}

std::string report_csv(const ReproReport& report) {
  std::ostringstream out;
  out << "claim,name,computed,reference,tolerance,source,pass\n";
  for (const auto& row : report.rows)
    out << report.claim << ",\"" << row.name << "\"," << format_double(row.computed) << ","
        << (row.reference ? format_double(*row.reference) : "") << "," << format_double(row.tolerance) << ","
        << row.source << "," << (row.pass ? "true" : "false") << "\n";
  return out.str();
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

// Primary artifact plus the report as a separate JSON file.
CommandResult with_report(std::string suffix, std::string content, ReproReport report) {
  CommandResult result;
  result.artifacts.push_back({std::move(suffix), std::move(content)});
  result.artifacts.push_back({".report.json", dump(report.to_json())});
  result.report = std::move(report);
  return result;
}

CommandResult single(std::string suffix, std::string content) {
  CommandResult result;
  result.artifacts.push_back({std::move(suffix), std::move(content)});
  return result;
}

std::string key_value_csv(const json& doc) {
  std::ostringstream out;
  out << "key,value\n";
  for (const auto& [key, value] : doc.items())
    out << key << "," << (value.is_number_float() ? format_double(value.get<double>()) : value.dump()) << "\n";
  return out.str();
}

constexpr std::size_t kMaxTensorExport = std::size_t{1} << 20;
constexpr std::size_t kMaxSectorDim = 256;

}  // namespace

std::string_view version() { return RANDCORR_VERSION; }

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void ReproReport::check(std::string name, double computed, double reference, double tolerance, std::string source,
                        std::string note) {
  const bool pass = std::abs(computed - reference) <= tolerance;
  rows.push_back({std::move(name), computed, reference, tolerance, std::move(source), pass, std::move(note)});
}

bool ReproReport::published_failure() const {
  return std::any_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.source == "published" && !r.pass; });
}

bool ReproReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

json ReproReport::to_json() const {
  json doc;
  doc["claim"] = claim;
  doc["rows"] = json::array();
  for (const auto& row : rows) {
    json r{{"name", row.name}, {"computed", row.computed}, {"tolerance", row.tolerance},
           {"source", row.source}, {"pass", row.pass}};
    r["reference"] = row.reference ? json(*row.reference) : json(nullptr);
    if (!row.note.empty()) r["note"] = row.note;
    doc["rows"].push_back(r);
  }
  doc["diagnostics"] = diagnostics;
  doc["pass"] = !published_failure();
  return doc;
}

int CommandResult::exit_code() const { return report && report->published_failure() ? kExitReproduction : kExitOk; }

CommandResult cmd_length(const Params& params) {
  const std::string spec = required_string(params, "state");
  const std::string basis = param<std::string>(params, "basis", "gell-mann");
  const std::string format = output_format(params, "json");
  const bool verify = param<bool>(params, "verify", false);
  const State state = load_state(spec);
  const SystemShape& shape = shape_of(state);
  const auto bases = bases_for(shape, basis);

  if (format == "csv") {
    std::size_t entries = 1;
    for (int d : shape.dims()) entries *= static_cast<std::size_t>(d * d);
    if (entries > kMaxTensorExport) throw UsageError("tensor too large to export");
    const CorrelationTensor t = std::holds_alternative<PureState>(state)
                                    ? correlation_tensor(std::get<PureState>(state), bases)
                                    : correlation_tensor(std::get<DensityMatrix>(state), bases);
    std::ostringstream out;
    for (int n = 0; n < shape.party_count(); ++n) out << "mu" << n + 1 << ",";
    out << "re,im\n";
    std::vector<int> mu(static_cast<std::size_t>(shape.party_count()), 0);
    for (const Complex& c : t.coefficients) {
      for (int m : mu) out << m << ",";
      out << format_double(c.real()) << "," << format_double(c.imag()) << "\n";
      for (std::size_t n = mu.size(); n-- > 0;) {
        if (++mu[n] < t.extents[n]) break;
        mu[n] = 0;
      }
    }
    return single(".csv", out.str());
  }

  json doc;
  doc["state"] = spec;
  doc["dims"] = shape.dims();
  doc["basis"] = basis;
  double threshold = 1.0;
  for (int d : shape.dims()) threshold *= d - 1;
  doc["threshold"] = threshold;
  double c = 0.0;
  if (const auto* psi = std::get_if<PureState>(&state)) {
    c = length_of_correlations(*psi, bases);
    const auto verdict = is_entangled_pure(*psi);
    doc["entangled"] = verdict.entangled;
    doc["margin"] = c - threshold;
  } else {
    c = length_of_correlations(std::get<DensityMatrix>(state), bases);
    doc["entangled"] = nullptr;
  }
  doc["C"] = c;
  if (shape.total_dim() <= kMaxSectorDim)
    doc["sector_lengths"] = sector_lengths(to_density(state)).values;
  else
    doc["sector_lengths"] = nullptr;
  if (!verify) return single(".json", dump(doc));

  ReproReport report;
  report.claim = "length";
  if (shape.total_dim() <= kMaxSectorDim)
    report.check("subset-purity route", length_from_purities(to_density(state)), c, 1e-9, "derived");
  if (const auto* psi = std::get_if<PureState>(&state); psi && shape.total_dim() * shape.total_dim() <= (1u << 16))
    report.check("two-copy route", two_copy_length(*psi), c, 1e-9, "derived");
  if (basis != "gell-mann")
    report.check("gell-mann basis", length_of_correlations(to_density(state)), c, 1e-9, "derived");
  doc["verify"] = report.to_json();
  return with_report(".json", dump(doc), std::move(report));
}

CommandResult cmd_table1(const Params& params) {
  Table1Options options;
  options.parties = parse_parties(param<std::string>(params, "parties", "3-10"));
  options.shots.clear();
  for (auto part : split(param<std::string>(params, "shots", "1000,inf"), ',')) options.shots.push_back(parse_shots(part));
  options.trials = param<std::size_t>(params, "trials", options.trials);
  options.calibration_trials = param<std::size_t>(params, "calibration_trials", options.calibration_trials);
  options.confidence = param<double>(params, "confidence", options.confidence);
  options.seed = param<std::uint64_t>(params, "seed", options.seed);
  options.threads = param<unsigned>(params, "threads", 0);
  for (int n : options.parties)
    if (n < 3 || n > 10) throw UsageError("Table I party counts must lie in 3..10");
  const std::string format = output_format(params, "csv");
  const auto cells = compute_table1(options);
  auto report = table1_report(cells);
  if (format == "csv") return with_report(".csv", table1_csv(cells), std::move(report));
  json doc;
  doc["cells"] = json::array();
  for (const auto& cell : cells)
    doc["cells"].push_back({{"N", cell.parties},
                            {"K", cell.shots.label()},
                            {"probability", cell.report.probability},
                            {"standard_error", cell.report.standard_error},
                            {"delta", cell.report.delta},
                            {"bound", cell.report.bound}});
  doc["report"] = report.to_json();
  return with_report(".json", dump(doc), std::move(report));
}

CommandResult cmd_cluster(const Params& params) {
  const int max_side = param<int>(params, "max_n", kMaxClusterSide);
  const bool verify = param<bool>(params, "verify", false);
  const std::string format = output_format(params, "csv");
  const auto rows = cluster_rows(max_side, verify);
  auto report = cluster_report(rows);
  if (format == "csv") return with_report(".csv", cluster_csv(rows), std::move(report));
  json doc;
  doc["rows"] = json::array();
  for (const auto& row : rows)
    doc["rows"].push_back({{"n", row.side},
                           {"qubits", row.qubits},
                           {"C", row.length},
                           {"log2_C", std::log2(static_cast<double>(row.length))},
                           {"dense_C", row.dense_length ? json(*row.dense_length) : json(nullptr)},
                           {"ghz_C", row.ghz_length},
                           {"product_C", row.product_length}});
  doc["report"] = report.to_json();
  return with_report(".json", dump(doc), std::move(report));
}

CommandResult cmd_counterexamples(const Params& params) {
  const std::string format = output_format(params, "json");
  auto report = counterexample_report();
  CommandResult result = single(format == "csv" ? ".csv" : ".json",
                                format == "csv" ? report_csv(report) : dump(report.to_json()));
  result.report = std::move(report);
  return result;
}

CommandResult cmd_fig2(const Params& params) {
  const int steps = param<int>(params, "steps", 21);
  const std::string format = output_format(params, "csv");
  const auto rows = fig2_rows(steps);
  auto report = fig2_report(rows);
  if (format == "csv") return with_report(".csv", fig2_csv(rows), std::move(report));
  json doc;
  doc["rows"] = json::array();
  for (const auto& row : rows)
    doc["rows"].push_back({{"p", row.p},
                           {"rank", row.rank},
                           {"W", row.witness},
                           {"W_variant_over_m", row.variant_over_m},
                           {"C", row.length},
                           {"purity", row.purity},
                           {"w_min", row.w_min}});
  doc["report"] = report.to_json();
  return with_report(".json", dump(doc), std::move(report));
}

CommandResult cmd_witness(const Params& params) {
  const std::string spec = required_string(params, "state");
  const State state = load_state(spec);
  const auto* psi = std::get_if<PureState>(&state);
  if (psi == nullptr) throw UsageError("the witness command needs a pure state");
  WitnessConfig config;
  config.parties = psi->party_count();
  config.shots = parse_shots(param<std::string>(params, "shots", "1000"));
  config.confidence = param<double>(params, "confidence", kDefaultConfidence);
  config.calibration_trials = param<std::size_t>(params, "calibration_trials", config.calibration_trials);
  const auto trials = param<std::size_t>(params, "trials", 100'000);
  const auto seed = param<std::uint64_t>(params, "seed", 1);
  const auto threads = param<unsigned>(params, "threads", 0);
  const std::string format = output_format(params, "json");
  const auto r = detection_probability(*psi, config, trials, seed, threads);
  json doc{{"state", spec},
           {"parties", r.parties},
           {"shots", r.shots.label()},
           {"confidence", r.confidence},
           {"probability", r.probability},
           {"standard_error", r.standard_error},
           {"delta", r.delta},
           {"bound", r.bound},
           {"trials", r.trials},
           {"exact_R", exact_random_correlations(*psi)}};
  return single(format == "csv" ? ".csv" : ".json", format == "csv" ? key_value_csv(doc) : dump(doc));
}

CommandResult cmd_roof(const Params& params) {
  const std::string spec = required_string(params, "state");
  const int restarts = param<int>(params, "restarts", 0);
  const auto seed = param<std::uint64_t>(params, "seed", 1);
  const std::string format = output_format(params, "json");
  const DensityMatrix rho = to_density(load_state(spec));
  const auto w = witness_rank_m(rho);
  json doc{{"state", spec}, {"rank", w.rank}, {"C", w.length}, {"purity", w.purity}, {"w_min", w.w_min}};
  ReproReport report;
  report.claim = "roof";
  if (w.rank == 2) {
    const auto exact = convex_roof_rank2(rho);
    doc["method"] = "rank-2 exact";
    doc["E_or_W"] = exact.value;
    doc["entangled_flag"] = exact.entangled;
    doc["witness_w_min_over_m2"] = w.value;
    report.check("closed form", exact.closed_form, exact.value, 1e-8, "derived");
    if (w.value > exact.value + 1e-8)
      report.diagnostics.push_back("w_min/m^2 witness exceeds the exact rank-2 value");
  } else {
    doc["method"] = w.rank == 1 ? "pure" : "witness";
    doc["E_or_W"] = w.value;
    doc["entangled_flag"] = w.entangled;
  }
  doc["variant_w_min_over_m"] = w.variant_over_m;
  if (restarts > 0) {
    OracleOptions options;
    options.restarts = restarts;
    options.seed = seed;
    const auto oracle = convex_roof_oracle(rho, options);
    doc["oracle_upper_bound"] = oracle.value;
    const double lower = doc["E_or_W"].get<double>();
    report.add({"oracle >= lower value", oracle.value, lower, 1e-6, "derived", oracle.value >= lower - 1e-6, ""});
  }
  doc["diagnostics"] = report.diagnostics;
  if (format == "csv") return single(".csv", key_value_csv(doc));
  CommandResult result = single(".json", dump(doc));
  result.report = std::move(report);
  return result;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"length", "table1",  "cluster", "counterexamples",
                                              "fig2",   "witness", "roof"};
  return names;
}

CommandResult run_command(std::string_view command, const Params& params) {
  if (!params.is_object()) throw UsageError("parameters must be a JSON object");
  if (command == "length") return cmd_length(params);
  if (command == "table1") return cmd_table1(params);
  if (command == "cluster") return cmd_cluster(params);
  if (command == "counterexamples") return cmd_counterexamples(params);
  if (command == "fig2") return cmd_fig2(params);
  if (command == "witness") return cmd_witness(params);
  if (command == "roof") return cmd_roof(params);
  throw UsageError("unknown command '" + std::string(command) + "'");
}

}  // namespace randcorr::app
