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
#include <optional>
#include <vector>

#include "randcorr/app/commands.hpp"
#include "randcorr/random_correlations.hpp"

namespace randcorr::app {

struct Table1Options {
  std::vector<int> parties{3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<Shots> shots{Shots::finite(1000), Shots::infinite()};
  std::size_t trials = 100'000;
  std::size_t calibration_trials = 1'000'000;
  double confidence = kDefaultConfidence;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

struct Table1Cell {
  int parties = 0;
  Shots shots = Shots::infinite();
  WitnessReport report;
};

/// Detection probabilities for GHZ states over the parties x shots grid.
/// Each cell has its own seed derived from (seed, cell index).
std::vector<Table1Cell> compute_table1(const Table1Options& options);
/// Published detection probability (as a fraction) for K = 1000 or K = ∞.
std::optional<double> published_table1(int parties, const Shots& shots);
inline constexpr double kTable1Tolerance = 0.04;
ReproReport table1_report(const std::vector<Table1Cell>& cells, double tolerance = kTable1Tolerance);
/// Rows = shot regimes, columns = party counts.
std::string table1_csv(const std::vector<Table1Cell>& cells);

struct ClusterRow {
  int side = 0;
  int qubits = 0;
  std::uint64_t length = 0;
  std::optional<double> dense_length;
  std::uint64_t ghz_length = 0;
  double product_length = 1.0;
  double seconds = 0.0;
};

inline constexpr int kMaxClusterSide = 5;
inline constexpr int kMaxDenseClusterSide = 3;

/// n x n clusters for n = 2..max_side via the stabilizer count; dense
/// verification for n <= 3 when `verify` is set.
std::vector<ClusterRow> cluster_rows(int max_side, bool verify);
ReproReport cluster_report(const std::vector<ClusterRow>& rows);
std::string cluster_csv(const std::vector<ClusterRow>& rows);

ReproReport counterexample_report();

struct Fig2Row {
  double p = 0.0;
  int rank = 0;
  double witness = 0.0;
  double variant_over_m = 0.0;
  double length = 0.0;
  double purity = 0.0;
  double w_min = 0.0;
};

std::vector<Fig2Row> fig2_rows(int steps);
ReproReport fig2_report(const std::vector<Fig2Row>& rows);
std::string fig2_csv(const std::vector<Fig2Row>& rows);

}  // namespace randcorr::app
