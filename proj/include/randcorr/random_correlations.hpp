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
#include <span>
#include <string>
#include <vector>

#include "randcorr/random.hpp"
#include "randcorr/statekit.hpp"

namespace randcorr {

/// Number of repetitions behind one correlation-function estimate; the
/// infinite case returns the exact correlation function.
class Shots {
 public:
  static Shots finite(std::uint64_t count);
  static Shots infinite() { return Shots(); }

  bool is_infinite() const { return !count_.has_value(); }
  std::uint64_t count() const;
  std::string label() const;

  bool operator==(const Shots& other) const = default;

 private:
  Shots() = default;
  std::optional<std::uint64_t> count_;
};

struct MonteCarloEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::size_t samples = 0;
};

/// R = C / (d^2-1)^N for pure states of uniform local dimension d.
double exact_random_correlations(const PureState& psi);

/// Mean of |Tr(rho ⊗_n U_n^† λ^† U_n)|^2 over independent Haar U_n, with
/// λ = initial_operator (traceless, Tr(λ λ^†) = d). Uniform local dimension.
MonteCarloEstimate mc_random_correlations(const DensityMatrix& rho, std::size_t samples,
                                          const CMatrix& initial_operator, std::uint64_t seed,
                                          unsigned threads = 0);
MonteCarloEstimate mc_random_correlations(const PureState& psi, std::size_t samples,
                                          const CMatrix& initial_operator, std::uint64_t seed,
                                          unsigned threads = 0);
/// Qubit variant: mean of E(u_1..u_N)^2 over uniform unit directions.
MonteCarloEstimate mc_random_correlations_sphere(const PureState& psi, std::size_t samples,
                                                 std::uint64_t seed, unsigned threads = 0);

/// Mean of K product outcomes ±1 with P(+1) = (1+E)/2; exact E for K = ∞.
double sample_outcome_mean(double correlation, Shots shots, Rng& rng);

/// Finite-shot estimate of the correlation function for one setting.
double simulate_shot_estimate(const DensityMatrix& rho, std::span<const Eigen::Vector3d> setting,
                              Shots shots, Rng& rng);
double simulate_shot_estimate(const PureState& psi, std::span<const Eigen::Vector3d> setting,
                              Shots shots, Rng& rng);

inline constexpr double kDefaultConfidence = 0.954;

struct WitnessConfig {
  int parties = 0;
  Shots shots = Shots::infinite();
  /// Settings drawn per party; only single-setting witnesses are supported.
  int settings_per_party = 1;
  double confidence = kDefaultConfidence;
  std::size_t calibration_trials = 1'000'000;
};

struct DeltaCalibration {
  double delta = 0.0;
  /// Confidence quantile of the product-state R_K distribution.
  double quantile = 0.0;
  /// 1/3^N + delta.
  double bound = 0.0;
  std::size_t trials = 0;
};

/// Calibrates δ on |0..0> under uniform random settings: δ is the
/// confidence-quantile of R_K = E_K^2 minus 1/3^N, floored at zero.
DeltaCalibration calibrate_delta(int parties, Shots shots, double confidence, std::size_t trials,
                                 std::uint64_t seed, unsigned threads = 0);

struct WitnessReport {
  int parties = 0;
  Shots shots = Shots::infinite();
  double confidence = kDefaultConfidence;
  double probability = 0.0;
  double standard_error = 0.0;
  double delta = 0.0;
  double bound = 0.0;
  std::size_t trials = 0;
};

/// Fraction of single-setting trials whose R_K exceeds 1/3^N + δ.
WitnessReport detection_probability(const PureState& psi, const WitnessConfig& config, std::size_t trials,
                                    std::uint64_t seed, unsigned threads = 0);

/// Detection probability of the calibration product state |0..0> itself.
WitnessReport product_state_false_alarm(const WitnessConfig& config, std::size_t trials, std::uint64_t seed,
                                        unsigned threads = 0);

}  // namespace randcorr
