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

#include "randcorr/random_correlations.hpp"

#include <algorithm>
#include <cmath>

#include "randcorr/correlations.hpp"
#include "randcorr/parallel.hpp"

namespace randcorr {

namespace {

constexpr std::size_t kTrialsPerBlock = 4096;

// Independent sub-seeds for the calibration and detection stages.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t block_count(std::size_t trials) { return (trials + kTrialsPerBlock - 1) / kTrialsPerBlock; }

// Runs sample(rng) for every trial and returns per-trial values in trial order.
template <class Sample>
std::vector<double> run_trials(std::size_t trials, std::uint64_t seed, unsigned threads, Sample&& sample) {
  std::vector<double> values(trials);
  for_each_block(block_count(trials), threads, [&](std::size_t block) {
    Rng rng = make_stream(seed, block);
    const std::size_t end = std::min(trials, (block + 1) * kTrialsPerBlock);
    for (std::size_t t = block * kTrialsPerBlock; t < end; ++t) values[t] = sample(rng);
  });
  return values;
}

MonteCarloEstimate summarize(const std::vector<double>& values) {
  MonteCarloEstimate out;
  out.samples = values.size();
  require(!values.empty(), "need at least one Monte-Carlo sample");
  CompensatedSum sum;
  for (double v : values) sum.add(v);
  out.estimate = sum.value() / static_cast<double>(values.size());
  CompensatedSum sq;
  for (double v : values) sq.add((v - out.estimate) * (v - out.estimate));
  const double n = static_cast<double>(values.size());
  const double variance = values.size() > 1 ? sq.value() / (n - 1.0) : 0.0;
  out.standard_error = std::sqrt(variance / n);
  return out;
}

void check_initial_operator(const CMatrix& op, int d) {
  require(op.rows() == d && op.cols() == d, "initial operator does not match the local dimension");
  require(std::abs(op.trace()) <= 1e-8, "initial operator must be traceless");
  require(std::abs((op * op.adjoint()).trace() - Complex(d)) <= 1e-8,
          "initial operator must satisfy Tr(op op^dagger) = d");
}

std::vector<CMatrix> haar_conjugated(const CMatrix& lambda_dag, int parties, Rng& rng) {
  std::vector<CMatrix> ops;
  ops.reserve(static_cast<std::size_t>(parties));
  for (int n = 0; n < parties; ++n) {
    const CMatrix u = sample_haar_unitary(static_cast<int>(lambda_dag.rows()), rng);
    ops.push_back(u.adjoint() * lambda_dag * u);
  }
  return ops;
}

std::vector<Eigen::Vector3d> random_setting(int parties, Rng& rng) {
  std::vector<Eigen::Vector3d> dirs;
  dirs.reserve(static_cast<std::size_t>(parties));
  for (int n = 0; n < parties; ++n) dirs.push_back(sample_direction(rng));
  return dirs;
}

double product_state_correlation(std::span<const Eigen::Vector3d> setting) {
  // |0..0> has local Bloch vectors +z, so E factorizes into u_z components.
  double e = 1.0;
  for (const auto& u : setting) e *= u.z();
  return e;
}

double empirical_quantile(std::vector<double> values, double level) {
  std::sort(values.begin(), values.end());
  const auto n = static_cast<double>(values.size());
  auto index = static_cast<std::size_t>(std::ceil(level * n));
  index = std::clamp<std::size_t>(index, 1, values.size()) - 1;
  return values[index];
}

}  // namespace

Shots Shots::finite(std::uint64_t count) {
  require(count >= 1, "shot count must be positive");
  Shots s;
  s.count_ = count;
  return s;
}

std::uint64_t Shots::count() const {
  require(count_.has_value(), "infinite shot count has no integer value");
  return *count_;
}

std::string Shots::label() const { return count_ ? std::to_string(*count_) : "inf"; }

double exact_random_correlations(const PureState& psi) {
  const int d = psi.shape().uniform_dim();
  require(d != 0, "random correlations need a uniform local dimension");
  return length_of_correlations(psi) / std::pow(static_cast<double>(d * d - 1), psi.party_count());
}

MonteCarloEstimate mc_random_correlations(const DensityMatrix& rho, std::size_t samples,
                                          const CMatrix& initial_operator, std::uint64_t seed,
                                          unsigned threads) {
  const int d = rho.shape().uniform_dim();
  require(d != 0, "Monte-Carlo random correlations need a uniform local dimension");
  check_initial_operator(initial_operator, d);
  const CMatrix lambda_dag = initial_operator.adjoint();
  return summarize(run_trials(samples, seed, threads, [&](Rng& rng) {
    const auto ops = haar_conjugated(lambda_dag, rho.party_count(), rng);
    return std::norm(product_expectation(rho, ops));
  }));
}

MonteCarloEstimate mc_random_correlations(const PureState& psi, std::size_t samples,
                                          const CMatrix& initial_operator, std::uint64_t seed,
                                          unsigned threads) {
  const int d = psi.shape().uniform_dim();
  require(d != 0, "Monte-Carlo random correlations need a uniform local dimension");
  check_initial_operator(initial_operator, d);
  const CMatrix lambda_dag = initial_operator.adjoint();
  return summarize(run_trials(samples, seed, threads, [&](Rng& rng) {
    const auto ops = haar_conjugated(lambda_dag, psi.party_count(), rng);
    return std::norm(product_expectation(psi, ops));
  }));
}

MonteCarloEstimate mc_random_correlations_sphere(const PureState& psi, std::size_t samples,
                                                 std::uint64_t seed, unsigned threads) {
  require(psi.shape().uniform_dim() == 2, "sphere sampling applies to qubits");
  return summarize(run_trials(samples, seed, threads, [&](Rng& rng) {
    const auto dirs = random_setting(psi.party_count(), rng);
    const double e = correlation_function(psi, dirs);
    return e * e;
  }));
}

double sample_outcome_mean(double correlation, Shots shots, Rng& rng) {
  require(std::abs(correlation) <= 1.0 + 1e-9, "correlation function outside [-1, 1]");
  const double e = std::clamp(correlation, -1.0, 1.0);
  if (shots.is_infinite()) return e;
  const std::uint64_t k = shots.count();
  std::binomial_distribution<std::uint64_t> plus(k, 0.5 * (1.0 + e));
  const auto count = static_cast<double>(plus(rng));
  return (2.0 * count - static_cast<double>(k)) / static_cast<double>(k);
}

double simulate_shot_estimate(const DensityMatrix& rho, std::span<const Eigen::Vector3d> setting,
                              Shots shots, Rng& rng) {
  return sample_outcome_mean(correlation_function(rho, setting), shots, rng);
}

double simulate_shot_estimate(const PureState& psi, std::span<const Eigen::Vector3d> setting,
                              Shots shots, Rng& rng) {
  return sample_outcome_mean(correlation_function(psi, setting), shots, rng);
}

DeltaCalibration calibrate_delta(int parties, Shots shots, double confidence, std::size_t trials,
                                 std::uint64_t seed, unsigned threads) {
  require(parties >= 1, "party count must be positive");
  require(confidence > 0.0 && confidence < 1.0, "confidence must lie in (0, 1)");
  require(static_cast<double>(trials) >= 100.0 / (1.0 - confidence),
          "too few calibration trials to resolve the requested quantile");
  const auto values = run_trials(trials, seed, threads, [&](Rng& rng) {
    const auto setting = random_setting(parties, rng);
    const double e = sample_outcome_mean(product_state_correlation(setting), shots, rng);
    return e * e;
  });
  DeltaCalibration out;
  out.trials = trials;
  out.quantile = empirical_quantile(values, confidence);
  const double product_value = std::pow(3.0, -parties);
  out.delta = std::max(0.0, out.quantile - product_value);
  out.bound = product_value + out.delta;
  return out;
}

WitnessReport detection_probability(const PureState& psi, const WitnessConfig& config, std::size_t trials,
                                    std::uint64_t seed, unsigned threads) {
  require(config.settings_per_party == 1, "only single-setting witnesses are supported");
  require(psi.shape().uniform_dim() == 2, "the single-setting witness applies to qubits");
  require(config.parties == psi.party_count(), "witness configuration does not match the state");
  require(trials >= 1, "need at least one trial");
  const DeltaCalibration cal = calibrate_delta(config.parties, config.shots, config.confidence,
                                               config.calibration_trials, derive_seed(seed, 1), threads);
  const auto hits = run_trials(trials, derive_seed(seed, 2), threads, [&](Rng& rng) {
    const auto setting = random_setting(config.parties, rng);
    const double e = simulate_shot_estimate(psi, setting, config.shots, rng);
    return e * e > cal.bound ? 1.0 : 0.0;
  });
  WitnessReport r;
  r.parties = config.parties;
  r.shots = config.shots;
  r.confidence = config.confidence;
  r.delta = cal.delta;
  r.bound = cal.bound;
  r.trials = trials;
  double count = 0.0;
  for (double h : hits) count += h;
  r.probability = count / static_cast<double>(trials);
  r.standard_error = std::sqrt(r.probability * (1.0 - r.probability) / static_cast<double>(trials));
  return r;
}

WitnessReport product_state_false_alarm(const WitnessConfig& config, std::size_t trials, std::uint64_t seed,
                                        unsigned threads) {
  std::vector<PureState> zeros(static_cast<std::size_t>(config.parties),
                               PureState(SystemShape({2}), CVector::Unit(2, 0)));
  return detection_probability(tensor_product(zeros), config, trials, seed, threads);
}

}  // namespace randcorr
