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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "randcorr/correlations.hpp"
#include "randcorr/named_states.hpp"
#include "randcorr/opbasis.hpp"
#include "randcorr/random_correlations.hpp"

namespace randcorr {
namespace {

TEST(Shots, Labels) {
  EXPECT_TRUE(Shots::infinite().is_infinite());
  EXPECT_EQ(Shots::finite(1000).count(), 1000u);
  EXPECT_EQ(Shots::finite(1000).label(), "1000");
  EXPECT_EQ(Shots::infinite().label(), "inf");
  EXPECT_THROW(Shots::finite(0), Error);
  EXPECT_THROW(Shots::infinite().count(), Error);
}

TEST(ExactR, Examples) {
  EXPECT_NEAR(exact_random_correlations(ghz_state(6)), 33.0 / 729.0, 1e-12);
  EXPECT_NEAR(exact_random_correlations(ghz_state(5)), 16.0 / 243.0, 1e-12);
  for (int n = 1; n <= 6; ++n)
    EXPECT_NEAR(exact_random_correlations(product_state(std::vector<int>(static_cast<std::size_t>(n), 0))),
                std::pow(3.0, -n), 1e-14);
  EXPECT_NEAR(exact_random_correlations(ghz_state(2, 3)), length_of_correlations(ghz_state(2, 3)) / 64.0, 1e-14);
}

void expect_within(const MonteCarloEstimate& mc, double exact, double sigmas = 3.0) {
  EXPECT_GT(mc.standard_error, 0.0);
  EXPECT_LE(std::abs(mc.estimate - exact), sigmas * mc.standard_error)
      << "estimate " << mc.estimate << " exact " << exact << " se " << mc.standard_error;
}

TEST(MonteCarloR, SingletAndProduct) {
  expect_within(mc_random_correlations(singlet(), 20000, pauli_z(), 1), 1.0 / 3.0);
  expect_within(mc_random_correlations(product_state({0, 0}), 20000, pauli_z(), 2), 1.0 / 9.0);
  expect_within(mc_random_correlations_sphere(singlet(), 20000, 3), 1.0 / 3.0);
}

TEST(MonteCarloR, InitialOperatorIndependence) {
  const CMatrix tilted = (pauli_x() + pauli_z()) / std::sqrt(2.0);
  const auto a = mc_random_correlations(ghz_state(3), 20000, pauli_z(), 4);
  const auto b = mc_random_correlations(ghz_state(3), 20000, tilted, 5);
  const double combined = std::hypot(a.standard_error, b.standard_error);
  EXPECT_LE(std::abs(a.estimate - b.estimate), 3.0 * combined);
  expect_within(a, 4.0 / 27.0);
}

TEST(MonteCarloR, QutritHaar) {
  Rng rng = make_stream(51, 0);
  const PureState psi = random_pure_state(SystemShape::uniform(2, 3), rng);
  const CMatrix lambda = gell_mann_basis(3).elements[7];
  expect_within(mc_random_correlations(psi, 20000, lambda, 6), exact_random_correlations(psi));
  const CMatrix weyl = weyl_heisenberg_basis(3).elements[0];
  expect_within(mc_random_correlations(DensityMatrix::from_pure(psi), 20000, weyl, 7),
                exact_random_correlations(psi));
}

TEST(MonteCarloR, RejectsInvalidOperator) {
  EXPECT_THROW(mc_random_correlations(singlet(), 10, CMatrix::Identity(2, 2), 1), Error);
  EXPECT_THROW(mc_random_correlations(singlet(), 10, 2.0 * pauli_z(), 1), Error);
  EXPECT_THROW(mc_random_correlations(singlet(), 10, gell_mann_basis(3).elements[0], 1), Error);
  EXPECT_THROW(mc_random_correlations(singlet(), 0, pauli_z(), 1), Error);
}

TEST(MonteCarloR, ThreadIndependent) {
  const auto one = mc_random_correlations(ghz_state(4), 10000, pauli_z(), 8, 1);
  const auto three = mc_random_correlations(ghz_state(4), 10000, pauli_z(), 8, 3);
  EXPECT_EQ(one.estimate, three.estimate);
  EXPECT_EQ(one.standard_error, three.standard_error);
}

TEST(ShotEstimate, DeterministicCases) {
  Rng rng = make_stream(52, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Vector3d u = sample_direction(rng);
    const std::vector<Eigen::Vector3d> same{u, u};
    EXPECT_EQ(simulate_shot_estimate(singlet(), same, Shots::finite(1 + trial * 37), rng), -1.0);
  }
  const std::vector<Eigen::Vector3d> zz{Eigen::Vector3d::UnitZ(), Eigen::Vector3d::UnitZ()};
  EXPECT_EQ(simulate_shot_estimate(product_state({0, 0}), zz, Shots::finite(1000), rng), 1.0);
  const std::vector<Eigen::Vector3d> xz{Eigen::Vector3d::UnitX(), Eigen::Vector3d::UnitZ()};
  EXPECT_NEAR(simulate_shot_estimate(DensityMatrix::from_pure(product_state({0, 0})), xz, Shots::infinite(), rng),
              0.0, 1e-15);
  EXPECT_THROW(sample_outcome_mean(1.1, Shots::finite(10), rng), Error);
}

TEST(ShotEstimate, UnbiasedWithBinomialVariance) {
  Rng rng = make_stream(53, 0);
  const double e = 0.3;
  const int k = 50;
  const int n = 20000;
  double sum = 0.0;
  double sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = sample_outcome_mean(e, Shots::finite(k), rng);
    sum += x;
    sq += x * x;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  EXPECT_NEAR(mean, e, 3.0 * std::sqrt((1 - e * e) / k / n));
  EXPECT_NEAR(var, (1 - e * e) / k, 0.05 * (1 - e * e) / k);
}

// Independent oracle: u_z of a uniform direction is uniform on [-1, 1].
TEST(Calibration, ThreeQubitInfiniteShotsMatchesCosineOracle) {
  const double conf = kDefaultConfidence;
  const auto cal = calibrate_delta(3, Shots::infinite(), conf, 200000, 99);
  std::mt19937 oracle_rng(12345);
  std::uniform_real_distribution<double> cosine(-1.0, 1.0);
  const int n = 200000;
  std::vector<double> r(n);
  for (double& x : r) {
    const double e = cosine(oracle_rng) * cosine(oracle_rng) * cosine(oracle_rng);
    x = e * e;
  }
  std::sort(r.begin(), r.end());
  const double oracle_quantile = r[static_cast<std::size_t>(std::ceil(conf * n)) - 1];
  EXPECT_NEAR(cal.delta, oracle_quantile - 1.0 / 27.0, 0.01);
  EXPECT_NEAR(cal.bound, 1.0 / 27.0 + cal.delta, 1e-15);
  const double cdf = static_cast<double>(std::upper_bound(r.begin(), r.end(), cal.quantile) - r.begin()) / n;
  EXPECT_NEAR(cdf, conf, 0.003);
}

TEST(Calibration, SixQubitThousandShotsBound) {
  const auto cal = calibrate_delta(6, Shots::finite(1000), kDefaultConfidence, 200000, 7);
  EXPECT_NEAR(cal.bound, 0.01, 0.003);
  EXPECT_GE(cal.delta, 0.0);
}

TEST(Calibration, MonotoneInConfidence) {
  double last = -1.0;
  for (double conf : {0.5, 0.8, 0.9, 0.954, 0.99}) {
    const auto cal = calibrate_delta(4, Shots::infinite(), conf, 100000, 3);
    EXPECT_GE(cal.quantile, last);
    last = cal.quantile;
  }
}

TEST(Calibration, Errors) {
  EXPECT_THROW(calibrate_delta(3, Shots::infinite(), 0.954, 1000, 1), Error);
  EXPECT_THROW(calibrate_delta(3, Shots::infinite(), 1.0, 100000, 1), Error);
  EXPECT_THROW(calibrate_delta(3, Shots::infinite(), 0.0, 100000, 1), Error);
  EXPECT_THROW(calibrate_delta(0, Shots::infinite(), 0.5, 100000, 1), Error);
}

WitnessConfig config_for(int n, Shots shots) {
  WitnessConfig config;
  config.parties = n;
  config.shots = shots;
  config.calibration_trials = 100000;
  return config;
}

TEST(Detection, TableSpotChecks) {
  const auto small = detection_probability(ghz_state(3), config_for(3, Shots::finite(1000)), 20000, 11);
  EXPECT_NEAR(small.probability, 0.26, 0.04);
  const auto six_inf = detection_probability(ghz_state(6), config_for(6, Shots::infinite()), 20000, 12);
  EXPECT_NEAR(six_inf.probability, 0.63, 0.04);
  const auto six_k = detection_probability(ghz_state(6), config_for(6, Shots::finite(1000)), 20000, 13);
  EXPECT_NEAR(six_k.probability, 0.57, 0.04);
  EXPECT_LT(six_k.probability, six_inf.probability);
  for (const auto& r : {small, six_inf, six_k}) {
    EXPECT_GE(r.probability, 0.0);
    EXPECT_LE(r.probability, 1.0);
    EXPECT_GE(r.standard_error, 0.0);
  }
}

TEST(Detection, ProductStateFalseAlarmBounded) {
  for (int n : {3, 5}) {
    const auto config = config_for(n, Shots::finite(1000));
    const auto report = product_state_false_alarm(config, 20000, 21);
    EXPECT_LE(report.probability, (1.0 - config.confidence) + 3.0 * report.standard_error + 1e-12);
  }
}

TEST(Detection, DeterministicAcrossThreadCounts) {
  const auto config = config_for(4, Shots::finite(500));
  const auto a = detection_probability(ghz_state(4), config, 9000, 31, 1);
  const auto b = detection_probability(ghz_state(4), config, 9000, 31, 3);
  const auto c = detection_probability(ghz_state(4), config, 9000, 31, 1);
  EXPECT_EQ(a.probability, b.probability);
  EXPECT_EQ(a.bound, b.bound);
  EXPECT_EQ(a.probability, c.probability);
}

TEST(Detection, RejectsUnsupportedConfigs) {
  auto config = config_for(3, Shots::infinite());
  config.settings_per_party = 2;
  EXPECT_THROW(detection_probability(ghz_state(3), config, 1000, 1), Error);
  EXPECT_THROW(detection_probability(ghz_state(4), config_for(3, Shots::infinite()), 1000, 1), Error);
}

}  // namespace
}  // namespace randcorr
