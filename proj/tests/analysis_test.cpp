// Copyright 2026 The knapqubo Authors.
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

#include "knapqubo/analysis.hpp"

#include <gtest/gtest.h>

#include "knapqubo/errors.hpp"
#include "knapqubo/rng.hpp"
#include "oracles.hpp"

namespace knapqubo {
namespace {

using testing::EnumerateKnapsack;

Bits RandomVector(Rng& rng, std::size_t n) {
  Bits z(n);
  for (auto& bit : z) bit = static_cast<std::uint8_t>(rng.UniformInt(0, 1));
  return z;
}

Bits Complement(Bits z) {
  for (auto& bit : z) bit ^= 1U;
  return z;
}

SweepSettings FastSettings() {
  SweepSettings settings;
  settings.q.schedule.sweeps = 100;
  settings.s.schedule.sweeps = 100;
  settings.trials = 3;
  settings.reads = 20;
  return settings;
}

TEST(Hamming, Examples) {
  const Bits a = {1, 0, 1, 0};
  EXPECT_EQ(Hamming(a, a), 0.0);
  EXPECT_EQ(Hamming(a, Complement(a)), 1.0);
  EXPECT_EQ(Hamming(a, Bits{1, 1, 1, 1}), 0.5);
  EXPECT_THROW(Hamming(a, Bits{1, 0}), ValidationError);
  EXPECT_THROW(Hamming(Bits{}, Bits{}), ValidationError);
}

TEST(Hamming, MetricAxioms) {
  Rng rng(64);
  for (int trial = 0; trial < 10000; ++trial) {
    const Bits a = RandomVector(rng, 64);
    const Bits b = RandomVector(rng, 64);
    const Bits c = RandomVector(rng, 64);
    const double ab = Hamming(a, b);
    ASSERT_EQ(ab == 0.0, a == b);
    ASSERT_EQ(ab, Hamming(b, a));
    ASSERT_LE(Hamming(a, c), ab + Hamming(b, c) + 1e-15);
    ASSERT_EQ(ab, Hamming(Complement(a), Complement(b)));
    ASSERT_GE(ab, 0.0);
    ASSERT_LE(ab, 1.0);
  }
}

TEST(Hamming, UncorrelatedMeanIsOneHalf) {
  Rng rng(65);
  double sum = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    sum += Hamming(RandomVector(rng, 64), RandomVector(rng, 64));
  }
  const double mean = sum / 10000.0;
  EXPECT_GE(mean, 0.48);
  EXPECT_LE(mean, 0.52);
}

TEST(CorrectVector, BruteForceAndLiftedDp) {
  const QuboProblem two = Encode({"two", {1, 2}, {3, 1}, 2}, {10, 1});
  EXPECT_EQ(CorrectVector(two), (Bits{1, 0, 1, 0}));

  const KnapsackInstance d = CatalogInstances(1)[3];
  const QuboProblem qubo = Encode(d, PenaltyRegime(d, 1, 2));
  const Bits c = CorrectVector(qubo);
  const DecodedSample decoded = Decode(qubo, c);
  EXPECT_TRUE(decoded.slack_valid);
  EXPECT_TRUE(decoded.weight_consistent);
  EXPECT_EQ(decoded.knapsack.total_value, EnumerateKnapsack(d).value);
  EXPECT_EQ(decoded.energy, -SolveDp(d).total_value);
}

TEST(CompareSolutions, TrialProtocol) {
  const KnapsackInstance a = CatalogInstances(1).front();
  const QuboProblem qubo = Encode(a, PenaltyRegime(a, 1, 2));
  ComparisonConfig config = ComparisonConfig::FromSeed(3);
  const ComparisonReport report = CompareSolutions(qubo, CorrectVector(qubo), config);
  EXPECT_EQ(report.trials, 10U);
  EXPECT_EQ(report.reads_per_trial, 100U);
  EXPECT_EQ(report.binary_variables, 15U);
  EXPECT_EQ(report.instance_id, "A");
  for (double d : {report.d_cq, report.d_cs, report.d_sq}) {
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, 1.0);
  }
  EXPECT_GE(report.best_energy, BruteForceQubo(qubo).energy);

  config.trials = 0;
  EXPECT_THROW(CompareSolutions(qubo, CorrectVector(qubo), config), ValidationError);
  config.trials = 1;
  EXPECT_THROW(CompareSolutions(qubo, Bits{1}, config), ValidationError);
}

TEST(CompareSolutions, IdenticalSamplersAgree) {
  const KnapsackInstance b = CatalogInstances(2)[1];
  const QuboProblem qubo = Encode(b, PenaltyRegime(b, 1, 1));
  ComparisonConfig config;
  config.q.schedule.sweeps = 50;
  config.s.schedule.sweeps = 50;
  config.q_seed = config.s_seed = 77;
  config.trials = 4;
  config.reads_per_trial = 10;
  const ComparisonReport report = CompareSolutions(qubo, CorrectVector(qubo), config);
  EXPECT_EQ(report.d_sq, 0.0);
  EXPECT_EQ(report.d_cq, report.d_cs);
}

TEST(CompareSolutions, RandomSingleReadIsUncorrelated) {
  KnapsackInstance wide{"wide", {7}, {1}, 63};
  const QuboProblem qubo = Encode(wide, {2, 1});
  ASSERT_EQ(qubo.dimension(), 64U);
  ComparisonConfig config = ComparisonConfig::FromSeed(8);
  config.q.kind = SamplerKind::kRandom;
  config.s.kind = SamplerKind::kRandom;
  config.trials = 2000;
  config.reads_per_trial = 1;
  const ComparisonReport report = CompareSolutions(qubo, CorrectVector(qubo), config);
  EXPECT_NEAR(report.d_cq, 0.5, 0.05);
  EXPECT_NEAR(report.d_sq, 0.5, 0.05);
}

TEST(ComputeDegeneracy, Cases) {
  const QuboProblem two = Encode({"two", {1, 2}, {3, 1}, 2}, {10, 1});
  const std::vector<Bits> same(100, Bits{1, 0, 1, 0});
  DegeneracyStats stats = ComputeDegeneracy(Aggregate(two, same, "m", 0, ""));
  EXPECT_EQ(stats.num_reads, 100U);
  EXPECT_EQ(stats.unique_solutions, 1U);
  EXPECT_EQ(stats.min_energy_multiplicity, 1U);

  const QuboProblem flat(6, std::vector<std::int64_t>(36, 0),
                         std::vector<std::int64_t>(6, 0), 0);
  stats = ComputeDegeneracy(RandomSample(flat, 100, 4));
  EXPECT_EQ(stats.min_energy_multiplicity, stats.unique_solutions);
  EXPECT_GT(stats.unique_solutions, 1U);

  const KnapsackInstance b = CatalogInstances(1)[1];
  stats = ComputeDegeneracy(SimulatedAnneal(Encode(b, PenaltyRegime(b, 1, 2)), {}, 100, 1));
  EXPECT_LE(stats.unique_solutions, 100U);
  EXPECT_GE(stats.min_energy_multiplicity, 1U);
  EXPECT_THROW(ComputeDegeneracy(SampleSet{}), ValidationError);
}

TEST(PenaltySweep, NineRowsInOrder) {
  const KnapsackInstance a = CatalogInstances(1).front();
  const std::vector<std::int64_t> bs = {100, 1, 10};
  const auto rows = PenaltySweep(a, bs, FastSettings());
  ASSERT_EQ(rows.size(), 9U);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0) {
      EXPECT_TRUE(rows[r - 1].b < rows[r].b ||
                  (rows[r - 1].b == rows[r].b && rows[r - 1].a < rows[r].a));
    }
    for (double d : {rows[r].d_cq, rows[r].d_cs, rows[r].d_sq}) {
      EXPECT_GE(d, 0.0);
      EXPECT_LE(d, 1.0);
    }
  }
  EXPECT_EQ(rows.front().b, 1);
  EXPECT_EQ(rows.back().b, 100);
  EXPECT_EQ(PenaltySweepCsv(rows).rfind("A,B,d_cq,d_cs,d_sq,best_energy\n", 0), 0U);
  const auto again = PenaltySweep(a, bs, FastSettings());
  EXPECT_EQ(PenaltySweepCsv(again), PenaltySweepCsv(rows));
}

TEST(PenaltySweep, GroundSolutionIndependentOfPenalties) {
  Rng rng(90);
  for (int trial = 0; trial < 6; ++trial) {
    KnapsackInstance instance = testing::RandomSmallInstance(rng, 12);
    instance.weights[0] = 1;
    const Bits expected = SolveDp(instance).selection;
    for (std::int64_t b : {1, 10, 100}) {
      for (const PenaltyConstants& p : PenaltyRegimes(instance, b)) {
        const QuboProblem qubo = Encode(instance, p);
        const GroundStates ground = BruteForceQubo(qubo);
        EXPECT_EQ(ground.energy, -b * SolveDp(instance).total_value);
        const Bits first(ground.states.front().begin(),
                         ground.states.front().begin() +
                             static_cast<std::ptrdiff_t>(instance.num_items()));
        EXPECT_EQ(Decode(qubo, ground.states.front()).knapsack.total_value,
                  SolveDp(instance).total_value);
        EXPECT_EQ(first, expected);
      }
    }
  }
}

TEST(ReadsSweep, NestedSeedsGiveMonotoneBestEnergy) {
  const KnapsackInstance a = CatalogInstances(4).front();
  SweepSettings settings = FastSettings();
  settings.q.schedule.sweeps = 20;
  const std::vector<std::size_t> counts(std::begin(kDefaultReadCounts),
                                        std::end(kDefaultReadCounts));
  const auto rows = ReadsSweep(a, counts, settings);
  ASSERT_EQ(rows.size(), 4U);
  const std::int64_t ground =
      BruteForceQubo(Encode(a, PenaltyRegime(a, settings.b, settings.regime))).energy;
  for (std::size_t r = 0; r < 4; ++r) {
    EXPECT_EQ(rows[r].reads, counts[r]);
    EXPECT_GE(rows[r].best_energy, ground);
    EXPECT_EQ(rows[r].hit_ground, rows[r].best_energy == ground);
    if (r > 0) EXPECT_LE(rows[r].best_energy, rows[r - 1].best_energy);
  }
  EXPECT_EQ(ReadsSweepCsv(rows).rfind("reads,best_energy,hit_ground,d_cq\n", 0), 0U);
}

TEST(ReadsSweep, GenerousSweepsHitGround) {
  const KnapsackInstance tiny{"tiny", {2, 3, 1}, {5, 4, 2}, 4};
  SweepSettings settings;
  settings.trials = 2;
  const std::vector<std::size_t> counts = {100};
  const auto rows = ReadsSweep(tiny, counts, settings);
  EXPECT_TRUE(rows[0].hit_ground);
  EXPECT_EQ(rows[0].d_cq, 0.0);
}

TEST(SizeSweep, CatalogShapes) {
  const auto catalog = CatalogInstances(1);
  std::vector<KnapsackInstance> shuffled = {catalog[2], catalog[0], catalog[3], catalog[1]};
  const auto rows = SizeSweep(shuffled, FastSettings());
  ASSERT_EQ(rows.size(), 4U);
  const std::vector<std::size_t> sizes = {15, 24, 31, 57};
  for (std::size_t r = 0; r < 4; ++r) {
    EXPECT_EQ(rows[r].binary_variables, sizes[r]);
    for (double d : {rows[r].d_cq, rows[r].d_cs, rows[r].d_sq}) {
      EXPECT_GE(d, 0.0);
      EXPECT_LE(d, 1.0);
    }
  }
  EXPECT_EQ(rows[0].instance_id, "A");
  const std::span<const KnapsackInstance> one(catalog.data(), 1);
  EXPECT_EQ(SizeSweep(one, FastSettings()).size(), 1U);
  EXPECT_EQ(SizeSweepCsv(rows).rfind("instance_id,binary_variables,d_cq,d_cs,d_sq\n", 0),
            0U);
}

}  // namespace
}  // namespace knapqubo
