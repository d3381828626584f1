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

#include "knapqubo/samplers.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "knapqubo/errors.hpp"
#include "knapqubo/rng.hpp"
#include "oracles.hpp"

namespace knapqubo {
namespace {

using testing::AllVectors;
using testing::RandomSmallInstance;

QuboProblem TwoItemQubo() { return Encode({"two", {1, 2}, {3, 1}, 2}, {10, 1}); }

QuboProblem ConstantQubo(std::size_t n, std::int64_t c) {
  return QuboProblem(n, std::vector<std::int64_t>(n * n, 0),
                     std::vector<std::int64_t>(n, 0), c);
}

void ExpectWellFormed(const QuboProblem& qubo, const SampleSet& set,
                      std::size_t reads) {
  ASSERT_FALSE(set.records.empty());
  EXPECT_EQ(set.num_reads, reads);
  std::size_t total = 0;
  std::map<Bits, int> seen;
  for (std::size_t r = 0; r < set.records.size(); ++r) {
    const SampleRecord& record = set.records[r];
    EXPECT_EQ(record.energy, Energy(qubo, record.z));
    EXPECT_GE(record.count, 1U);
    EXPECT_EQ(++seen[record.z], 1);
    total += record.count;
    if (r > 0) {
      const SampleRecord& prev = set.records[r - 1];
      EXPECT_TRUE(prev.energy < record.energy ||
                  (prev.energy == record.energy && prev.z < record.z));
    }
  }
  EXPECT_EQ(total, reads);
  EXPECT_EQ(set.best().energy, set.records.front().energy);
}

TEST(AnnealSchedule, Validation) {
  AnnealSchedule s;
  EXPECT_NO_THROW(Validate(s));
  s.sweeps = 0;
  EXPECT_THROW(Validate(s), ValidationError);
  s.sweeps = 1;
  s.beta_initial = s.beta_final = 2.0;
  EXPECT_THROW(Validate(s), ValidationError);
  s.interpolation = BetaInterpolation::kLinear;
  EXPECT_NO_THROW(Validate(s));
  s.beta_initial = 3.0;
  EXPECT_THROW(Validate(s), ValidationError);
  s.beta_initial = -1.0;
  EXPECT_THROW(Validate(s), ValidationError);
}

TEST(AnnealSchedule, BetaEndpointsAndShape) {
  AnnealSchedule s;
  EXPECT_DOUBLE_EQ(BetaAt(s, 0), 0.01);
  EXPECT_NEAR(BetaAt(s, 999), 10.0, 1e-12);
  EXPECT_NEAR(BetaAt(s, 333) / BetaAt(s, 0), BetaAt(s, 666) / BetaAt(s, 333), 1e-9);
  s.interpolation = BetaInterpolation::kLinear;
  s.sweeps = 11;
  s.beta_initial = 1.0;
  s.beta_final = 2.0;
  EXPECT_DOUBLE_EQ(BetaAt(s, 5), 1.5);
}

TEST(SimulatedAnneal, FindsTwoItemGround) {
  const QuboProblem qubo = TwoItemQubo();
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SampleSet set = SimulatedAnneal(qubo, {}, 100, seed);
    if (set.best().energy == -3) {
      ++hits;
      EXPECT_EQ(Decode(qubo, set.best().z).knapsack.total_value, 3);
    }
  }
  EXPECT_GE(hits, 99);
}

TEST(SimulatedAnneal, DeterministicAndWellFormed) {
  const QuboProblem qubo = TwoItemQubo();
  const SampleSet a = SimulatedAnneal(qubo, {}, 50, 99);
  EXPECT_EQ(a, SimulatedAnneal(qubo, {}, 50, 99));
  EXPECT_EQ(ExportSampleSet(a), ExportSampleSet(SimulatedAnneal(qubo, {}, 50, 99)));
  EXPECT_EQ(a.sampler_id, "sa");
  EXPECT_EQ(a.seed, 99U);
  ExpectWellFormed(qubo, a, 50);
}

TEST(SimulatedAnneal, ReadsUseIndependentSubstreams) {
  // A longer run contains the shorter one read for read.
  Rng rng(5);
  KnapsackInstance instance = RandomSmallInstance(rng, 14);
  instance.weights[0] = 1;
  const QuboProblem qubo = Encode(instance, PenaltyRegime(instance, 1, 3));
  AnnealSchedule fast;
  fast.sweeps = 5;
  const SampleSet small = SimulatedAnneal(qubo, fast, 30, 17);
  const SampleSet large = SimulatedAnneal(qubo, fast, 90, 17);
  std::map<Bits, std::size_t> big;
  for (const auto& r : large.records) big[r.z] = r.count;
  for (const auto& r : small.records) EXPECT_LE(r.count, big[r.z]);
}

TEST(SimulatedAnneal, DegenerateSingleTemperature) {
  AnnealSchedule s;
  s.sweeps = 1;
  s.beta_initial = s.beta_final = 1.0;
  s.interpolation = BetaInterpolation::kLinear;
  const QuboProblem qubo = TwoItemQubo();
  ExpectWellFormed(qubo, SimulatedAnneal(qubo, s, 20, 3), 20);
  s.sweeps = 0;
  EXPECT_THROW(SimulatedAnneal(qubo, s, 20, 3), ValidationError);
  EXPECT_THROW(SimulatedAnneal(qubo, {}, 0, 3), ValidationError);
}

TEST(SimulatedAnneal, BestSeenRecording) {
  const QuboProblem qubo = TwoItemQubo();
  AnnealSchedule hot;
  hot.sweeps = 3;
  hot.beta_initial = 0.001;
  hot.beta_final = 0.002;
  AnnealSchedule best = hot;
  best.record_best_seen = true;
  const SampleSet final_state = SimulatedAnneal(qubo, hot, 200, 1);
  const SampleSet best_seen = SimulatedAnneal(qubo, best, 200, 1);
  ExpectWellFormed(qubo, best_seen, 200);
  // Per read, the best-seen energy never exceeds the final one.
  std::int64_t sum_final = 0;
  std::int64_t sum_best = 0;
  for (const auto& r : final_state.records) sum_final += r.energy * r.count;
  for (const auto& r : best_seen.records) sum_best += r.energy * r.count;
  EXPECT_LE(sum_best, sum_final);
  EXPECT_NE(Describe(best).find("best_seen"), std::string::npos);
}

TEST(SimulatedAnneal, NeverBeatsBruteForce) {
  Rng rng(12);
  for (int trial = 0; trial < 25; ++trial) {
    KnapsackInstance instance = RandomSmallInstance(rng, 14);
    instance.weights[0] = 1;
    const QuboProblem qubo = Encode(instance, PenaltyRegime(instance, 1, 1 + trial % 3));
    AnnealSchedule s;
    s.sweeps = 200;
    const SampleSet set = SimulatedAnneal(qubo, s, 20, trial);
    ExpectWellFormed(qubo, set, 20);
    EXPECT_GE(set.best().energy, BruteForceQubo(qubo).energy);
  }
}

TEST(BruteForceQubo, TwoItemAndConstant) {
  const GroundStates g = BruteForceQubo(TwoItemQubo());
  EXPECT_EQ(g.energy, -3);
  ASSERT_EQ(g.states.size(), 1U);
  EXPECT_EQ(g.states[0], (Bits{1, 0, 1, 0}));

  const GroundStates flat = BruteForceQubo(ConstantQubo(4, 5));
  EXPECT_EQ(flat.energy, 5);
  EXPECT_EQ(flat.states, AllVectors(4));
  EXPECT_THROW(BruteForceQubo(ConstantQubo(27, 0)), SizeLimitError);
}

TEST(BruteForceQubo, MatchesNaiveEnumeration) {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.UniformInt(1, 9));
    std::vector<std::int64_t> q(n * n);
    std::vector<std::int64_t> b(n);
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = rng.UniformInt(-3, 3);
      for (std::size_t j = i; j < n; ++j) {
        q[i * n + j] = q[j * n + i] = rng.UniformInt(-2, 2);
      }
    }
    const QuboProblem qubo(n, q, b, rng.UniformInt(-5, 5));
    std::int64_t best = 0;
    std::vector<Bits> argmin;
    for (const Bits& z : AllVectors(n)) {
      std::int64_t e = qubo.offset();
      for (std::size_t i = 0; i < n; ++i) {
        e += b[i] * z[i];
        for (std::size_t j = 0; j < n; ++j) e += q[i * n + j] * z[i] * z[j];
      }
      if (argmin.empty() || e < best) {
        best = e;
        argmin = {z};
      } else if (e == best) {
        argmin.push_back(z);
      }
    }
    const GroundStates g = BruteForceQubo(qubo);
    EXPECT_EQ(g.energy, best);
    EXPECT_EQ(g.states, argmin);
  }
}

TEST(BruteForceQubo, CatalogADecodesToDpOptimum) {
  const KnapsackInstance a = CatalogInstances(1).front();
  const QuboProblem qubo = Encode(a, PenaltyRegime(a, 1, 2));
  ASSERT_EQ(qubo.dimension(), 15U);
  const GroundStates g = BruteForceQubo(qubo);
  const DecodedSample d = Decode(qubo, g.states.front());
  EXPECT_EQ(d.knapsack.total_value, SolveDp(a).total_value);
  EXPECT_TRUE(d.slack_valid && d.weight_consistent && d.knapsack.feasible);
}

TEST(RandomSample, UncorrelatedWithFixedVector) {
  const QuboProblem qubo = ConstantQubo(64, 0);
  const SampleSet set = RandomSample(qubo, 10000, 2);
  ExpectWellFormed(qubo, set, 10000);
  Bits fixed(64);
  for (std::size_t i = 0; i < 64; i += 3) fixed[i] = 1;
  double sum = 0.0;
  for (const auto& r : set.records) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < 64; ++i) d += r.z[i] != fixed[i];
    sum += static_cast<double>(d * r.count) / 64.0;
  }
  EXPECT_NEAR(sum / 10000.0, 0.5, 0.02);
}

TEST(RandomSample, ReproducibleAndSingleRead) {
  const QuboProblem qubo = TwoItemQubo();
  EXPECT_EQ(RandomSample(qubo, 40, 8), RandomSample(qubo, 40, 8));
  const SampleSet one = RandomSample(qubo, 1, 8);
  ASSERT_EQ(one.records.size(), 1U);
  EXPECT_EQ(one.records[0].count, 1U);
  EXPECT_EQ(one.sampler_id, "random");
  EXPECT_THROW(RandomSample(qubo, 0, 8), ValidationError);
}

TEST(SampleSetExport, Layout) {
  const QuboProblem qubo = TwoItemQubo();
  const SampleSet set = Aggregate(qubo, {{1, 0, 1, 0}, {0, 0, 0, 0}, {1, 0, 1, 0}},
                                  "manual", 4, "none");
  EXPECT_EQ(ExportSampleSet(set),
            "# sampler_id=manual\n# seed=4\n# num_reads=3\n# schedule=none\n"
            "z,energy,count\n1010,-3,2\n0000,10,1\n");
  const std::string path = ::testing::TempDir() + "samplers_test.csv";
  SaveSampleSet(set, path);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), ExportSampleSet(set));
  std::remove(path.c_str());
  EXPECT_THROW(SaveSampleSet(set, "/nonexistent/dir/x.csv"), IoError);
}

TEST(Bits, StringRoundTrip) {
  EXPECT_EQ(BitsToString({1, 0, 0, 1}), "1001");
  EXPECT_EQ(BitsFromString("0110"), (Bits{0, 1, 1, 0}));
  EXPECT_THROW(BitsFromString("01x"), ValidationError);
}

}  // namespace
}  // namespace knapqubo
