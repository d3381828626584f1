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

#include "knapqubo/qubo.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <numeric>

#include "knapqubo/errors.hpp"
#include "knapqubo/rng.hpp"
#include "knapqubo/samplers.hpp"
#include "oracles.hpp"

namespace knapqubo {
namespace {

using testing::AllVectors;
using testing::LucasEnergy;
using testing::RandomSmallInstance;

KnapsackInstance TwoItem() { return {"two", {1, 2}, {3, 1}, 2}; }
constexpr PenaltyConstants kTen{10, 1};

TEST(BuildVectors, TwoItemExample) {
  const LucasVectors v = BuildVectors(TwoItem());
  EXPECT_EQ(v.weight, (std::vector<std::int64_t>{-1, -2, 1, 2}));
  EXPECT_EQ(v.slack, (std::vector<std::int64_t>{0, 0, 1, 1}));
  EXPECT_EQ(v.value, (std::vector<std::int64_t>{-3, -1, 0, 0}));
}

TEST(BuildVectors, SmallestShapeAndSlackSum) {
  const LucasVectors v = BuildVectors({"one", {1}, {5}, 1});
  EXPECT_EQ(v.weight, (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(v.slack, (std::vector<std::int64_t>{0, 1}));
  EXPECT_EQ(v.value, (std::vector<std::int64_t>{-5, 0}));
  for (const KnapsackInstance& instance : CatalogInstances(9)) {
    const LucasVectors c = BuildVectors(instance);
    EXPECT_EQ(std::accumulate(c.slack.begin(), c.slack.end(), std::int64_t{0}),
              instance.capacity);
  }
}

TEST(EvaluateHamiltonianDirect, WorkedValues) {
  EXPECT_EQ(EvaluateHamiltonianDirect(TwoItem(), kTen, Bits{1, 0, 1, 0}), -3);
  EXPECT_EQ(EvaluateHamiltonianDirect(TwoItem(), kTen, Bits{0, 0, 0, 0}), 10);
  EXPECT_EQ(EvaluateHamiltonianDirect(TwoItem(), kTen, Bits{1, 0, 0, 1}), 7);
  EXPECT_THROW(EvaluateHamiltonianDirect(TwoItem(), kTen, Bits{1, 0, 0}),
               ValidationError);
}

TEST(Encode, TwoItemExample) {
  const QuboProblem qubo = Encode(TwoItem(), kTen);
  EXPECT_EQ(qubo.dimension(), 4U);
  EXPECT_EQ(qubo.offset(), 10);
  EXPECT_EQ(Energy(qubo, Bits{1, 0, 1, 0}), -3);
  EXPECT_EQ(Energy(qubo, Bits{0, 0, 0, 0}), 10);
  EXPECT_EQ(qubo.n_items(), 2U);
  EXPECT_EQ(qubo.capacity(), 2);
  EXPECT_EQ(qubo.penalties(), kTen);
  EXPECT_TRUE(qubo.warnings().empty());
  // Slack variable y_1 sits after the item block: Q = A (W W^T + l l^T).
  EXPECT_EQ(qubo.quadratic(2, 2), 10 * (1 + 1));
  EXPECT_EQ(qubo.quadratic(0, 3), 10 * (-1 * 2));
  EXPECT_EQ(qubo.linear()[2], -20);
  EXPECT_EQ(qubo.linear()[0], -3);
}

TEST(Encode, ExhaustiveEquivalenceOnWorkedExample) {
  for (const Bits& z : AllVectors(4)) {
    EXPECT_EQ(Energy(Encode(TwoItem(), kTen), z), LucasEnergy(TwoItem(), 10, 1, z));
  }
}

TEST(Encode, PrintedPlusSignWouldBreakEquivalence) {
  // Flipping the slack linear term to +2A lambda must disagree with Eq. 4
  // somewhere; the implemented -2A lambda agrees everywhere.
  const QuboProblem qubo = Encode(TwoItem(), kTen);
  std::vector<std::int64_t> linear = qubo.linear();
  for (std::size_t j = 2; j < 4; ++j) linear[j] += 4 * kTen.a;
  const QuboProblem flipped(4, qubo.quadratic_matrix(), linear, qubo.offset());
  bool differs = false;
  for (const Bits& z : AllVectors(4)) {
    differs |= Energy(flipped, z) != LucasEnergy(TwoItem(), 10, 1, z);
  }
  EXPECT_TRUE(differs);
}

TEST(Encode, ExhaustiveEquivalenceOnRandomInstances) {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const KnapsackInstance instance = RandomSmallInstance(rng, 16);
    if (*std::min_element(instance.weights.begin(), instance.weights.end()) >
        instance.capacity) {
      continue;
    }
    SCOPED_TRACE(SerializeInstance(instance));
    const std::int64_t vmax =
        *std::max_element(instance.values.begin(), instance.values.end());
    for (const PenaltyConstants& p : PenaltyRegimes(instance, 3)) {
      const QuboProblem qubo = Encode(instance, p);
      ASSERT_EQ(static_cast<std::int64_t>(qubo.dimension()),
                instance.num_binary_variables());
      for (const Bits& z : AllVectors(qubo.dimension())) {
        const std::int64_t expected = LucasEnergy(instance, p.a, p.b, z);
        ASSERT_EQ(Energy(qubo, z), expected);
        ASSERT_EQ(EvaluateHamiltonianDirect(instance, p, z), expected);
      }
      EXPECT_GT(p.a, p.b * vmax);
    }
  }
}

TEST(Encode, GrayCodeEnumerationMatchesEnergy) {
  Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    KnapsackInstance instance = RandomSmallInstance(rng, 12);
    instance.weights[0] = 1;
    const QuboProblem qubo = Encode(instance, PenaltyRegime(instance, 1, 1));
    const std::size_t n = qubo.dimension();
    ForEachEnergy(qubo, [&](std::uint64_t mask, std::int64_t energy) {
      Bits z(n);
      for (std::size_t k = 0; k < n; ++k) z[k] = (mask >> k) & 1U;
      ASSERT_EQ(energy, Energy(qubo, z));
    });
  }
}

TEST(Encode, GroundStateDecodesToDpOptimum) {
  Rng rng(4242);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const KnapsackInstance instance = RandomSmallInstance(rng, 14);
    const KnapsackSolution dp = SolveDp(instance);
    if (dp.total_weight < 1) continue;
    SCOPED_TRACE(SerializeInstance(instance));
    for (std::int64_t b : {1, 100}) {
      for (const PenaltyConstants& p : PenaltyRegimes(instance, b)) {
        const QuboProblem qubo = Encode(instance, p);
        const GroundStates ground = BruteForceQubo(qubo);
        EXPECT_EQ(ground.energy, -p.b * dp.total_value);
        for (const Bits& z : ground.states) {
          const DecodedSample d = Decode(qubo, z);
          EXPECT_TRUE(d.slack_valid);
          EXPECT_TRUE(d.weight_consistent);
          EXPECT_TRUE(d.knapsack.feasible);
          EXPECT_EQ(d.knapsack.total_value, dp.total_value);
        }
        // Penalty separation: every invalid vector sits strictly above.
        for (const Bits& z : AllVectors(qubo.dimension())) {
          const DecodedSample d = Decode(qubo, z);
          if (!d.slack_valid || !d.weight_consistent || !d.knapsack.feasible) {
            ASSERT_GT(d.energy, ground.energy);
          }
        }
      }
    }
    ++checked;
  }
  EXPECT_GE(checked, 20);
}

TEST(Encode, RejectsBadPenalties) {
  EXPECT_THROW(Encode(TwoItem(), {3, 1}), ValidationError);   // A = B max v
  EXPECT_THROW(Encode(TwoItem(), {2, 1}), ValidationError);
  EXPECT_THROW(Encode(TwoItem(), {10, 0}), ValidationError);
  EXPECT_NO_THROW(Encode(TwoItem(), {4, 1}));
  EXPECT_THROW(Encode(TwoItem(), {std::int64_t{1} << 61, 1}), ValidationError);
}

TEST(Encode, EmptyOptimumIsRejectedUnlessAllowed) {
  const KnapsackInstance none{"none", {5}, {7}, 4};
  EXPECT_THROW(Encode(none, {8, 1}), ValidationError);
  const QuboProblem qubo = Encode(none, {8, 1}, {.allow_empty_optimum = true});
  ASSERT_EQ(qubo.warnings().size(), 1U);
  EXPECT_EQ(qubo.warnings()[0].rfind("empty_optimum", 0), 0U);
  // No vector has zero constraint penalty.
  EXPECT_GT(BruteForceQubo(qubo).energy, -7);
}

TEST(Energy, DimensionAndPurity) {
  const QuboProblem qubo = Encode(TwoItem(), kTen);
  EXPECT_THROW(Energy(qubo, Bits{1, 0, 1}), ValidationError);
  EXPECT_EQ(Energy(qubo, Bits{1, 1, 0, 1}), Energy(qubo, Bits{1, 1, 0, 1}));
  const QuboProblem constant(3, std::vector<std::int64_t>(9, 0),
                             std::vector<std::int64_t>(3, 0), 5);
  EXPECT_EQ(Energy(constant, Bits{1, 1, 1}), 5);
}

TEST(QuboProblem, ConstructorValidation) {
  EXPECT_THROW(QuboProblem(2, {0, 1, 2, 0}, {0, 0}, 0), ValidationError);
  EXPECT_THROW(QuboProblem(2, {0, 0, 0}, {0, 0}, 0), ValidationError);
  EXPECT_THROW(QuboProblem(0, {}, {}, 0), ValidationError);
  const QuboProblem bare(1, {0}, {0}, 0);
  EXPECT_FALSE(bare.has_encoding());
  EXPECT_THROW(bare.encoding(), ValidationError);
}

TEST(Decode, Flags) {
  const QuboProblem qubo = Encode(TwoItem(), kTen);
  DecodedSample d = Decode(qubo, Bits{1, 0, 1, 0});
  EXPECT_EQ(d.knapsack.total_value, 3);
  EXPECT_EQ(d.knapsack.total_weight, 1);
  EXPECT_EQ(d.declared_weight, 1);
  EXPECT_TRUE(d.slack_valid);
  EXPECT_TRUE(d.weight_consistent);
  EXPECT_EQ(d.energy, -3);

  d = Decode(qubo, Bits{1, 0, 1, 1});
  EXPECT_FALSE(d.slack_valid);
  EXPECT_EQ(d.declared_weight, 0);

  d = Decode(qubo, Bits{0, 0, 0, 0});
  EXPECT_FALSE(d.slack_valid);
  EXPECT_EQ(d.knapsack.selection, (Bits{0, 0}));
  EXPECT_TRUE(d.knapsack.feasible);

  d = Decode(qubo, Bits{1, 1, 0, 1});
  EXPECT_TRUE(d.slack_valid);
  EXPECT_FALSE(d.weight_consistent);
  EXPECT_FALSE(d.knapsack.feasible);
  EXPECT_THROW(Decode(qubo, Bits{1}), ValidationError);
}

TEST(PenaltyRegimes, PaperValues) {
  const KnapsackInstance instance{"p", {5, 6}, {60, 20}, 20};
  EXPECT_EQ(PenaltyRegimes(instance, 1),
            (std::vector<PenaltyConstants>{{62, 1}, {120, 1}, {6000, 1}}));
  EXPECT_EQ(PenaltyRegimes(instance, 100),
            (std::vector<PenaltyConstants>{{6002, 100}, {12000, 100}, {600000, 100}}));
  EXPECT_EQ(PenaltyRegime(instance, 1, 2), (PenaltyConstants{120, 1}));
  EXPECT_THROW(PenaltyRegime(instance, 1, 4), ValidationError);
  EXPECT_THROW(PenaltyRegimes(instance, 0), ValidationError);
  for (const PenaltyConstants& p : PenaltyRegimes(instance, 7)) {
    EXPECT_NO_THROW(ValidatePenalties(instance, p));
  }
}

TEST(QuboExport, TwoItemLayout) {
  EXPECT_EQ(ExportQubo(Encode(TwoItem(), kTen)),
            "# knapqubo-qubo 1\n"
            "# id two\n"
            "# capacity 2\n"
            "# penalties 10 1\n"
            "# item 1 3\n"
            "# item 2 1\n"
            "dimension 4\n"
            "offset 10\n"
            "linear 0 7\n"
            "linear 1 39\n"
            "linear 3 30\n"
            "quadratic 0 1 40\n"
            "quadratic 0 2 -20\n"
            "quadratic 0 3 -40\n"
            "quadratic 1 2 -40\n"
            "quadratic 1 3 -80\n"
            "quadratic 2 3 60\n");
}

TEST(QuboExport, RoundTripPreservesEnergies) {
  Rng rng(8);
  for (int trial = 0; trial < 15; ++trial) {
    KnapsackInstance instance = RandomSmallInstance(rng, 12);
    instance.weights[0] = 1;
    const auto p = PenaltyRegime(instance, 2, 1 + trial % 3);
    const QuboProblem qubo = Encode(instance, p);
    const QuboProblem back = ImportQubo(ExportQubo(qubo));
    ASSERT_TRUE(back.has_encoding());
    EXPECT_EQ(back.encoding().instance.weights, instance.weights);
    EXPECT_EQ(back.penalties(), p);
    for (const Bits& z : AllVectors(qubo.dimension())) {
      ASSERT_EQ(Energy(back, z), LucasEnergy(instance, p.a, p.b, z));
    }
    EXPECT_EQ(ExportQubo(back), ExportQubo(qubo));
  }
}

TEST(QuboExport, ImportErrorsAndDisk) {
  EXPECT_THROW(ImportQubo("offset 3\n"), ValidationError);
  EXPECT_THROW(ImportQubo("linear 0 1\n"), ValidationError);
  EXPECT_THROW(ImportQubo("dimension 2\nquadratic 0 1 3\n"), ValidationError);
  EXPECT_THROW(ImportQubo("dimension 2\nlinear 5 1\n"), ValidationError);
  EXPECT_THROW(ImportQubo("dimension 2\nbogus\n"), ValidationError);
  EXPECT_THROW(ImportQubo("# capacity 1\ndimension 2\n"), ValidationError);
  const QuboProblem plain = ImportQubo("dimension 2\noffset -1\nquadratic 1 1 4\n");
  EXPECT_FALSE(plain.has_encoding());
  EXPECT_EQ(Energy(plain, Bits{0, 1}), 3);
  EXPECT_THROW(LoadQubo("/nonexistent/q.txt"), IoError);
  const std::string path = ::testing::TempDir() + "qubo_test.qubo";
  SaveQubo(Encode(TwoItem(), kTen), path);
  EXPECT_EQ(ExportQubo(LoadQubo(path)), ExportQubo(Encode(TwoItem(), kTen)));
  std::remove(path.c_str());
}

}  // namespace
}  // namespace knapqubo
