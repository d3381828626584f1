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

#ifndef KNAPQUBO_KNAPSACK_HPP_
#define KNAPQUBO_KNAPSACK_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace knapqubo {

// Binary vector, one byte (0 or 1) per coordinate.
using Bits = std::vector<std::uint8_t>;

// Default bound on N + W, the number of binary variables of the encoding.
inline constexpr std::int64_t kDefaultVariableCap = 64;

// Weights and values are bounded so that every energy of the encoding fits
// in 64-bit signed arithmetic for the penalty regimes in use.
inline constexpr std::int64_t kMaxItemMagnitude = 1'000'000;

struct KnapsackInstance {
  std::string id;
  std::vector<std::int64_t> weights;
  std::vector<std::int64_t> values;
  std::int64_t capacity = 0;

  std::size_t num_items() const { return weights.size(); }
  // N + W.
  std::int64_t num_binary_variables() const {
    return static_cast<std::int64_t>(weights.size()) + capacity;
  }

  friend bool operator==(const KnapsackInstance&,
                         const KnapsackInstance&) = default;
};

// Throws ValidationError naming the violated invariant.
void Validate(const KnapsackInstance& instance,
              std::int64_t variable_cap = kDefaultVariableCap);

struct KnapsackSolution {
  Bits selection;
  std::int64_t total_weight = 0;
  std::int64_t total_value = 0;
  bool feasible = true;

  friend bool operator==(const KnapsackSolution&,
                         const KnapsackSolution&) = default;
};

// Builds a solution with totals recomputed from the instance.
KnapsackSolution MakeSolution(const KnapsackInstance& instance, Bits selection);

// Exact solvers. All three return a maximum-value feasible selection and
// break ties toward the lexicographically smallest selection vector, so
// their outputs are directly comparable.
KnapsackSolution SolveDp(const KnapsackInstance& instance);
KnapsackSolution SolveBranchBound(const KnapsackInstance& instance);

inline constexpr std::size_t kBruteForceKnapsackMaxItems = 25;
// Throws SizeLimitError above kBruteForceKnapsackMaxItems items.
KnapsackSolution BruteForceKnapsack(const KnapsackInstance& instance);

struct IntRange {
  std::int64_t low = 1;
  std::int64_t high = 1;
};

struct GeneratorParams {
  std::size_t n_items = 1;
  IntRange weight_range{5, 20};
  IntRange value_range{20, 60};
  // Explicit capacity, or 0 for "auto": the largest W with N + W <= cap.
  std::int64_t capacity = 0;
  std::int64_t variable_cap = kDefaultVariableCap;
  std::uint64_t seed = 0;
  std::string id = "random";
};

// Draws weights and values independently and uniformly from the given
// ranges. If no weight fits the capacity, offending weights are redrawn in
// index order until one does.
KnapsackInstance GenerateRandom(const GeneratorParams& params);

// Four instances with the (N, W) shapes (4, 11), (4, 20), (5, 26), (7, 50)
// labelled A through D. Weights are drawn from [5, min(20, W)] and values
// from [20, 60], so every item fits and each optimum is nonempty.
std::vector<KnapsackInstance> CatalogInstances(std::uint64_t seed);

// Canonical JSON text; Parse(Serialize(x)) == x and Serialize is
// byte-stable.
std::string SerializeInstance(const KnapsackInstance& instance);
KnapsackInstance ParseInstance(const std::string& text);
KnapsackInstance LoadInstance(const std::string& path);
void SaveInstance(const KnapsackInstance& instance, const std::string& path);

}  // namespace knapqubo

#endif  // KNAPQUBO_KNAPSACK_HPP_
