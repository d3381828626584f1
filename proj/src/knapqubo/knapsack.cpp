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

#include "knapqubo/knapsack.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "knapqubo/errors.hpp"
#include "knapqubo/rng.hpp"

namespace knapqubo {

using nlohmann::json;

void Validate(const KnapsackInstance& instance, std::int64_t variable_cap) {
  const std::size_t n = instance.weights.size();
  if (instance.id.find_first_of(",\n\r") != std::string::npos) {
    throw ValidationError("instance id may not contain commas or line breaks");
  }
  if (n == 0) {
    throw ValidationError("instance '" + instance.id +
                          "': N >= 1 violated (no items)");
  }
  if (instance.values.size() != n) {
    throw ValidationError("instance '" + instance.id +
                          "': weights and values must have identical length");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (instance.weights[i] < 1 || instance.weights[i] > kMaxItemMagnitude) {
      throw ValidationError("instance '" + instance.id + "': w_i in [1, " +
                            std::to_string(kMaxItemMagnitude) + "] violated by w_" +
                            std::to_string(i + 1) + " = " +
                            std::to_string(instance.weights[i]));
    }
    if (instance.values[i] < 1 || instance.values[i] > kMaxItemMagnitude) {
      throw ValidationError("instance '" + instance.id + "': v_i in [1, " +
                            std::to_string(kMaxItemMagnitude) + "] violated by v_" +
                            std::to_string(i + 1) + " = " +
                            std::to_string(instance.values[i]));
    }
  }
  if (instance.capacity < 1) {
    throw ValidationError("instance '" + instance.id + "': capacity W >= 1 violated");
  }
  if (instance.num_binary_variables() > variable_cap) {
    throw ValidationError("instance '" + instance.id + "': N + W = " +
                          std::to_string(instance.num_binary_variables()) +
                          " exceeds the variable cap " +
                          std::to_string(variable_cap));
  }
}

KnapsackSolution MakeSolution(const KnapsackInstance& instance, Bits selection) {
  KnapsackSolution solution;
  for (std::size_t i = 0; i < selection.size(); ++i) {
    if (selection[i]) {
      solution.total_weight += instance.weights[i];
      solution.total_value += instance.values[i];
    }
  }
  solution.feasible = solution.total_weight <= instance.capacity;
  solution.selection = std::move(selection);
  return solution;
}

KnapsackSolution SolveDp(const KnapsackInstance& instance) {
  Validate(instance, std::numeric_limits<std::int64_t>::max());
  const std::size_t n = instance.num_items();
  const auto cap = static_cast<std::size_t>(instance.capacity);
  // best[i][c]: optimum over items i..n-1 with capacity c. Filling from the
  // back lets the forward reconstruction prefer x_i = 0 whenever that keeps
  // the optimum, which yields the lexicographically smallest optimum.
  std::vector<std::vector<std::int64_t>> best(
      n + 1, std::vector<std::int64_t>(cap + 1, 0));
  for (std::size_t i = n; i-- > 0;) {
    const auto w = static_cast<std::size_t>(instance.weights[i]);
    for (std::size_t c = 0; c <= cap; ++c) {
      std::int64_t skip = best[i + 1][c];
      if (w <= c) skip = std::max(skip, best[i + 1][c - w] + instance.values[i]);
      best[i][c] = skip;
    }
  }
  Bits selection(n, 0);
  std::size_t c = cap;
  for (std::size_t i = 0; i < n; ++i) {
    if (best[i][c] == best[i + 1][c]) continue;
    selection[i] = 1;
    c -= static_cast<std::size_t>(instance.weights[i]);
  }
  return MakeSolution(instance, std::move(selection));
}

namespace {

class BranchAndBound {
 public:
  explicit BranchAndBound(const KnapsackInstance& instance)
      : instance_(instance),
        current_(instance.num_items(), 0),
        best_(instance.num_items(), 0) {
    by_ratio_.resize(instance.num_items());
    std::iota(by_ratio_.begin(), by_ratio_.end(), std::size_t{0});
    std::stable_sort(by_ratio_.begin(), by_ratio_.end(),
                     [&](std::size_t a, std::size_t b) {
                       // v_a / w_a > v_b / w_b without division.
                       return instance.values[a] * instance.weights[b] >
                              instance.values[b] * instance.weights[a];
                     });
  }

  Bits Run() {
    Visit(0, instance_.capacity, 0);
    return best_;
  }

 private:
  // Floor of the fractional-relaxation optimum over items [first, N).
  std::int64_t Bound(std::size_t first, std::int64_t room) const {
    std::int64_t bound = 0;
    for (std::size_t item : by_ratio_) {
      if (item < first) continue;
      const std::int64_t w = instance_.weights[item];
      if (w <= room) {
        room -= w;
        bound += instance_.values[item];
      } else {
        bound += instance_.values[item] * room / w;
        break;
      }
    }
    return bound;
  }

  // Depth-first in index order with x_i = 0 explored first, so selections
  // are visited in lexicographic order. The all-zero leaf is reached first,
  // and afterwards only strict improvements are kept, which preserves the
  // lexicographically-smallest tie-break; branches whose bound cannot beat
  // the incumbent strictly are pruned.
  void Visit(std::size_t item, std::int64_t room, std::int64_t value) {
    if (item == instance_.num_items()) {
      if (!have_best_ || value > best_value_) {
        have_best_ = true;
        best_value_ = value;
        best_ = current_;
      }
      return;
    }
    if (have_best_ && value + Bound(item, room) <= best_value_) return;
    Visit(item + 1, room, value);
    const std::int64_t w = instance_.weights[item];
    if (w <= room) {
      current_[item] = 1;
      Visit(item + 1, room - w, value + instance_.values[item]);
      current_[item] = 0;
    }
  }

  const KnapsackInstance& instance_;
  std::vector<std::size_t> by_ratio_;
  Bits current_;
  Bits best_;
  std::int64_t best_value_ = 0;
  bool have_best_ = false;
};

}  // namespace

KnapsackSolution SolveBranchBound(const KnapsackInstance& instance) {
  Validate(instance, std::numeric_limits<std::int64_t>::max());
  return MakeSolution(instance, BranchAndBound(instance).Run());
}

KnapsackSolution BruteForceKnapsack(const KnapsackInstance& instance) {
  Validate(instance, std::numeric_limits<std::int64_t>::max());
  const std::size_t n = instance.num_items();
  if (n > kBruteForceKnapsackMaxItems) {
    throw SizeLimitError("brute-force knapsack enumeration limited to N <= " +
                         std::to_string(kBruteForceKnapsackMaxItems) +
                         " items, got N = " + std::to_string(n));
  }
  // Mask bit (n-1-i) holds x_i, so ascending masks are ascending
  // lexicographic selections.
  std::uint64_t best_mask = 0;
  std::int64_t best_value = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::int64_t weight = 0;
    std::int64_t value = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> (n - 1 - i)) & 1U) {
        weight += instance.weights[i];
        value += instance.values[i];
      }
    }
    if (weight <= instance.capacity && value > best_value) {
      best_value = value;
      best_mask = mask;
    }
  }
  Bits selection(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    selection[i] = static_cast<std::uint8_t>((best_mask >> (n - 1 - i)) & 1U);
  }
  return MakeSolution(instance, std::move(selection));
}

KnapsackInstance GenerateRandom(const GeneratorParams& params) {
  if (params.n_items < 1) throw ValidationError("generator: n_items >= 1 violated");
  for (const auto* range : {&params.weight_range, &params.value_range}) {
    const char* name = range == &params.weight_range ? "weight" : "value";
    if (range->low < 1) {
      throw ValidationError(std::string("generator: ") + name +
                            " range low >= 1 violated");
    }
    if (range->low > range->high) {
      throw ValidationError(std::string("generator: ") + name +
                            " range is empty");
    }
    if (range->high > kMaxItemMagnitude) {
      throw ValidationError(std::string("generator: ") + name +
                            " range exceeds " + std::to_string(kMaxItemMagnitude));
    }
  }
  const auto n = static_cast<std::int64_t>(params.n_items);
  std::int64_t capacity = params.capacity;
  if (capacity == 0) {
    capacity = params.variable_cap - n;
    if (capacity < 1) {
      throw ValidationError("generator: auto capacity " +
                            std::to_string(capacity) + " < 1 for N = " +
                            std::to_string(n) + " and cap " +
                            std::to_string(params.variable_cap));
    }
  } else if (capacity < 1) {
    throw ValidationError("generator: capacity W >= 1 violated");
  }
  if (n + capacity > params.variable_cap) {
    throw ValidationError("generator: N + W = " + std::to_string(n + capacity) +
                          " exceeds the variable cap " +
                          std::to_string(params.variable_cap));
  }
  if (params.weight_range.low > capacity) {
    throw ValidationError("generator: no weight in [" +
                          std::to_string(params.weight_range.low) + ", " +
                          std::to_string(params.weight_range.high) +
                          "] fits capacity " + std::to_string(capacity));
  }

  Rng rng(params.seed);
  KnapsackInstance instance;
  instance.id = params.id;
  instance.capacity = capacity;
  instance.weights.resize(params.n_items);
  instance.values.resize(params.n_items);
  for (std::size_t i = 0; i < params.n_items; ++i) {
    instance.weights[i] =
        rng.UniformInt(params.weight_range.low, params.weight_range.high);
    instance.values[i] =
        rng.UniformInt(params.value_range.low, params.value_range.high);
  }
  auto fits = [&] {
    return *std::min_element(instance.weights.begin(),
                             instance.weights.end()) <= capacity;
  };
  while (!fits()) {
    for (std::size_t i = 0; i < params.n_items && !fits(); ++i) {
      instance.weights[i] =
          rng.UniformInt(params.weight_range.low, params.weight_range.high);
    }
  }
  Validate(instance, params.variable_cap);
  return instance;
}

std::vector<KnapsackInstance> CatalogInstances(std::uint64_t seed) {
  struct Shape {
    const char* id;
    std::size_t n;
    std::int64_t capacity;
  };
  static constexpr Shape kShapes[] = {
      {"A", 4, 11}, {"B", 4, 20}, {"C", 5, 26}, {"D", 7, 50}};
  std::vector<KnapsackInstance> out;
  std::uint64_t index = 0;
  for (const Shape& shape : kShapes) {
    GeneratorParams params;
    params.id = shape.id;
    params.n_items = shape.n;
    params.capacity = shape.capacity;
    params.weight_range = {5, std::min<std::int64_t>(20, shape.capacity)};
    params.value_range = {20, 60};
    params.seed = Rng::DeriveSeed(seed, index++);
    out.push_back(GenerateRandom(params));
  }
  return out;
}

std::string SerializeInstance(const KnapsackInstance& instance) {
  json items = json::array();
  for (std::size_t i = 0; i < instance.num_items(); ++i) {
    items.push_back({{"weight", instance.weights[i]}, {"value", instance.values[i]}});
  }
  json doc = {{"id", instance.id},
              {"capacity", instance.capacity},
              {"items", std::move(items)}};
  return doc.dump(2) + "\n";
}

KnapsackInstance ParseInstance(const std::string& text) {
  KnapsackInstance instance;
  try {
    const json doc = json::parse(text);
    instance.id = doc.at("id").get<std::string>();
    instance.capacity = doc.at("capacity").get<std::int64_t>();
    for (const json& item : doc.at("items")) {
      instance.weights.push_back(item.at("weight").get<std::int64_t>());
      instance.values.push_back(item.at("value").get<std::int64_t>());
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed instance file: ") + e.what());
  }
  Validate(instance);
  return instance;
}

KnapsackInstance LoadInstance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open instance file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

void SaveInstance(const KnapsackInstance& instance, const std::string& path) {
  Validate(instance);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write instance file '" + path + "'");
  out << SerializeInstance(instance);
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace knapqubo
