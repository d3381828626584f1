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

#include <algorithm>
#include <fstream>
#include <sstream>

#include "knapqubo/errors.hpp"

namespace knapqubo {
namespace {

constexpr __int128 kEnergyBound = __int128{1} << 62;

std::int64_t MaxValue(const KnapsackInstance& instance) {
  return *std::max_element(instance.values.begin(), instance.values.end());
}

void CheckDimension(const QuboProblem& qubo, std::span<const std::uint8_t> z) {
  if (z.size() != qubo.dimension()) {
    throw ValidationError("binary vector has dimension " +
                          std::to_string(z.size()) + ", QUBO expects " +
                          std::to_string(qubo.dimension()));
  }
}

}  // namespace

void ValidatePenalties(const KnapsackInstance& instance,
                       const PenaltyConstants& penalties) {
  if (penalties.b < 1 || penalties.a < 1) {
    throw ValidationError("penalties must be positive integers (A = " +
                          std::to_string(penalties.a) +
                          ", B = " + std::to_string(penalties.b) + ")");
  }
  const __int128 scaled = __int128{penalties.b} * MaxValue(instance);
  if (!(scaled < penalties.a)) {
    throw ValidationError(
        "penalty invariant 0 < B max(v_i) < A violated: B max(v_i) = " +
        std::to_string(static_cast<long long>(scaled)) +
        ", A = " + std::to_string(penalties.a));
  }
  // Largest |energy| over all z: both squared terms at their extremes plus
  // the full value term.
  std::int64_t weight_sum = 0;
  std::int64_t value_sum = 0;
  for (std::size_t i = 0; i < instance.num_items(); ++i) {
    weight_sum += instance.weights[i];
    value_sum += instance.values[i];
  }
  const __int128 w = instance.capacity;
  const __int128 slack_term = (1 + w) * (1 + w);
  const __int128 register_span = w * (w + 1) / 2 + weight_sum;
  const __int128 bound = __int128{penalties.a} *
                             (slack_term + register_span * register_span) +
                         __int128{penalties.b} * value_sum;
  if (bound >= kEnergyBound) {
    throw ValidationError(
        "penalties too large: energies of this encoding would overflow "
        "64-bit integer arithmetic");
  }
}

QuboProblem::QuboProblem(std::size_t dimension,
                         std::vector<std::int64_t> quadratic,
                         std::vector<std::int64_t> linear, std::int64_t offset,
                         std::optional<EncodingInfo> encoding)
    : dimension_(dimension),
      quadratic_(std::move(quadratic)),
      linear_(std::move(linear)),
      offset_(offset),
      encoding_(std::move(encoding)) {
  if (dimension_ == 0) throw ValidationError("QUBO dimension must be >= 1");
  if (quadratic_.size() != dimension_ * dimension_ ||
      linear_.size() != dimension_) {
    throw ValidationError("QUBO coefficient arrays do not match dimension " +
                          std::to_string(dimension_));
  }
  for (std::size_t i = 0; i < dimension_; ++i) {
    for (std::size_t j = i + 1; j < dimension_; ++j) {
      if (this->quadratic(i, j) != this->quadratic(j, i)) {
        throw ValidationError("QUBO matrix is not symmetric at (" +
                              std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
  if (encoding_ &&
      static_cast<std::int64_t>(dimension_) !=
          encoding_->instance.num_binary_variables()) {
    throw ValidationError("QUBO dimension " + std::to_string(dimension_) +
                          " != N + W = " +
                          std::to_string(encoding_->instance.num_binary_variables()));
  }
}

const EncodingInfo& QuboProblem::encoding() const {
  if (!encoding_) {
    throw ValidationError("QUBO carries no knapsack encoding metadata");
  }
  return *encoding_;
}

LucasVectors BuildVectors(const KnapsackInstance& instance) {
  Validate(instance);
  const std::size_t n = instance.num_items();
  const auto dim = static_cast<std::size_t>(instance.num_binary_variables());
  LucasVectors out;
  out.weight.assign(dim, 0);
  out.slack.assign(dim, 0);
  out.value.assign(dim, 0);
  for (std::size_t i = 0; i < n; ++i) {
    out.weight[i] = -instance.weights[i];
    out.value[i] = -instance.values[i];
  }
  for (std::size_t j = 1; j <= static_cast<std::size_t>(instance.capacity); ++j) {
    out.weight[n + j - 1] = static_cast<std::int64_t>(j);
    out.slack[n + j - 1] = 1;
  }
  return out;
}

std::int64_t EvaluateHamiltonianDirect(const KnapsackInstance& instance,
                                       const PenaltyConstants& penalties,
                                       std::span<const std::uint8_t> z) {
  const std::size_t n = instance.num_items();
  if (static_cast<std::int64_t>(z.size()) != instance.num_binary_variables()) {
    throw ValidationError("binary vector has dimension " +
                          std::to_string(z.size()) + ", expected N + W = " +
                          std::to_string(instance.num_binary_variables()));
  }
  std::int64_t slack_count = 0;
  std::int64_t declared = 0;
  for (std::int64_t j = 1; j <= instance.capacity; ++j) {
    if (z[n + static_cast<std::size_t>(j) - 1]) {
      slack_count += 1;
      declared += j;
    }
  }
  std::int64_t weight = 0;
  std::int64_t value = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (z[i]) {
      weight += instance.weights[i];
      value += instance.values[i];
    }
  }
  const std::int64_t one_hot = 1 - slack_count;
  const std::int64_t mismatch = declared - weight;
  return penalties.a * one_hot * one_hot + penalties.a * mismatch * mismatch -
         penalties.b * value;
}

QuboProblem Encode(const KnapsackInstance& instance,
                   const PenaltyConstants& penalties,
                   const EncodeOptions& options) {
  Validate(instance);
  ValidatePenalties(instance, penalties);
  const bool empty_optimum =
      *std::min_element(instance.weights.begin(), instance.weights.end()) >
      instance.capacity;
  if (empty_optimum && !options.allow_empty_optimum) {
    throw ValidationError(
        "instance '" + instance.id +
        "': no single item fits the capacity, so the optimum is the empty "
        "knapsack and the encoding has no feasible zero-penalty configuration");
  }

  const LucasVectors vec = BuildVectors(instance);
  const std::size_t dim = vec.weight.size();
  const std::int64_t a = penalties.a;
  std::vector<std::int64_t> quadratic(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      quadratic[i * dim + j] =
          a * (vec.weight[i] * vec.weight[j] + vec.slack[i] * vec.slack[j]);
    }
  }
  // Expanding A (1 - lambda^T z)^2 gives the -2A lambda^T z linear term and
  // the constant A.
  std::vector<std::int64_t> linear(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    linear[i] = -2 * a * vec.slack[i] + penalties.b * vec.value[i];
  }
  QuboProblem qubo(dim, std::move(quadratic), std::move(linear), a,
                   EncodingInfo{instance, penalties});
  if (empty_optimum) {
    qubo.add_warning("empty_optimum: no item fits capacity " +
                     std::to_string(instance.capacity) +
                     "; no configuration satisfies both constraint terms");
  }
  return qubo;
}

std::int64_t Energy(const QuboProblem& qubo, std::span<const std::uint8_t> z) {
  CheckDimension(qubo, z);
  const std::size_t n = qubo.dimension();
  std::int64_t energy = qubo.offset();
  for (std::size_t i = 0; i < n; ++i) {
    if (!z[i]) continue;
    std::int64_t row = qubo.quadratic(i, i) + qubo.linear()[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (z[j]) row += 2 * qubo.quadratic(i, j);
    }
    energy += row;
  }
  return energy;
}

DecodedSample Decode(const QuboProblem& qubo, std::span<const std::uint8_t> z) {
  CheckDimension(qubo, z);
  const KnapsackInstance& instance = qubo.encoding().instance;
  const std::size_t n = instance.num_items();
  DecodedSample out;
  out.knapsack = MakeSolution(instance, Bits(z.begin(), z.begin() + n));
  int set = 0;
  std::int64_t declared = 0;
  for (std::int64_t j = 1; j <= instance.capacity; ++j) {
    if (z[n + static_cast<std::size_t>(j) - 1]) {
      ++set;
      declared = j;
    }
  }
  out.slack_valid = set == 1;
  out.declared_weight = out.slack_valid ? declared : 0;
  out.weight_consistent = out.knapsack.total_weight == out.declared_weight;
  out.energy = Energy(qubo, z);
  return out;
}

std::vector<PenaltyConstants> PenaltyRegimes(const KnapsackInstance& instance,
                                             std::int64_t b) {
  Validate(instance);
  if (b < 1) throw ValidationError("penalty B >= 1 violated");
  const __int128 scaled = __int128{b} * MaxValue(instance);
  if (scaled * 100 >= kEnergyBound) {
    throw ValidationError("penalty B too large for 64-bit energies");
  }
  const auto s = static_cast<std::int64_t>(scaled);
  return {{s + 2, b}, {2 * s, b}, {100 * s, b}};
}

PenaltyConstants PenaltyRegime(const KnapsackInstance& instance,
                               std::int64_t b, int regime) {
  if (regime < 1 || regime > 3) {
    throw ValidationError("penalty regime must be 1, 2 or 3, got " +
                          std::to_string(regime));
  }
  return PenaltyRegimes(instance, b)[static_cast<std::size_t>(regime - 1)];
}

std::string ExportQubo(const QuboProblem& qubo) {
  std::ostringstream out;
  out << "# knapqubo-qubo 1\n";
  if (qubo.has_encoding()) {
    const EncodingInfo& info = qubo.encoding();
    out << "# id " << info.instance.id << "\n";
    out << "# capacity " << info.instance.capacity << "\n";
    out << "# penalties " << info.penalties.a << " " << info.penalties.b << "\n";
    for (std::size_t i = 0; i < info.instance.num_items(); ++i) {
      out << "# item " << info.instance.weights[i] << " "
          << info.instance.values[i] << "\n";
    }
  }
  const std::size_t n = qubo.dimension();
  out << "dimension " << n << "\n";
  out << "offset " << qubo.offset() << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t coef = qubo.linear()[i] + qubo.quadratic(i, i);
    if (coef != 0) out << "linear " << i << " " << coef << "\n";
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::int64_t coef = 2 * qubo.quadratic(i, j);
      if (coef != 0) out << "quadratic " << i << " " << j << " " << coef << "\n";
    }
  }
  return out.str();
}

QuboProblem ImportQubo(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) -> ValidationError {
    return ValidationError("QUBO file line " + std::to_string(line_no) + ": " + why);
  };

  std::optional<std::size_t> dimension;
  std::int64_t offset = 0;
  KnapsackInstance instance;
  PenaltyConstants penalties;
  bool have_capacity = false;
  bool have_penalties = false;
  std::vector<std::int64_t> quadratic;
  std::vector<std::int64_t> linear;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string key;
    fields >> key;
    if (key == "#") {
      std::string meta;
      fields >> meta;
      if (meta == "id") {
        std::getline(fields >> std::ws, instance.id);
      } else if (meta == "capacity") {
        if (!(fields >> instance.capacity)) throw fail("bad capacity");
        have_capacity = true;
      } else if (meta == "penalties") {
        if (!(fields >> penalties.a >> penalties.b)) throw fail("bad penalties");
        have_penalties = true;
      } else if (meta == "item") {
        std::int64_t w = 0;
        std::int64_t v = 0;
        if (!(fields >> w >> v)) throw fail("bad item");
        instance.weights.push_back(w);
        instance.values.push_back(v);
      }
      continue;
    }
    if (key == "dimension") {
      std::size_t n = 0;
      if (dimension || !(fields >> n) || n == 0) throw fail("bad dimension");
      dimension = n;
      quadratic.assign(n * n, 0);
      linear.assign(n, 0);
      continue;
    }
    if (key == "offset") {
      if (!(fields >> offset)) throw fail("bad offset");
      continue;
    }
    if (!dimension) throw fail("coefficient before dimension");
    const std::size_t n = *dimension;
    if (key == "linear") {
      std::size_t i = 0;
      std::int64_t coef = 0;
      if (!(fields >> i >> coef) || i >= n) throw fail("bad linear term");
      linear[i] += coef;
    } else if (key == "quadratic") {
      std::size_t i = 0;
      std::size_t j = 0;
      std::int64_t coef = 0;
      if (!(fields >> i >> j >> coef) || i >= n || j >= n) {
        throw fail("bad quadratic term");
      }
      if (i == j) {
        linear[i] += coef;
        continue;
      }
      if (coef % 2 != 0) {
        throw fail("odd off-diagonal coefficient has no symmetric integer form");
      }
      quadratic[i * n + j] += coef / 2;
      quadratic[j * n + i] += coef / 2;
    } else {
      throw fail("unknown record '" + key + "'");
    }
  }
  if (!dimension) throw ValidationError("QUBO file has no dimension record");

  std::optional<EncodingInfo> encoding;
  if (have_capacity || have_penalties || !instance.weights.empty()) {
    if (!(have_capacity && have_penalties)) {
      throw ValidationError("QUBO file has incomplete encoding metadata");
    }
    Validate(instance);
    ValidatePenalties(instance, penalties);
    encoding = EncodingInfo{instance, penalties};
  }
  return QuboProblem(*dimension, std::move(quadratic), std::move(linear), offset,
                     std::move(encoding));
}

void SaveQubo(const QuboProblem& qubo, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write QUBO file '" + path + "'");
  out << ExportQubo(qubo);
  if (!out) throw IoError("write failed for '" + path + "'");
}

QuboProblem LoadQubo(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open QUBO file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ImportQubo(buffer.str());
}

}  // namespace knapqubo
