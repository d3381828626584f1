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

#ifndef KNAPQUBO_QUBO_HPP_
#define KNAPQUBO_QUBO_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "knapqubo/knapsack.hpp"

namespace knapqubo {

// A weights the two constraint terms, B the value term. Encoding requires
// 0 < B * max(v_i) < A.
struct PenaltyConstants {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const PenaltyConstants&,
                         const PenaltyConstants&) = default;
};

void ValidatePenalties(const KnapsackInstance& instance,
                       const PenaltyConstants& penalties);

// Source of an encoded QUBO; variable order is (x_1..x_N, y_1..y_W).
struct EncodingInfo {
  KnapsackInstance instance;
  PenaltyConstants penalties;
};

// Minimise z^T Q z + b^T z + c over z in {0,1}^n with exact integer
// arithmetic. Q is symmetric and keeps its diagonal; folding z_i^2 = z_i into
// the linear term happens only at export.
class QuboProblem {
 public:
  QuboProblem(std::size_t dimension, std::vector<std::int64_t> quadratic,
              std::vector<std::int64_t> linear, std::int64_t offset,
              std::optional<EncodingInfo> encoding = std::nullopt);

  std::size_t dimension() const { return dimension_; }
  std::int64_t quadratic(std::size_t i, std::size_t j) const {
    return quadratic_[i * dimension_ + j];
  }
  const std::vector<std::int64_t>& quadratic_matrix() const { return quadratic_; }
  const std::vector<std::int64_t>& linear() const { return linear_; }
  std::int64_t offset() const { return offset_; }

  bool has_encoding() const { return encoding_.has_value(); }
  // Throws ValidationError for QUBOs without knapsack provenance.
  const EncodingInfo& encoding() const;
  std::size_t n_items() const { return encoding().instance.num_items(); }
  std::int64_t capacity() const { return encoding().instance.capacity; }
  const PenaltyConstants& penalties() const { return encoding().penalties; }

  // Non-fatal diagnostics attached at encode time.
  const std::vector<std::string>& warnings() const { return warnings_; }
  void add_warning(std::string warning) { warnings_.push_back(std::move(warning)); }

  // Energy change for flipping coordinate k of z given the off-diagonal field
  // sum_{j != k} Q_kj z_j.
  std::int64_t FlipDelta(std::size_t k, std::uint8_t current,
                         std::int64_t field) const {
    const std::int64_t up = quadratic(k, k) + linear_[k] + 2 * field;
    return current ? -up : up;
  }

 private:
  std::size_t dimension_;
  std::vector<std::int64_t> quadratic_;
  std::vector<std::int64_t> linear_;
  std::int64_t offset_;
  std::optional<EncodingInfo> encoding_;
  std::vector<std::string> warnings_;
};

// The three auxiliary vectors of the Lucas encoding, each of length N + W:
// weight = (-w_1..-w_N, 1..W), slack = (0..0, 1..1), value = (-v_1..-v_N, 0..0).
struct LucasVectors {
  std::vector<std::int64_t> weight;
  std::vector<std::int64_t> slack;
  std::vector<std::int64_t> value;
};

LucasVectors BuildVectors(const KnapsackInstance& instance);

// Literal evaluation of
//   A (1 - sum_j y_j)^2 + A (sum_j j y_j - sum_i w_i x_i)^2 - B sum_i v_i x_i.
// Reference implementation for the matrix form.
std::int64_t EvaluateHamiltonianDirect(const KnapsackInstance& instance,
                                       const PenaltyConstants& penalties,
                                       std::span<const std::uint8_t> z);

struct EncodeOptions {
  // Instances whose optimum is the empty knapsack have no zero-penalty
  // configuration; by default they are rejected.
  bool allow_empty_optimum = false;
};

// Q = A (W W^T + lambda lambda^T), b = -2A lambda + B V, c = A.
QuboProblem Encode(const KnapsackInstance& instance,
                   const PenaltyConstants& penalties,
                   const EncodeOptions& options = {});

// Throws ValidationError on dimension mismatch.
std::int64_t Energy(const QuboProblem& qubo, std::span<const std::uint8_t> z);

struct DecodedSample {
  KnapsackSolution knapsack;
  std::int64_t declared_weight = 0;
  bool slack_valid = false;
  bool weight_consistent = false;
  std::int64_t energy = 0;
};

DecodedSample Decode(const QuboProblem& qubo, std::span<const std::uint8_t> z);

// A = B max(v) + 2, A = 2 B max(v), A = 100 B max(v), in that order.
std::vector<PenaltyConstants> PenaltyRegimes(const KnapsackInstance& instance,
                                             std::int64_t b);

// Regime index 1..3 into PenaltyRegimes.
PenaltyConstants PenaltyRegime(const KnapsackInstance& instance,
                               std::int64_t b, int regime);

// Text interchange format: '#' metadata lines, then `dimension`, `offset`,
// `linear i c` and `quadratic i j c` (i < j) with the diagonal folded into the
// linear terms. Zero coefficients are omitted.
std::string ExportQubo(const QuboProblem& qubo);
QuboProblem ImportQubo(const std::string& text);
void SaveQubo(const QuboProblem& qubo, const std::string& path);
QuboProblem LoadQubo(const std::string& path);

// Visits every z in {0,1}^n in Gray-code order as (mask, energy), where bit k
// of mask is z_k. Energies are updated incrementally, O(n) per step.
template <typename Visitor>
void ForEachEnergy(const QuboProblem& qubo, Visitor&& visit) {
  const std::size_t n = qubo.dimension();
  std::vector<std::int64_t> field(n, 0);
  std::vector<std::uint8_t> z(n, 0);
  std::uint64_t mask = 0;
  std::int64_t energy = qubo.offset();
  visit(mask, energy);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto k = static_cast<std::size_t>(__builtin_ctzll(step));
    energy += qubo.FlipDelta(k, z[k], field[k]);
    z[k] ^= 1U;
    mask ^= std::uint64_t{1} << k;
    const std::int64_t sign = z[k] ? 1 : -1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != k) field[j] += sign * qubo.quadratic(j, k);
    }
    visit(mask, energy);
  }
}

}  // namespace knapqubo

#endif  // KNAPQUBO_QUBO_HPP_
