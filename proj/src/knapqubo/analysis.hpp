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

#ifndef KNAPQUBO_ANALYSIS_HPP_
#define KNAPQUBO_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "knapqubo/knapsack.hpp"
#include "knapqubo/qubo.hpp"
#include "knapqubo/samplers.hpp"

namespace knapqubo {

// Fraction of coordinates on which a and b differ.
double Hamming(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

enum class SamplerKind { kSimulatedAnnealing, kRandom };

struct SamplerSpec {
  SamplerKind kind = SamplerKind::kSimulatedAnnealing;
  AnnealSchedule schedule;
};

std::string SamplerName(SamplerKind kind);
SampleSet RunSampler(const QuboProblem& qubo, const SamplerSpec& spec,
                     std::size_t num_reads, std::uint64_t seed);

// Reference vector c: the lexicographically smallest exhaustive ground state
// when n <= kBruteForceQuboMaxDimension, otherwise the DP optimum with the
// slack bit of its total weight set.
Bits CorrectVector(const QuboProblem& qubo);

// Trial t draws the q sampler from substream (q_seed, t) and the s sampler
// from (s_seed, t).
struct ComparisonConfig {
  SamplerSpec q;
  SamplerSpec s;
  std::size_t trials = 10;
  std::size_t reads_per_trial = 100;
  std::uint64_t q_seed = 0;
  std::uint64_t s_seed = 0;

  // q_seed and s_seed as substreams 0 and 1 of `seed`.
  static ComparisonConfig FromSeed(std::uint64_t seed);
};

struct ComparisonReport {
  std::string instance_id;
  std::size_t binary_variables = 0;
  double d_cq = 0.0;
  double d_cs = 0.0;
  double d_sq = 0.0;
  std::size_t trials = 0;
  std::size_t reads_per_trial = 0;
  // Lowest energy returned by either sampler over all trials.
  std::int64_t best_energy = 0;
};

// Per trial the lowest-energy read of each sampler becomes q and s; the
// three distances are averaged over trials.
ComparisonReport CompareSolutions(const QuboProblem& qubo, const Bits& correct,
                                  const ComparisonConfig& config);

struct DegeneracyStats {
  std::size_t num_reads = 0;
  std::size_t unique_solutions = 0;
  std::size_t min_energy_multiplicity = 0;
};

DegeneracyStats ComputeDegeneracy(const SampleSet& samples);

// Shared knobs of the three experiment sweeps.
struct SweepSettings {
  SamplerSpec q;
  SamplerSpec s;
  std::size_t trials = 10;
  std::size_t reads = 100;
  std::uint64_t seed = 1;
  // Penalties for the reads and size sweeps.
  int regime = 2;
  std::int64_t b = 1;

  ComparisonConfig Comparison() const;
};

struct PenaltyRow {
  std::int64_t a = 0;
  std::int64_t b = 0;
  double d_cq = 0.0;
  double d_cs = 0.0;
  double d_sq = 0.0;
  std::int64_t best_energy = 0;
};

// Every B in b_list crossed with the three penalty regimes; rows ordered by
// B, then A.
std::vector<PenaltyRow> PenaltySweep(const KnapsackInstance& instance,
                                     std::span<const std::int64_t> b_list,
                                     const SweepSettings& settings);

struct ReadsRow {
  std::size_t reads = 0;
  std::int64_t best_energy = 0;
  bool hit_ground = false;
  double d_cq = 0.0;
};

inline constexpr std::size_t kDefaultReadCounts[] = {100, 500, 1000, 5000};

// The q sampler at each read count, reusing the same per-trial seeds so the
// smaller read sets are prefixes of the larger ones. best_energy is the
// minimum over trials and d_cq the mean over trials.
std::vector<ReadsRow> ReadsSweep(const KnapsackInstance& instance,
                                 std::span<const std::size_t> read_counts,
                                 const SweepSettings& settings);

struct SizeRow {
  std::string instance_id;
  std::size_t binary_variables = 0;
  double d_cq = 0.0;
  double d_cs = 0.0;
  double d_sq = 0.0;
};

// One comparison per instance, ordered by binary-variable count.
std::vector<SizeRow> SizeSweep(std::span<const KnapsackInstance> instances,
                               const SweepSettings& settings);

std::string PenaltySweepCsv(const std::vector<PenaltyRow>& rows);
std::string ReadsSweepCsv(const std::vector<ReadsRow>& rows);
std::string SizeSweepCsv(const std::vector<SizeRow>& rows);

}  // namespace knapqubo

#endif  // KNAPQUBO_ANALYSIS_HPP_
