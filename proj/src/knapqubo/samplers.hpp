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

#ifndef KNAPQUBO_SAMPLERS_HPP_
#define KNAPQUBO_SAMPLERS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "knapqubo/qubo.hpp"

namespace knapqubo {

enum class BetaInterpolation { kLinear, kGeometric };

// Inverse-temperature schedule for simulated annealing. beta_initial must be
// below beta_final, except that equal endpoints are accepted with linear
// interpolation (fixed-temperature Metropolis).
struct AnnealSchedule {
  std::size_t sweeps = 1000;
  double beta_initial = 0.01;
  double beta_final = 10.0;
  BetaInterpolation interpolation = BetaInterpolation::kGeometric;
  // Record the lowest-energy state visited during a read instead of the
  // final state.
  bool record_best_seen = false;
};

void Validate(const AnnealSchedule& schedule);
double BetaAt(const AnnealSchedule& schedule, std::size_t sweep);
std::string Describe(const AnnealSchedule& schedule);

struct SampleRecord {
  Bits z;
  std::int64_t energy = 0;
  std::size_t count = 0;

  friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

// Distinct samples ordered by (energy, z), so records.front() is the best
// read with ties broken lexicographically.
struct SampleSet {
  std::vector<SampleRecord> records;
  std::size_t num_reads = 0;
  std::string sampler_id;
  std::uint64_t seed = 0;
  std::string parameters;

  const SampleRecord& best() const { return records.front(); }

  friend bool operator==(const SampleSet&, const SampleSet&) = default;
};

// Collapses raw reads into a SampleSet; energies are evaluated from the QUBO.
SampleSet Aggregate(const QuboProblem& qubo, const std::vector<Bits>& reads,
                    std::string sampler_id, std::uint64_t seed,
                    std::string parameters);

// Each read starts from a uniform random z drawn from substream (seed, read)
// and performs `sweeps` Metropolis sweeps over the coordinates in index
// order.
SampleSet SimulatedAnneal(const QuboProblem& qubo, const AnnealSchedule& schedule,
                          std::size_t num_reads, std::uint64_t seed);

// Uniform random vectors; the uncorrelated baseline.
SampleSet RandomSample(const QuboProblem& qubo, std::size_t num_reads,
                       std::uint64_t seed);

inline constexpr std::size_t kBruteForceQuboMaxDimension = 26;

struct GroundStates {
  std::int64_t energy = 0;
  std::vector<Bits> states;  // ascending lexicographic order
};

// Exhaustive minimisation; throws SizeLimitError above
// kBruteForceQuboMaxDimension variables.
GroundStates BruteForceQubo(const QuboProblem& qubo);

std::string BitsToString(const Bits& z);
Bits BitsFromString(const std::string& text);

// Header lines (sampler_id, seed, num_reads, schedule) followed by
// `z,energy,count` CSV rows.
std::string ExportSampleSet(const SampleSet& samples);
void SaveSampleSet(const SampleSet& samples, const std::string& path);

}  // namespace knapqubo

#endif  // KNAPQUBO_SAMPLERS_HPP_
