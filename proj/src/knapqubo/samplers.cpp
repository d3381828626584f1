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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "knapqubo/errors.hpp"
#include "knapqubo/rng.hpp"

namespace knapqubo {

void Validate(const AnnealSchedule& schedule) {
  if (schedule.sweeps < 1) throw ValidationError("anneal schedule: sweeps >= 1 violated");
  if (!(schedule.beta_initial > 0.0) || !(schedule.beta_final > 0.0) ||
      !std::isfinite(schedule.beta_initial) || !std::isfinite(schedule.beta_final)) {
    throw ValidationError("anneal schedule: inverse temperatures must be positive");
  }
  const bool equal_linear =
      schedule.beta_initial == schedule.beta_final &&
      schedule.interpolation == BetaInterpolation::kLinear;
  if (!(schedule.beta_initial < schedule.beta_final) && !equal_linear) {
    throw ValidationError(
        "anneal schedule: beta_initial < beta_final violated (equal endpoints "
        "require linear interpolation)");
  }
}

double BetaAt(const AnnealSchedule& schedule, std::size_t sweep) {
  if (schedule.sweeps <= 1) return schedule.beta_initial;
  const double t = static_cast<double>(sweep) /
                   static_cast<double>(schedule.sweeps - 1);
  if (schedule.interpolation == BetaInterpolation::kLinear) {
    return schedule.beta_initial + t * (schedule.beta_final - schedule.beta_initial);
  }
  return schedule.beta_initial *
         std::pow(schedule.beta_final / schedule.beta_initial, t);
}

std::string Describe(const AnnealSchedule& schedule) {
  std::ostringstream out;
  out.precision(17);
  out << "sweeps=" << schedule.sweeps << ";beta_initial=" << schedule.beta_initial
      << ";beta_final=" << schedule.beta_final << ";interpolation="
      << (schedule.interpolation == BetaInterpolation::kLinear ? "linear"
                                                                : "geometric")
      << ";record=" << (schedule.record_best_seen ? "best_seen" : "final");
  return out.str();
}

SampleSet Aggregate(const QuboProblem& qubo, const std::vector<Bits>& reads,
                    std::string sampler_id, std::uint64_t seed,
                    std::string parameters) {
  if (reads.empty()) throw ValidationError("sample set needs num_reads >= 1");
  std::map<Bits, std::size_t> counts;
  for (const Bits& z : reads) ++counts[z];
  SampleSet out;
  out.num_reads = reads.size();
  out.sampler_id = std::move(sampler_id);
  out.seed = seed;
  out.parameters = std::move(parameters);
  out.records.reserve(counts.size());
  for (auto& [z, count] : counts) {
    out.records.push_back({z, Energy(qubo, z), count});
  }
  std::stable_sort(out.records.begin(), out.records.end(),
                   [](const SampleRecord& a, const SampleRecord& b) {
                     return a.energy < b.energy;
                   });
  return out;
}

namespace {

Bits RandomBits(Rng& rng, std::size_t n) {
  Bits z(n);
  for (auto& bit : z) bit = rng.Bit() ? 1 : 0;
  return z;
}

Bits AnnealOneRead(const QuboProblem& qubo, const AnnealSchedule& schedule,
                   const std::vector<double>& betas, Rng rng) {
  const std::size_t n = qubo.dimension();
  Bits z = RandomBits(rng, n);
  std::vector<std::int64_t> field(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != k && z[j]) field[k] += qubo.quadratic(k, j);
    }
  }
  std::int64_t energy = Energy(qubo, z);
  Bits best = z;
  std::int64_t best_energy = energy;

  for (std::size_t sweep = 0; sweep < schedule.sweeps; ++sweep) {
    const double beta = betas[sweep];
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t delta = qubo.FlipDelta(k, z[k], field[k]);
      if (delta > 0 &&
          !(rng.Uniform01() < std::exp(-beta * static_cast<double>(delta)))) {
        continue;
      }
      z[k] ^= 1U;
      energy += delta;
      const std::int64_t sign = z[k] ? 1 : -1;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) field[j] += sign * qubo.quadratic(j, k);
      }
      if (schedule.record_best_seen && energy < best_energy) {
        best_energy = energy;
        best = z;
      }
    }
  }
  return schedule.record_best_seen ? best : z;
}

}  // namespace

SampleSet SimulatedAnneal(const QuboProblem& qubo, const AnnealSchedule& schedule,
                          std::size_t num_reads, std::uint64_t seed) {
  Validate(schedule);
  if (num_reads < 1) throw ValidationError("simulated annealing: num_reads >= 1 violated");
  std::vector<double> betas(schedule.sweeps);
  for (std::size_t t = 0; t < schedule.sweeps; ++t) betas[t] = BetaAt(schedule, t);
  std::vector<Bits> reads;
  reads.reserve(num_reads);
  for (std::size_t read = 0; read < num_reads; ++read) {
    reads.push_back(AnnealOneRead(qubo, schedule, betas, Rng::Substream(seed, read)));
  }
  return Aggregate(qubo, reads, "sa", seed, Describe(schedule));
}

SampleSet RandomSample(const QuboProblem& qubo, std::size_t num_reads,
                       std::uint64_t seed) {
  if (num_reads < 1) throw ValidationError("random sampler: num_reads >= 1 violated");
  std::vector<Bits> reads;
  reads.reserve(num_reads);
  for (std::size_t read = 0; read < num_reads; ++read) {
    Rng rng = Rng::Substream(seed, read);
    reads.push_back(RandomBits(rng, qubo.dimension()));
  }
  return Aggregate(qubo, reads, "random", seed, "uniform");
}

GroundStates BruteForceQubo(const QuboProblem& qubo) {
  const std::size_t n = qubo.dimension();
  if (n > kBruteForceQuboMaxDimension) {
    throw SizeLimitError("brute-force QUBO enumeration limited to n <= " +
                         std::to_string(kBruteForceQuboMaxDimension) +
                         " variables, got n = " + std::to_string(n));
  }
  std::int64_t best = 0;
  bool first = true;
  std::vector<std::uint64_t> masks;
  ForEachEnergy(qubo, [&](std::uint64_t mask, std::int64_t energy) {
    if (first || energy < best) {
      first = false;
      best = energy;
      masks.clear();
      masks.push_back(mask);
    } else if (energy == best) {
      masks.push_back(mask);
    }
  });
  GroundStates out;
  out.energy = best;
  out.states.reserve(masks.size());
  for (std::uint64_t mask : masks) {
    Bits z(n);
    for (std::size_t k = 0; k < n; ++k) z[k] = (mask >> k) & 1U;
    out.states.push_back(std::move(z));
  }
  std::sort(out.states.begin(), out.states.end());
  return out;
}

std::string BitsToString(const Bits& z) {
  std::string text(z.size(), '0');
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i]) text[i] = '1';
  }
  return text;
}

Bits BitsFromString(const std::string& text) {
  Bits z(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw ValidationError("binary string may contain only '0' and '1': '" +
                            text + "'");
    }
    z[i] = text[i] == '1';
  }
  return z;
}

std::string ExportSampleSet(const SampleSet& samples) {
  std::ostringstream out;
  out << "# sampler_id=" << samples.sampler_id << "\n";
  out << "# seed=" << samples.seed << "\n";
  out << "# num_reads=" << samples.num_reads << "\n";
  out << "# schedule=" << samples.parameters << "\n";
  out << "z,energy,count\n";
  for (const SampleRecord& record : samples.records) {
    out << BitsToString(record.z) << "," << record.energy << "," << record.count
        << "\n";
  }
  return out.str();
}

void SaveSampleSet(const SampleSet& samples, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write sample file '" + path + "'");
  out << ExportSampleSet(samples);
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace knapqubo
