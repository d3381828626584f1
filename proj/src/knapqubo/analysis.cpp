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

#include <algorithm>
#include <sstream>

#include "knapqubo/errors.hpp"
#include "knapqubo/format.hpp"
#include "knapqubo/rng.hpp"

namespace knapqubo {

double Hamming(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  if (a.size() != b.size()) {
    throw ValidationError("Hamming distance of vectors with dimensions " +
                          std::to_string(a.size()) + " and " +
                          std::to_string(b.size()));
  }
  if (a.empty()) throw ValidationError("Hamming distance of empty vectors");
  std::size_t differ = 0;
  for (std::size_t i = 0; i < a.size(); ++i) differ += (a[i] != 0) != (b[i] != 0);
  return static_cast<double>(differ) / static_cast<double>(a.size());
}

std::string SamplerName(SamplerKind kind) {
  return kind == SamplerKind::kRandom ? "random" : "sa";
}

SampleSet RunSampler(const QuboProblem& qubo, const SamplerSpec& spec,
                     std::size_t num_reads, std::uint64_t seed) {
  switch (spec.kind) {
    case SamplerKind::kSimulatedAnnealing:
      return SimulatedAnneal(qubo, spec.schedule, num_reads, seed);
    case SamplerKind::kRandom:
      return RandomSample(qubo, num_reads, seed);
  }
  throw ValidationError("unknown sampler kind");
}

Bits CorrectVector(const QuboProblem& qubo) {
  if (qubo.dimension() <= kBruteForceQuboMaxDimension) {
    return BruteForceQubo(qubo).states.front();
  }
  const KnapsackInstance& instance = qubo.encoding().instance;
  const KnapsackSolution best = SolveDp(instance);
  if (best.total_weight < 1) {
    throw ValidationError("instance '" + instance.id +
                          "': empty optimum has no consistent slack bit");
  }
  Bits z(qubo.dimension(), 0);
  std::copy(best.selection.begin(), best.selection.end(), z.begin());
  z[instance.num_items() + static_cast<std::size_t>(best.total_weight) - 1] = 1;
  return z;
}

ComparisonConfig ComparisonConfig::FromSeed(std::uint64_t seed) {
  ComparisonConfig config;
  config.q_seed = Rng::DeriveSeed(seed, 0);
  config.s_seed = Rng::DeriveSeed(seed, 1);
  return config;
}

ComparisonReport CompareSolutions(const QuboProblem& qubo, const Bits& correct,
                                  const ComparisonConfig& config) {
  if (config.trials < 1) throw ValidationError("comparison: trials >= 1 violated");
  if (correct.size() != qubo.dimension()) {
    throw ValidationError("comparison: correct vector has wrong dimension");
  }
  ComparisonReport report;
  report.instance_id = qubo.has_encoding() ? qubo.encoding().instance.id : "";
  report.binary_variables = qubo.dimension();
  report.trials = config.trials;
  report.reads_per_trial = config.reads_per_trial;
  for (std::size_t t = 0; t < config.trials; ++t) {
    const SampleSet qs = RunSampler(qubo, config.q, config.reads_per_trial,
                                    Rng::DeriveSeed(config.q_seed, t));
    const SampleSet ss = RunSampler(qubo, config.s, config.reads_per_trial,
                                    Rng::DeriveSeed(config.s_seed, t));
    const SampleRecord& q = qs.best();
    const SampleRecord& s = ss.best();
    report.d_cq += Hamming(correct, q.z);
    report.d_cs += Hamming(correct, s.z);
    report.d_sq += Hamming(s.z, q.z);
    const std::int64_t best = std::min(q.energy, s.energy);
    report.best_energy = t == 0 ? best : std::min(report.best_energy, best);
  }
  const auto trials = static_cast<double>(config.trials);
  report.d_cq /= trials;
  report.d_cs /= trials;
  report.d_sq /= trials;
  return report;
}

DegeneracyStats ComputeDegeneracy(const SampleSet& samples) {
  if (samples.records.empty()) throw ValidationError("degeneracy of an empty sample set");
  DegeneracyStats stats;
  stats.num_reads = samples.num_reads;
  stats.unique_solutions = samples.records.size();
  const std::int64_t lowest = samples.best().energy;
  stats.min_energy_multiplicity = static_cast<std::size_t>(
      std::count_if(samples.records.begin(), samples.records.end(),
                    [&](const SampleRecord& r) { return r.energy == lowest; }));
  return stats;
}

ComparisonConfig SweepSettings::Comparison() const {
  ComparisonConfig config = ComparisonConfig::FromSeed(seed);
  config.q = q;
  config.s = s;
  config.trials = trials;
  config.reads_per_trial = reads;
  return config;
}

std::vector<PenaltyRow> PenaltySweep(const KnapsackInstance& instance,
                                     std::span<const std::int64_t> b_list,
                                     const SweepSettings& settings) {
  std::vector<std::int64_t> bs(b_list.begin(), b_list.end());
  std::sort(bs.begin(), bs.end());
  std::vector<PenaltyRow> rows;
  for (std::int64_t b : bs) {
    std::vector<PenaltyConstants> regimes = PenaltyRegimes(instance, b);
    std::stable_sort(regimes.begin(), regimes.end(),
                     [](const PenaltyConstants& x, const PenaltyConstants& y) {
                       return x.a < y.a;
                     });
    for (const PenaltyConstants& penalties : regimes) {
      const QuboProblem qubo = Encode(instance, penalties);
      const ComparisonReport report =
          CompareSolutions(qubo, CorrectVector(qubo), settings.Comparison());
      rows.push_back({penalties.a, penalties.b, report.d_cq, report.d_cs,
                      report.d_sq, report.best_energy});
    }
  }
  return rows;
}

std::vector<ReadsRow> ReadsSweep(const KnapsackInstance& instance,
                                 std::span<const std::size_t> read_counts,
                                 const SweepSettings& settings) {
  if (settings.trials < 1) throw ValidationError("reads sweep: trials >= 1 violated");
  const QuboProblem qubo =
      Encode(instance, PenaltyRegime(instance, settings.b, settings.regime));
  const GroundStates ground = BruteForceQubo(qubo);
  const Bits& correct = ground.states.front();
  const ComparisonConfig config = settings.Comparison();
  std::vector<ReadsRow> rows;
  for (std::size_t reads : read_counts) {
    ReadsRow row;
    row.reads = reads;
    for (std::size_t t = 0; t < settings.trials; ++t) {
      const SampleSet samples =
          RunSampler(qubo, config.q, reads, Rng::DeriveSeed(config.q_seed, t));
      const SampleRecord& best = samples.best();
      row.best_energy = t == 0 ? best.energy : std::min(row.best_energy, best.energy);
      row.d_cq += Hamming(correct, best.z);
    }
    row.d_cq /= static_cast<double>(settings.trials);
    row.hit_ground = row.best_energy == ground.energy;
    rows.push_back(row);
  }
  return rows;
}

std::vector<SizeRow> SizeSweep(std::span<const KnapsackInstance> instances,
                               const SweepSettings& settings) {
  std::vector<SizeRow> rows;
  for (const KnapsackInstance& instance : instances) {
    const QuboProblem qubo =
        Encode(instance, PenaltyRegime(instance, settings.b, settings.regime));
    const ComparisonReport report =
        CompareSolutions(qubo, CorrectVector(qubo), settings.Comparison());
    rows.push_back({instance.id, qubo.dimension(), report.d_cq, report.d_cs,
                    report.d_sq});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SizeRow& x, const SizeRow& y) {
    return x.binary_variables < y.binary_variables;
  });
  return rows;
}

std::string PenaltySweepCsv(const std::vector<PenaltyRow>& rows) {
  std::ostringstream out;
  out << "A,B,d_cq,d_cs,d_sq,best_energy\n";
  for (const PenaltyRow& r : rows) {
    out << r.a << "," << r.b << "," << FormatDouble(r.d_cq) << ","
        << FormatDouble(r.d_cs) << "," << FormatDouble(r.d_sq) << ","
        << r.best_energy << "\n";
  }
  return out.str();
}

std::string ReadsSweepCsv(const std::vector<ReadsRow>& rows) {
  std::ostringstream out;
  out << "reads,best_energy,hit_ground,d_cq\n";
  for (const ReadsRow& r : rows) {
    out << r.reads << "," << r.best_energy << "," << (r.hit_ground ? 1 : 0) << ","
        << FormatDouble(r.d_cq) << "\n";
  }
  return out.str();
}

std::string SizeSweepCsv(const std::vector<SizeRow>& rows) {
  std::ostringstream out;
  out << "instance_id,binary_variables,d_cq,d_cs,d_sq\n";
  for (const SizeRow& r : rows) {
    out << r.instance_id << "," << r.binary_variables << "," << FormatDouble(r.d_cq)
        << "," << FormatDouble(r.d_cs) << "," << FormatDouble(r.d_sq) << "\n";
  }
  return out.str();
}

}  // namespace knapqubo
