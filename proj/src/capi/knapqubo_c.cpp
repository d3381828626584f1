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

#include "knapqubo/knapqubo.h"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "knapqubo/adiabatic.hpp"
#include "knapqubo/analysis.hpp"
#include "knapqubo/errors.hpp"
#include "knapqubo/knapsack.hpp"
#include "knapqubo/qubo.hpp"
#include "knapqubo/samplers.hpp"

struct kq_instance {
  knapqubo::KnapsackInstance value;
};

struct kq_qubo {
  knapqubo::QuboProblem value;
};

struct kq_sampleset {
  knapqubo::SampleSet value;
};

struct kq_anneal {
  knapqubo::AnnealProblem value;
};

struct kq_table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

namespace {

using knapqubo::Bits;
using knapqubo::ValidationError;

thread_local std::string last_error;

kq_status Fail(kq_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
kq_status Guard(Body&& body) {
  try {
    body();
    last_error.clear();
    return KQ_OK;
  } catch (const knapqubo::Error& e) {
    return Fail(static_cast<kq_status>(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(KQ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(KQ_ERR_INTERNAL, e.what());
  }
}

template <typename T>
void Require(const T* pointer, const char* name) {
  if (pointer == nullptr) throw ValidationError(std::string(name) + " is NULL");
}

Bits ToBits(const std::uint8_t* z, std::size_t n) {
  Require(z, "binary vector");
  Bits bits(z, z + n);
  for (std::uint8_t b : bits) {
    if (b > 1) throw ValidationError("binary vector entries must be 0 or 1");
  }
  return bits;
}

kq_status CopyOut(const std::string& text, char* buffer, std::size_t capacity,
                  std::size_t* needed) {
  if (needed) *needed = text.size() + 1;
  if (buffer == nullptr || capacity < text.size() + 1) {
    return Fail(KQ_ERR_BUFFER, "buffer too small");
  }
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  last_error.clear();
  return KQ_OK;
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  return cells;
}

std::unique_ptr<kq_table> TableFromCsv(const std::string& csv) {
  auto table = std::make_unique<kq_table>();
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (table->columns.empty()) {
      table->columns = SplitCsvLine(line);
    } else {
      table->rows.push_back(SplitCsvLine(line));
    }
  }
  return table;
}

std::string TableToCsv(const kq_table& table) {
  std::string out;
  auto append_row = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  append_row(table.columns);
  for (const auto& row : table.rows) append_row(row);
  return out;
}

knapqubo::AnnealSchedule ToSchedule(const kq_schedule& s) {
  knapqubo::AnnealSchedule schedule;
  schedule.sweeps = s.sweeps;
  schedule.beta_initial = s.beta_initial;
  schedule.beta_final = s.beta_final;
  schedule.interpolation = s.interpolation == KQ_INTERP_LINEAR
                               ? knapqubo::BetaInterpolation::kLinear
                               : knapqubo::BetaInterpolation::kGeometric;
  schedule.record_best_seen = s.record_best_seen != 0;
  return schedule;
}

knapqubo::SamplerKind ToKind(kq_sampler_kind kind) {
  switch (kind) {
    case KQ_SAMPLER_SA:
      return knapqubo::SamplerKind::kSimulatedAnnealing;
    case KQ_SAMPLER_RANDOM:
      return knapqubo::SamplerKind::kRandom;
  }
  throw ValidationError("unknown sampler kind");
}

knapqubo::SweepSettings ToSettings(const kq_sweep_config* config) {
  Require(config, "sweep config");
  knapqubo::SweepSettings settings;
  settings.q.kind = ToKind(config->q_sampler);
  settings.s.kind = ToKind(config->s_sampler);
  settings.q.schedule = ToSchedule(config->schedule);
  settings.s.schedule = settings.q.schedule;
  settings.trials = config->trials;
  settings.reads = config->reads;
  settings.seed = config->seed;
  settings.regime = config->regime;
  settings.b = config->b;
  return settings;
}

template <typename Handle, typename... Args>
Handle* Emplace(Args&&... args) {
  return new Handle{std::forward<Args>(args)...};
}

}  // namespace

extern "C" {

const char* kq_version(void) { return KNAPQUBO_VERSION; }

const char* kq_last_error(void) { return last_error.c_str(); }

// ---- instances -------------------------------------------------------------

kq_status kq_instance_create(const char* id, const int64_t* weights,
                             const int64_t* values, size_t n_items,
                             int64_t capacity, kq_instance** out) {
  return Guard([&] {
    Require(out, "out");
    Require(weights, "weights");
    Require(values, "values");
    knapqubo::KnapsackInstance instance;
    instance.id = id ? id : "";
    instance.weights.assign(weights, weights + n_items);
    instance.values.assign(values, values + n_items);
    instance.capacity = capacity;
    knapqubo::Validate(instance);
    *out = Emplace<kq_instance>(std::move(instance));
  });
}

kq_status kq_instance_generate(const kq_generator_params* params, kq_instance** out) {
  return Guard([&] {
    Require(out, "out");
    Require(params, "params");
    knapqubo::GeneratorParams p;
    p.n_items = params->n_items;
    p.weight_range = {params->weight_min, params->weight_max};
    p.value_range = {params->value_min, params->value_max};
    p.capacity = params->capacity;
    if (params->capacity < 0) throw ValidationError("capacity W >= 1 violated");
    p.variable_cap = params->variable_cap ? params->variable_cap
                                          : knapqubo::kDefaultVariableCap;
    p.seed = params->seed;
    if (params->id) p.id = params->id;
    *out = Emplace<kq_instance>(knapqubo::GenerateRandom(p));
  });
}

kq_status kq_instance_catalog(uint64_t seed, size_t index, kq_instance** out) {
  return Guard([&] {
    Require(out, "out");
    auto catalog = knapqubo::CatalogInstances(seed);
    if (index >= catalog.size()) {
      throw ValidationError("catalog index must be 0..3 (A..D)");
    }
    *out = Emplace<kq_instance>(std::move(catalog[index]));
  });
}

kq_status kq_instance_load(const char* path, kq_instance** out) {
  return Guard([&] {
    Require(out, "out");
    Require(path, "path");
    *out = Emplace<kq_instance>(knapqubo::LoadInstance(path));
  });
}

kq_status kq_instance_save(const kq_instance* instance, const char* path) {
  return Guard([&] {
    Require(instance, "instance");
    Require(path, "path");
    knapqubo::SaveInstance(instance->value, path);
  });
}

kq_status kq_instance_serialize(const kq_instance* instance, char* buffer,
                                size_t capacity, size_t* needed) {
  if (instance == nullptr) return Fail(KQ_ERR_VALIDATION, "instance is NULL");
  return CopyOut(knapqubo::SerializeInstance(instance->value), buffer, capacity,
                 needed);
}

void kq_instance_free(kq_instance* instance) { delete instance; }

const char* kq_instance_id(const kq_instance* instance) {
  return instance ? instance->value.id.c_str() : "";
}

size_t kq_instance_num_items(const kq_instance* instance) {
  return instance ? instance->value.num_items() : 0;
}

int64_t kq_instance_capacity(const kq_instance* instance) {
  return instance ? instance->value.capacity : 0;
}

int64_t kq_instance_weight(const kq_instance* instance, size_t item) {
  if (!instance || item >= instance->value.num_items()) return 0;
  return instance->value.weights[item];
}

int64_t kq_instance_value(const kq_instance* instance, size_t item) {
  if (!instance || item >= instance->value.num_items()) return 0;
  return instance->value.values[item];
}

kq_status kq_solve(const kq_instance* instance, kq_solve_method method,
                   uint8_t* selection, size_t selection_len, kq_solution* out) {
  if (instance && selection && selection_len != instance->value.num_items()) {
    return Fail(KQ_ERR_BUFFER, "selection buffer must hold N entries");
  }
  return Guard([&] {
    Require(instance, "instance");
    Require(out, "out");
    knapqubo::KnapsackSolution solution;
    switch (method) {
      case KQ_SOLVE_DP:
        solution = knapqubo::SolveDp(instance->value);
        break;
      case KQ_SOLVE_BRANCH_BOUND:
        solution = knapqubo::SolveBranchBound(instance->value);
        break;
      case KQ_SOLVE_BRUTE_FORCE:
        solution = knapqubo::BruteForceKnapsack(instance->value);
        break;
      default:
        throw ValidationError("unknown solve method");
    }
    if (selection) {
      if (selection_len != solution.selection.size()) {
        throw ValidationError("selection buffer must hold N entries");
      }
      std::memcpy(selection, solution.selection.data(), selection_len);
    }
    out->total_weight = solution.total_weight;
    out->total_value = solution.total_value;
    out->feasible = solution.feasible ? 1 : 0;
  });
}

// ---- QUBO ------------------------------------------------------------------

kq_status kq_penalty_regime(const kq_instance* instance, int64_t b, int regime,
                            int64_t* a_out) {
  return Guard([&] {
    Require(instance, "instance");
    Require(a_out, "a_out");
    *a_out = knapqubo::PenaltyRegime(instance->value, b, regime).a;
  });
}

kq_status kq_encode(const kq_instance* instance, int64_t a, int64_t b,
                    unsigned flags, kq_qubo** out) {
  return Guard([&] {
    Require(instance, "instance");
    Require(out, "out");
    knapqubo::EncodeOptions options;
    options.allow_empty_optimum = (flags & KQ_ENCODE_ALLOW_EMPTY_OPTIMUM) != 0;
    *out = Emplace<kq_qubo>(knapqubo::Encode(instance->value, {a, b}, options));
  });
}

kq_status kq_qubo_load(const char* path, kq_qubo** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    *out = Emplace<kq_qubo>(knapqubo::LoadQubo(path));
  });
}

kq_status kq_qubo_save(const kq_qubo* qubo, const char* path) {
  return Guard([&] {
    Require(qubo, "qubo");
    Require(path, "path");
    knapqubo::SaveQubo(qubo->value, path);
  });
}

void kq_qubo_free(kq_qubo* qubo) { delete qubo; }

size_t kq_qubo_dimension(const kq_qubo* qubo) {
  return qubo ? qubo->value.dimension() : 0;
}

int64_t kq_qubo_offset(const kq_qubo* qubo) { return qubo ? qubo->value.offset() : 0; }

int64_t kq_qubo_quadratic(const kq_qubo* qubo, size_t i, size_t j) {
  if (!qubo || i >= qubo->value.dimension() || j >= qubo->value.dimension()) return 0;
  return qubo->value.quadratic(i, j);
}

int64_t kq_qubo_linear(const kq_qubo* qubo, size_t i) {
  if (!qubo || i >= qubo->value.dimension()) return 0;
  return qubo->value.linear()[i];
}

size_t kq_qubo_num_warnings(const kq_qubo* qubo) {
  return qubo ? qubo->value.warnings().size() : 0;
}

const char* kq_qubo_warning(const kq_qubo* qubo, size_t index) {
  if (!qubo || index >= qubo->value.warnings().size()) return "";
  return qubo->value.warnings()[index].c_str();
}

kq_status kq_qubo_energy(const kq_qubo* qubo, const uint8_t* z, size_t n,
                         int64_t* energy) {
  return Guard([&] {
    Require(qubo, "qubo");
    Require(energy, "energy");
    *energy = knapqubo::Energy(qubo->value, ToBits(z, n));
  });
}

kq_status kq_hamiltonian_direct(const kq_instance* instance, int64_t a, int64_t b,
                                const uint8_t* z, size_t n, int64_t* energy) {
  return Guard([&] {
    Require(instance, "instance");
    Require(energy, "energy");
    *energy = knapqubo::EvaluateHamiltonianDirect(instance->value, {a, b},
                                                  ToBits(z, n));
  });
}

kq_status kq_qubo_decode(const kq_qubo* qubo, const uint8_t* z, size_t n,
                         kq_decoded* out) {
  return Guard([&] {
    Require(qubo, "qubo");
    Require(out, "out");
    const knapqubo::DecodedSample d = knapqubo::Decode(qubo->value, ToBits(z, n));
    out->total_weight = d.knapsack.total_weight;
    out->total_value = d.knapsack.total_value;
    out->feasible = d.knapsack.feasible ? 1 : 0;
    out->declared_weight = d.declared_weight;
    out->slack_valid = d.slack_valid ? 1 : 0;
    out->weight_consistent = d.weight_consistent ? 1 : 0;
    out->energy = d.energy;
  });
}

kq_status kq_qubo_brute_force(const kq_qubo* qubo, int64_t* ground_energy,
                              size_t* num_ground_states, uint8_t* ground_state) {
  return Guard([&] {
    Require(qubo, "qubo");
    const knapqubo::GroundStates ground = knapqubo::BruteForceQubo(qubo->value);
    if (ground_energy) *ground_energy = ground.energy;
    if (num_ground_states) *num_ground_states = ground.states.size();
    if (ground_state) {
      std::memcpy(ground_state, ground.states.front().data(),
                  ground.states.front().size());
    }
  });
}

// ---- samplers --------------------------------------------------------------

kq_schedule kq_schedule_default(void) {
  const knapqubo::AnnealSchedule d;
  return {d.sweeps, d.beta_initial, d.beta_final, KQ_INTERP_GEOMETRIC, 0};
}

kq_status kq_sample_sa(const kq_qubo* qubo, const kq_schedule* schedule,
                       size_t num_reads, uint64_t seed, kq_sampleset** out) {
  return Guard([&] {
    Require(qubo, "qubo");
    Require(out, "out");
    const knapqubo::AnnealSchedule s =
        schedule ? ToSchedule(*schedule) : knapqubo::AnnealSchedule{};
    *out = Emplace<kq_sampleset>(
        knapqubo::SimulatedAnneal(qubo->value, s, num_reads, seed));
  });
}

kq_status kq_sample_random(const kq_qubo* qubo, size_t num_reads, uint64_t seed,
                           kq_sampleset** out) {
  return Guard([&] {
    Require(qubo, "qubo");
    Require(out, "out");
    *out = Emplace<kq_sampleset>(knapqubo::RandomSample(qubo->value, num_reads, seed));
  });
}

void kq_sampleset_free(kq_sampleset* samples) { delete samples; }

size_t kq_sampleset_num_reads(const kq_sampleset* samples) {
  return samples ? samples->value.num_reads : 0;
}

size_t kq_sampleset_num_records(const kq_sampleset* samples) {
  return samples ? samples->value.records.size() : 0;
}

kq_status kq_sampleset_record(const kq_sampleset* samples, size_t index,
                              uint8_t* z, size_t n, int64_t* energy,
                              size_t* count) {
  return Guard([&] {
    Require(samples, "samples");
    if (index >= samples->value.records.size()) {
      throw ValidationError("record index out of range");
    }
    const knapqubo::SampleRecord& record = samples->value.records[index];
    if (z) {
      if (n != record.z.size()) throw ValidationError("z buffer must hold n entries");
      std::memcpy(z, record.z.data(), n);
    }
    if (energy) *energy = record.energy;
    if (count) *count = record.count;
  });
}

kq_status kq_sampleset_save(const kq_sampleset* samples, const char* path) {
  return Guard([&] {
    Require(samples, "samples");
    Require(path, "path");
    knapqubo::SaveSampleSet(samples->value, path);
  });
}

kq_status kq_sampleset_degeneracy(const kq_sampleset* samples, kq_degeneracy* out) {
  return Guard([&] {
    Require(samples, "samples");
    Require(out, "out");
    const knapqubo::DegeneracyStats stats = knapqubo::ComputeDegeneracy(samples->value);
    out->num_reads = stats.num_reads;
    out->unique_solutions = stats.unique_solutions;
    out->min_energy_multiplicity = stats.min_energy_multiplicity;
  });
}

// ---- adiabatic simulation --------------------------------------------------

kq_status kq_anneal_create(const kq_qubo* qubo, kq_anneal** out) {
  return Guard([&] {
    Require(qubo, "qubo");
    Require(out, "out");
    *out = Emplace<kq_anneal>(knapqubo::AnnealProblem(qubo->value));
  });
}

void kq_anneal_free(kq_anneal* problem) { delete problem; }

size_t kq_anneal_num_qubits(const kq_anneal* problem) {
  return problem ? problem->value.num_qubits() : 0;
}

double kq_anneal_suggested_dt(const kq_anneal* problem) {
  return problem ? knapqubo::SuggestedTimeStep(problem->value) : 0.0;
}

kq_status kq_anneal_apply(const kq_anneal* problem, double s, const double* x,
                          double* y, size_t dimension) {
  return Guard([&] {
    Require(problem, "problem");
    Require(x, "x");
    Require(y, "y");
    problem->value.Apply(s, std::span<const double>(x, dimension),
                         std::span<double>(y, dimension));
  });
}

kq_status kq_gap_scan(const kq_anneal* problem, size_t grid_points, double* s_out,
                      double* gap_out, kq_gap_summary* summary) {
  return Guard([&] {
    Require(problem, "problem");
    const knapqubo::GapProfile profile = knapqubo::GapScan(problem->value, grid_points);
    if (s_out) std::copy(profile.grid.begin(), profile.grid.end(), s_out);
    if (gap_out) std::copy(profile.gaps.begin(), profile.gaps.end(), gap_out);
    if (summary) {
      summary->min_gap = profile.min_gap;
      summary->argmin = profile.argmin;
    }
  });
}

kq_status kq_evolve(const kq_anneal* problem, double anneal_time, double dt,
                    kq_evolution* out) {
  return Guard([&] {
    Require(problem, "problem");
    Require(out, "out");
    const knapqubo::EvolutionResult r = knapqubo::Evolve(problem->value, anneal_time, dt);
    *out = {r.anneal_time, r.success_probability, r.norm_drift, r.steps};
  });
}

kq_status kq_success_curve(const kq_anneal* problem, const double* anneal_times,
                           size_t count, double dt, kq_evolution* out) {
  return Guard([&] {
    Require(problem, "problem");
    Require(anneal_times, "anneal_times");
    Require(out, "out");
    for (size_t i = 0; i < count; ++i) {
      const double t = anneal_times[i];
      const knapqubo::EvolutionResult r =
          knapqubo::Evolve(problem->value, t, std::min(dt, t));
      out[i] = {r.anneal_time, r.success_probability, r.norm_drift, r.steps};
    }
  });
}

// ---- analysis --------------------------------------------------------------

kq_status kq_hamming(const uint8_t* a, const uint8_t* b, size_t n, double* distance) {
  return Guard([&] {
    Require(distance, "distance");
    *distance = knapqubo::Hamming(ToBits(a, n), ToBits(b, n));
  });
}

kq_sweep_config kq_sweep_config_default(void) {
  const knapqubo::SweepSettings d;
  kq_sweep_config config;
  config.q_sampler = KQ_SAMPLER_SA;
  config.s_sampler = KQ_SAMPLER_SA;
  config.schedule = kq_schedule_default();
  config.trials = d.trials;
  config.reads = d.reads;
  config.seed = d.seed;
  config.regime = d.regime;
  config.b = d.b;
  return config;
}

kq_status kq_correct_vector(const kq_qubo* qubo, uint8_t* z, size_t n) {
  return Guard([&] {
    Require(qubo, "qubo");
    Require(z, "z");
    const Bits c = knapqubo::CorrectVector(qubo->value);
    if (n != c.size()) throw ValidationError("z buffer must hold n entries");
    std::memcpy(z, c.data(), n);
  });
}

kq_status kq_compare(const kq_qubo* qubo, const uint8_t* correct, size_t n,
                     const kq_sweep_config* config, uint64_t q_seed,
                     uint64_t s_seed, kq_comparison* out) {
  return Guard([&] {
    Require(qubo, "qubo");
    Require(out, "out");
    const knapqubo::SweepSettings settings = ToSettings(config);
    knapqubo::ComparisonConfig comparison = settings.Comparison();
    comparison.q_seed = q_seed;
    comparison.s_seed = s_seed;
    const Bits c = correct ? ToBits(correct, n) : knapqubo::CorrectVector(qubo->value);
    const knapqubo::ComparisonReport r =
        knapqubo::CompareSolutions(qubo->value, c, comparison);
    *out = {r.d_cq, r.d_cs, r.d_sq, r.trials, r.reads_per_trial, r.best_energy};
  });
}

kq_status kq_sweep_penalty(const kq_instance* instance, const int64_t* b_list,
                           size_t count, const kq_sweep_config* config,
                           kq_table** out) {
  return Guard([&] {
    Require(instance, "instance");
    Require(b_list, "b_list");
    Require(out, "out");
    const auto rows = knapqubo::PenaltySweep(
        instance->value, std::span<const int64_t>(b_list, count), ToSettings(config));
    *out = TableFromCsv(knapqubo::PenaltySweepCsv(rows)).release();
  });
}

kq_status kq_sweep_reads(const kq_instance* instance, const size_t* read_counts,
                         size_t count, const kq_sweep_config* config,
                         kq_table** out) {
  return Guard([&] {
    Require(instance, "instance");
    Require(out, "out");
    std::span<const size_t> reads(knapqubo::kDefaultReadCounts);
    if (read_counts) reads = std::span<const size_t>(read_counts, count);
    const auto rows = knapqubo::ReadsSweep(instance->value, reads, ToSettings(config));
    *out = TableFromCsv(knapqubo::ReadsSweepCsv(rows)).release();
  });
}

kq_status kq_sweep_size(const kq_instance* const* instances, size_t count,
                        const kq_sweep_config* config, kq_table** out) {
  return Guard([&] {
    Require(instances, "instances");
    Require(out, "out");
    std::vector<knapqubo::KnapsackInstance> list;
    for (size_t i = 0; i < count; ++i) {
      Require(instances[i], "instance");
      list.push_back(instances[i]->value);
    }
    const auto rows = knapqubo::SizeSweep(list, ToSettings(config));
    *out = TableFromCsv(knapqubo::SizeSweepCsv(rows)).release();
  });
}

kq_status kq_gap_table(const kq_anneal* problem, size_t grid_points, kq_table** out) {
  return Guard([&] {
    Require(problem, "problem");
    Require(out, "out");
    const knapqubo::GapProfile profile = knapqubo::GapScan(problem->value, grid_points);
    *out = TableFromCsv(knapqubo::GapProfileCsv(profile)).release();
  });
}

kq_status kq_success_table(const kq_anneal* problem, const double* anneal_times,
                           size_t count, double dt, kq_table** out) {
  return Guard([&] {
    Require(problem, "problem");
    Require(anneal_times, "anneal_times");
    Require(out, "out");
    const auto curve = knapqubo::SuccessCurve(
        problem->value, std::span<const double>(anneal_times, count), dt);
    *out = TableFromCsv(knapqubo::SuccessCurveCsv(curve)).release();
  });
}

kq_status kq_sampleset_table(const kq_sampleset* samples, kq_table** out) {
  return Guard([&] {
    Require(samples, "samples");
    Require(out, "out");
    *out = TableFromCsv(knapqubo::ExportSampleSet(samples->value)).release();
  });
}

void kq_table_free(kq_table* table) { delete table; }

size_t kq_table_num_rows(const kq_table* table) { return table ? table->rows.size() : 0; }

size_t kq_table_num_columns(const kq_table* table) {
  return table ? table->columns.size() : 0;
}

const char* kq_table_column_name(const kq_table* table, size_t column) {
  if (!table || column >= table->columns.size()) return "";
  return table->columns[column].c_str();
}

const char* kq_table_cell(const kq_table* table, size_t row, size_t column) {
  if (!table || row >= table->rows.size() || column >= table->rows[row].size()) {
    return nullptr;
  }
  return table->rows[row][column].c_str();
}

kq_status kq_table_write_csv(const kq_table* table, const char* path) {
  return Guard([&] {
    Require(table, "table");
    Require(path, "path");
    std::FILE* file = std::fopen(path, "wb");
    if (!file) throw knapqubo::IoError(std::string("cannot write '") + path + "'");
    const std::string csv = TableToCsv(*table);
    const bool ok = std::fwrite(csv.data(), 1, csv.size(), file) == csv.size();
    if (std::fclose(file) != 0 || !ok) {
      throw knapqubo::IoError(std::string("write failed for '") + path + "'");
    }
  });
}

kq_status kq_table_to_csv(const kq_table* table, char* buffer, size_t capacity,
                          size_t* needed) {
  if (table == nullptr) return Fail(KQ_ERR_VALIDATION, "table is NULL");
  return CopyOut(TableToCsv(*table), buffer, capacity, needed);
}

}  // extern "C"
