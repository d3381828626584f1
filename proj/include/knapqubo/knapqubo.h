/*
 * Copyright 2026 The knapqubo Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to knapqubo: knapsack instances, their penalty QUBO encoding,
 * classical and annealing samplers, a small adiabatic-evolution simulator and
 * the Hamming-distance experiment sweeps.
 *
 * Conventions:
 *   - Every fallible call returns a kq_status. On failure, kq_last_error()
 *     returns a message for the calling thread, valid until its next call.
 *   - Objects are opaque handles created by kq_*_create/load/... and released
 *     with the matching kq_*_free. Free functions accept NULL.
 *   - Binary vectors are arrays of uint8_t holding 0 or 1, in the variable
 *     order (x_1..x_N, y_1..y_W).
 *   - Output strings are copied into caller buffers with kq_copy semantics:
 *     *needed receives the size including the terminating NUL; if capacity is
 *     too small nothing but *needed is written and KQ_ERR_BUFFER is returned.
 */

#ifndef KNAPQUBO_KNAPQUBO_H_
#define KNAPQUBO_KNAPQUBO_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(KNAPQUBO_BUILDING)
#    define KQ_API __declspec(dllexport)
#  else
#    define KQ_API __declspec(dllimport)
#  endif
#else
#  define KQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; 2..4 match the CLI exit codes. */
typedef enum kq_status {
  KQ_OK = 0,
  KQ_ERR_VALIDATION = 2,
  KQ_ERR_SIZE_LIMIT = 3,
  KQ_ERR_NUMERICAL = 4,
  KQ_ERR_IO = 5,
  KQ_ERR_BUFFER = 6,
  KQ_ERR_INTERNAL = 7
} kq_status;

typedef struct kq_instance kq_instance;
typedef struct kq_qubo kq_qubo;
typedef struct kq_sampleset kq_sampleset;
typedef struct kq_anneal kq_anneal;
typedef struct kq_table kq_table;

KQ_API const char* kq_version(void);
KQ_API const char* kq_last_error(void);

/* ---- knapsack instances ------------------------------------------------ */

typedef struct kq_generator_params {
  size_t n_items;
  int64_t weight_min, weight_max;
  int64_t value_min, value_max;
  int64_t capacity;      /* 0 selects the largest W with N + W <= variable_cap */
  int64_t variable_cap;  /* 0 means the default of 64 */
  uint64_t seed;
  const char* id;        /* NULL means "random" */
} kq_generator_params;

KQ_API kq_status kq_instance_create(const char* id, const int64_t* weights,
                                    const int64_t* values, size_t n_items,
                                    int64_t capacity, kq_instance** out);
KQ_API kq_status kq_instance_generate(const kq_generator_params* params,
                                      kq_instance** out);
/* index 0..3 selects catalog instance A..D. */
KQ_API kq_status kq_instance_catalog(uint64_t seed, size_t index,
                                     kq_instance** out);
KQ_API kq_status kq_instance_load(const char* path, kq_instance** out);
KQ_API kq_status kq_instance_save(const kq_instance* instance, const char* path);
KQ_API kq_status kq_instance_serialize(const kq_instance* instance, char* buffer,
                                       size_t capacity, size_t* needed);
KQ_API void kq_instance_free(kq_instance* instance);

KQ_API const char* kq_instance_id(const kq_instance* instance);
KQ_API size_t kq_instance_num_items(const kq_instance* instance);
KQ_API int64_t kq_instance_capacity(const kq_instance* instance);
KQ_API int64_t kq_instance_weight(const kq_instance* instance, size_t item);
KQ_API int64_t kq_instance_value(const kq_instance* instance, size_t item);

typedef enum kq_solve_method {
  KQ_SOLVE_DP = 0,
  KQ_SOLVE_BRANCH_BOUND = 1,
  KQ_SOLVE_BRUTE_FORCE = 2
} kq_solve_method;

typedef struct kq_solution {
  int64_t total_weight;
  int64_t total_value;
  int feasible;
} kq_solution;

/* selection must hold kq_instance_num_items() entries. */
KQ_API kq_status kq_solve(const kq_instance* instance, kq_solve_method method,
                          uint8_t* selection, size_t selection_len,
                          kq_solution* out);

/* ---- QUBO encoding ----------------------------------------------------- */

#define KQ_ENCODE_ALLOW_EMPTY_OPTIMUM 0x1u

/* regime 1..3: A = B max(v) + 2, A = 2 B max(v), A = 100 B max(v). */
KQ_API kq_status kq_penalty_regime(const kq_instance* instance, int64_t b,
                                   int regime, int64_t* a_out);
KQ_API kq_status kq_encode(const kq_instance* instance, int64_t a, int64_t b,
                           unsigned flags, kq_qubo** out);
KQ_API kq_status kq_qubo_load(const char* path, kq_qubo** out);
KQ_API kq_status kq_qubo_save(const kq_qubo* qubo, const char* path);
KQ_API void kq_qubo_free(kq_qubo* qubo);

KQ_API size_t kq_qubo_dimension(const kq_qubo* qubo);
KQ_API int64_t kq_qubo_offset(const kq_qubo* qubo);
/* Symmetric matrix entry Q_ij (diagonal kept) and linear coefficient b_i. */
KQ_API int64_t kq_qubo_quadratic(const kq_qubo* qubo, size_t i, size_t j);
KQ_API int64_t kq_qubo_linear(const kq_qubo* qubo, size_t i);
KQ_API size_t kq_qubo_num_warnings(const kq_qubo* qubo);
KQ_API const char* kq_qubo_warning(const kq_qubo* qubo, size_t index);

KQ_API kq_status kq_qubo_energy(const kq_qubo* qubo, const uint8_t* z, size_t n,
                                int64_t* energy);
/* Literal penalty Hamiltonian of the source instance; reference for energy. */
KQ_API kq_status kq_hamiltonian_direct(const kq_instance* instance, int64_t a,
                                       int64_t b, const uint8_t* z, size_t n,
                                       int64_t* energy);

typedef struct kq_decoded {
  int64_t total_weight;
  int64_t total_value;
  int feasible;
  int64_t declared_weight;
  int slack_valid;
  int weight_consistent;
  int64_t energy;
} kq_decoded;

KQ_API kq_status kq_qubo_decode(const kq_qubo* qubo, const uint8_t* z, size_t n,
                                kq_decoded* out);

/* Exhaustive minimisation (n <= 26). ground_state, if not NULL, receives the
 * lexicographically smallest minimiser (n entries). */
KQ_API kq_status kq_qubo_brute_force(const kq_qubo* qubo, int64_t* ground_energy,
                                     size_t* num_ground_states,
                                     uint8_t* ground_state);

/* ---- samplers ---------------------------------------------------------- */

typedef enum kq_interpolation {
  KQ_INTERP_LINEAR = 0,
  KQ_INTERP_GEOMETRIC = 1
} kq_interpolation;

typedef struct kq_schedule {
  size_t sweeps;
  double beta_initial;
  double beta_final;
  kq_interpolation interpolation;
  int record_best_seen;
} kq_schedule;

/* sweeps 1000, beta 0.01 -> 10 geometric, final-state recording. */
KQ_API kq_schedule kq_schedule_default(void);

KQ_API kq_status kq_sample_sa(const kq_qubo* qubo, const kq_schedule* schedule,
                              size_t num_reads, uint64_t seed, kq_sampleset** out);
KQ_API kq_status kq_sample_random(const kq_qubo* qubo, size_t num_reads,
                                  uint64_t seed, kq_sampleset** out);
KQ_API void kq_sampleset_free(kq_sampleset* samples);

KQ_API size_t kq_sampleset_num_reads(const kq_sampleset* samples);
/* Records are distinct vectors sorted by (energy, z); record 0 is the best. */
KQ_API size_t kq_sampleset_num_records(const kq_sampleset* samples);
KQ_API kq_status kq_sampleset_record(const kq_sampleset* samples, size_t index,
                                     uint8_t* z, size_t n, int64_t* energy,
                                     size_t* count);
KQ_API kq_status kq_sampleset_save(const kq_sampleset* samples, const char* path);

typedef struct kq_degeneracy {
  size_t num_reads;
  size_t unique_solutions;
  size_t min_energy_multiplicity;
} kq_degeneracy;

KQ_API kq_status kq_sampleset_degeneracy(const kq_sampleset* samples,
                                         kq_degeneracy* out);

/* ---- adiabatic simulation ---------------------------------------------- */

/* n <= 20 qubits for gap scans; evolution requires n <= 16. */
KQ_API kq_status kq_anneal_create(const kq_qubo* qubo, kq_anneal** out);
KQ_API void kq_anneal_free(kq_anneal* problem);
KQ_API size_t kq_anneal_num_qubits(const kq_anneal* problem);
KQ_API double kq_anneal_suggested_dt(const kq_anneal* problem);

/* y = ((1 - s) H_i + s H_f) x on 2^n real amplitudes. */
KQ_API kq_status kq_anneal_apply(const kq_anneal* problem, double s,
                                 const double* x, double* y, size_t dimension);

typedef struct kq_gap_summary {
  double min_gap;
  double argmin;
} kq_gap_summary;

/* s_out and gap_out, if not NULL, receive grid_points entries. */
KQ_API kq_status kq_gap_scan(const kq_anneal* problem, size_t grid_points,
                             double* s_out, double* gap_out,
                             kq_gap_summary* summary);

typedef struct kq_evolution {
  double anneal_time;
  double success_probability;
  double norm_drift;
  size_t steps;
} kq_evolution;

KQ_API kq_status kq_evolve(const kq_anneal* problem, double anneal_time,
                           double dt, kq_evolution* out);
/* out receives `count` entries, one per anneal time. */
KQ_API kq_status kq_success_curve(const kq_anneal* problem,
                                  const double* anneal_times, size_t count,
                                  double dt, kq_evolution* out);

/* ---- analysis ---------------------------------------------------------- */

KQ_API kq_status kq_hamming(const uint8_t* a, const uint8_t* b, size_t n,
                            double* distance);

typedef enum kq_sampler_kind {
  KQ_SAMPLER_SA = 0,
  KQ_SAMPLER_RANDOM = 1
} kq_sampler_kind;

typedef struct kq_sweep_config {
  kq_sampler_kind q_sampler;
  kq_sampler_kind s_sampler;
  kq_schedule schedule;
  size_t trials;
  size_t reads;
  uint64_t seed;
  int regime;  /* penalties for the reads and size sweeps */
  int64_t b;
} kq_sweep_config;

/* q and s samplers SA, default schedule, 10 trials of 100 reads, seed 1,
 * regime 2, B = 1. */
KQ_API kq_sweep_config kq_sweep_config_default(void);

typedef struct kq_comparison {
  double d_cq;
  double d_cs;
  double d_sq;
  size_t trials;
  size_t reads_per_trial;
  int64_t best_energy;
} kq_comparison;

/* correct may be NULL to use the reference ground-state vector. The q and s
 * samplers use seeds q_seed and s_seed. */
KQ_API kq_status kq_compare(const kq_qubo* qubo, const uint8_t* correct,
                            size_t n, const kq_sweep_config* config,
                            uint64_t q_seed, uint64_t s_seed,
                            kq_comparison* out);
KQ_API kq_status kq_correct_vector(const kq_qubo* qubo, uint8_t* z, size_t n);

/* Result tables: CSV-shaped, cells kept as text. */
KQ_API kq_status kq_sweep_penalty(const kq_instance* instance,
                                  const int64_t* b_list, size_t count,
                                  const kq_sweep_config* config, kq_table** out);
/* read_counts NULL selects {100, 500, 1000, 5000}. */
KQ_API kq_status kq_sweep_reads(const kq_instance* instance,
                                const size_t* read_counts, size_t count,
                                const kq_sweep_config* config, kq_table** out);
KQ_API kq_status kq_sweep_size(const kq_instance* const* instances, size_t count,
                               const kq_sweep_config* config, kq_table** out);

KQ_API kq_status kq_gap_table(const kq_anneal* problem, size_t grid_points,
                              kq_table** out);
KQ_API kq_status kq_success_table(const kq_anneal* problem,
                                  const double* anneal_times, size_t count,
                                  double dt, kq_table** out);
KQ_API kq_status kq_sampleset_table(const kq_sampleset* samples, kq_table** out);

KQ_API void kq_table_free(kq_table* table);
KQ_API size_t kq_table_num_rows(const kq_table* table);
KQ_API size_t kq_table_num_columns(const kq_table* table);
KQ_API const char* kq_table_column_name(const kq_table* table, size_t column);
/* NULL when row or column is out of range. */
KQ_API const char* kq_table_cell(const kq_table* table, size_t row, size_t column);
KQ_API kq_status kq_table_write_csv(const kq_table* table, const char* path);
KQ_API kq_status kq_table_to_csv(const kq_table* table, char* buffer,
                                 size_t capacity, size_t* needed);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* KNAPQUBO_KNAPQUBO_H_ */
