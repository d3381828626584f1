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

// knapqubo command-line front end. Every file-producing run writes a
// manifest next to its output that `knapqubo replay` can re-execute.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "knapqubo/knapqubo.h"

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

constexpr int kExitFailure = 1;

class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

void Check(kq_status status) {
  if (status == KQ_OK) return;
  const int code = status <= KQ_ERR_IO ? static_cast<int>(status) : kExitFailure;
  throw CliError(code, kq_last_error());
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Instance = std::unique_ptr<kq_instance, Deleter<kq_instance, kq_instance_free>>;
using Qubo = std::unique_ptr<kq_qubo, Deleter<kq_qubo, kq_qubo_free>>;
using Samples = std::unique_ptr<kq_sampleset, Deleter<kq_sampleset, kq_sampleset_free>>;
using Anneal = std::unique_ptr<kq_anneal, Deleter<kq_anneal, kq_anneal_free>>;
using Table = std::unique_ptr<kq_table, Deleter<kq_table, kq_table_free>>;

// 64-bit FNV-1a; stable across platforms, unlike std::hash.
std::string Fingerprint(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char text[17];
  std::snprintf(text, sizeof text, "%016llx", static_cast<unsigned long long>(h));
  return text;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(KQ_ERR_IO, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << bytes;
  if (!out) throw CliError(KQ_ERR_IO, "cannot write '" + path.string() + "'");
}

std::string BitString(const std::vector<std::uint8_t>& z) {
  std::string s;
  for (std::uint8_t bit : z) s += bit ? '1' : '0';
  return s;
}

// One invocation: its arguments, inputs, outputs and manifest.
struct Run {
  std::string command;
  std::vector<std::string> args;
  fs::path out_dir;
  json parameters = json::object();
  json inputs = json::array();
  json outputs = json::array();
  json summary = json::object();

  fs::path Output(const std::string& name) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
      throw CliError(KQ_ERR_IO, "cannot create output directory '" +
                                    out_dir.string() + "': " + ec.message());
    }
    return out_dir / name;
  }

  // Records a file already written under out_dir.
  void Recorded(const fs::path& path) {
    outputs.push_back({{"file", path.filename().string()},
                       {"fnv1a64", Fingerprint(ReadFile(path))}});
  }

  void WriteManifest(const std::string& stem) {
    json manifest = {{"tool", "knapqubo"},
                     {"version", kq_version()},
                     {"command", command},
                     {"args", args},
                     {"parameters", parameters},
                     {"inputs", inputs},
                     {"outputs", outputs},
                     {"summary", summary}};
    const fs::path path = Output(stem + ".manifest.json");
    WriteFile(path, manifest.dump(2) + "\n");
    std::cout << "manifest: " << path.string() << "\n";
  }
};

std::string DefaultOutDir() {
  const char* env = std::getenv("KNAPQUBO_OUT");
  return env && *env ? env : "knapqubo_out";
}

// ---- shared flag groups ----------------------------------------------------

struct InstanceFlags {
  std::string instance;
  std::uint64_t catalog_seed = 1;

  void Add(CLI::App* app, bool required = true) {
    auto* opt = app->add_option(
        "--instance", instance,
        "instance file, 'example' (alias 'tiny') for the 2-item example, or "
        "catalog name A-D");
    if (required) opt->required();
    app->add_option("--catalog-seed", catalog_seed, "seed for catalog instances A-D");
  }
};

Instance ResolveInstance(const std::string& spec, std::uint64_t catalog_seed,
                         Run& run) {
  kq_instance* raw = nullptr;
  if (fs::is_regular_file(spec)) {
    Check(kq_instance_load(spec.c_str(), &raw));
    const std::string absolute = fs::absolute(spec).lexically_normal().string();
    run.inputs.push_back({{"path", absolute}, {"fnv1a64", Fingerprint(ReadFile(spec))}});
    for (std::string& arg : run.args) {
      if (arg == spec) arg = absolute;
    }
    return Instance(raw);
  }
  if (spec == "example" || spec == "tiny") {
    const std::int64_t weights[] = {1, 2};
    const std::int64_t values[] = {3, 1};
    Check(kq_instance_create(spec.c_str(), weights, values, 2, 2, &raw));
    return Instance(raw);
  }
  if (spec.size() == 1 && spec[0] >= 'A' && spec[0] <= 'D') {
    Check(kq_instance_catalog(catalog_seed, static_cast<std::size_t>(spec[0] - 'A'),
                              &raw));
    return Instance(raw);
  }
  throw CliError(KQ_ERR_IO, "instance '" + spec +
                                "' is neither a file nor a built-in name "
                                "(example, tiny, A, B, C, D)");
}

struct PenaltyFlags {
  std::optional<std::int64_t> a;
  std::int64_t b = 1;
  std::optional<int> regime;

  void Add(CLI::App* app) {
    app->add_option("--A", a, "constraint penalty A (needs 0 < B max(v_i) < A)");
    app->add_option("--B", b, "objective weight B")->capture_default_str();
    app->add_option("--regime", regime,
                    "1: A = B max(v)+2, 2: A = 2 B max(v), 3: A = 100 B max(v) "
                    "(default 2 when --A is absent)");
  }

  std::int64_t ResolveA(const kq_instance* instance) const {
    if (a && regime) throw CliError(KQ_ERR_VALIDATION, "give either --A or --regime, not both");
    if (a) return *a;
    std::int64_t value = 0;
    Check(kq_penalty_regime(instance, b, regime.value_or(2), &value));
    return value;
  }
};

struct ScheduleFlags {
  kq_schedule schedule = kq_schedule_default();
  std::string interpolation = "geometric";
  bool best_seen = false;

  void Add(CLI::App* app) {
    app->add_option("--sweeps", schedule.sweeps, "Metropolis sweeps per read")
        ->capture_default_str();
    app->add_option("--beta-initial", schedule.beta_initial, "initial inverse temperature")
        ->capture_default_str();
    app->add_option("--beta-final", schedule.beta_final, "final inverse temperature")
        ->capture_default_str();
    app->add_option("--interpolation", interpolation, "beta schedule shape")
        ->check(CLI::IsMember({"linear", "geometric"}))
        ->capture_default_str();
    app->add_flag("--best-seen", best_seen, "record the best state seen in each read");
  }

  kq_schedule Resolve() const {
    kq_schedule s = schedule;
    s.interpolation = interpolation == "linear" ? KQ_INTERP_LINEAR : KQ_INTERP_GEOMETRIC;
    s.record_best_seen = best_seen ? 1 : 0;
    return s;
  }

  json Describe() const {
    const kq_schedule s = Resolve();
    return {{"sweeps", s.sweeps},
            {"beta_initial", s.beta_initial},
            {"beta_final", s.beta_final},
            {"interpolation", interpolation},
            {"record", best_seen ? "best_seen" : "final"}};
  }
};

// A QUBO either loaded from an export file or encoded from an instance.
struct ProblemFlags {
  InstanceFlags instance;
  PenaltyFlags penalties;
  std::string qubo_path;
  bool allow_empty = false;

  void Add(CLI::App* app) {
    instance.Add(app, false);
    penalties.Add(app);
    app->add_option("--qubo", qubo_path, "QUBO export file instead of --instance");
    app->add_flag("--allow-empty-optimum", allow_empty,
                  "encode instances where no item fits (adds a warning)");
  }

  Qubo Resolve(Run& run) const {
    kq_qubo* raw = nullptr;
    if (!qubo_path.empty()) {
      if (!instance.instance.empty()) {
        throw CliError(KQ_ERR_VALIDATION, "give either --qubo or --instance, not both");
      }
      Check(kq_qubo_load(qubo_path.c_str(), &raw));
      const std::string absolute = fs::absolute(qubo_path).lexically_normal().string();
      run.inputs.push_back(
          {{"path", absolute}, {"fnv1a64", Fingerprint(ReadFile(qubo_path))}});
      for (std::string& arg : run.args) {
        if (arg == qubo_path) arg = absolute;
      }
      run.parameters["qubo"] = absolute;
      return Qubo(raw);
    }
    if (instance.instance.empty()) {
      throw CliError(KQ_ERR_VALIDATION, "one of --instance or --qubo is required");
    }
    Instance inst = ResolveInstance(instance.instance, instance.catalog_seed, run);
    const std::int64_t a = penalties.ResolveA(inst.get());
    Check(kq_encode(inst.get(), a, penalties.b,
                    allow_empty ? KQ_ENCODE_ALLOW_EMPTY_OPTIMUM : 0u, &raw));
    run.parameters["instance"] = kq_instance_id(inst.get());
    run.parameters["A"] = a;
    run.parameters["B"] = penalties.b;
    return Qubo(raw);
  }
};

void PrintWarnings(const kq_qubo* qubo) {
  for (std::size_t i = 0; i < kq_qubo_num_warnings(qubo); ++i) {
    std::cerr << "warning: " << kq_qubo_warning(qubo, i) << "\n";
  }
}

kq_sampler_kind SamplerKind(const std::string& name) {
  return name == "random" ? KQ_SAMPLER_RANDOM : KQ_SAMPLER_SA;
}

struct SweepFlags {
  ScheduleFlags schedule;
  std::size_t trials = 10;
  std::size_t reads = 100;
  std::string q_sampler = "sa";
  std::string s_sampler = "sa";

  void Add(CLI::App* app) {
    schedule.Add(app);
    app->add_option("--trials", trials, "independent trials averaged per row")
        ->capture_default_str();
    app->add_option("--reads", reads, "reads per trial")->capture_default_str();
    app->add_option("--q-sampler", q_sampler, "sampler standing in for the annealer")
        ->check(CLI::IsMember({"sa", "random"}))
        ->capture_default_str();
    app->add_option("--s-sampler", s_sampler, "classical sampler")
        ->check(CLI::IsMember({"sa", "random"}))
        ->capture_default_str();
  }

  kq_sweep_config Config(std::uint64_t seed) const {
    kq_sweep_config config = kq_sweep_config_default();
    config.q_sampler = SamplerKind(q_sampler);
    config.s_sampler = SamplerKind(s_sampler);
    config.schedule = schedule.Resolve();
    config.trials = trials;
    config.reads = reads;
    config.seed = seed;
    return config;
  }

  json Describe() const {
    return {{"schedule", schedule.Describe()},
            {"trials", trials},
            {"reads", reads},
            {"q_sampler", q_sampler},
            {"s_sampler", s_sampler}};
  }
};

void WriteTable(Run& run, const kq_table* table, const std::string& name) {
  const fs::path path = run.Output(name);
  Check(kq_table_write_csv(table, path.string().c_str()));
  run.Recorded(path);
  std::cout << "wrote " << path.string() << " (" << kq_table_num_rows(table)
            << " rows)\n";
}

// ---- subcommands -----------------------------------------------------------

struct GenCommand {
  std::size_t n = 0;
  std::int64_t wmin = 5, wmax = 20, vmin = 20, vmax = 60;
  std::string cap = "auto";
  std::int64_t variable_cap = 64;
  std::uint64_t seed = 1;
  std::string id = "random";

  void Add(CLI::App* app) {
    app->add_option("--n", n, "number of items")->required();
    app->add_option("--wmin", wmin, "smallest weight")->capture_default_str();
    app->add_option("--wmax", wmax, "largest weight")->capture_default_str();
    app->add_option("--vmin", vmin, "smallest value")->capture_default_str();
    app->add_option("--vmax", vmax, "largest value")->capture_default_str();
    app->add_option("--cap", cap, "capacity W, or 'auto' for the largest W with N + W <= cap")
        ->capture_default_str();
    app->add_option("--variable-cap", variable_cap, "limit on N + W")->capture_default_str();
    app->add_option("--seed", seed, "generator seed")->capture_default_str();
    app->add_option("--id", id, "instance id")->capture_default_str();
  }

  void Execute(Run& run) const {
    std::int64_t capacity = 0;
    if (cap != "auto") {
      try {
        std::size_t used = 0;
        capacity = std::stoll(cap, &used);
        if (used != cap.size() || capacity < 1) throw std::invalid_argument(cap);
      } catch (const std::exception&) {
        throw CliError(KQ_ERR_VALIDATION, "--cap must be 'auto' or a positive integer");
      }
    }
    const kq_generator_params params{n,        wmin,         wmax, vmin, vmax,
                                     capacity, variable_cap, seed, id.c_str()};
    kq_instance* raw = nullptr;
    Check(kq_instance_generate(&params, &raw));
    Instance instance(raw);
    run.parameters = {{"n", n},       {"weight_range", {wmin, wmax}},
                      {"value_range", {vmin, vmax}}, {"cap", cap},
                      {"variable_cap", variable_cap}, {"seed", seed},
                      {"id", id}};
    const fs::path path = run.Output(id + ".json");
    Check(kq_instance_save(instance.get(), path.string().c_str()));
    run.Recorded(path);
    std::cout << path.string() << "\n";
    run.WriteManifest(id);
  }
};

struct SolveCommand {
  InstanceFlags instance;
  std::string method = "dp";

  void Add(CLI::App* app) {
    instance.Add(app);
    app->add_option("--method", method, "exact solver")
        ->check(CLI::IsMember({"dp", "bb", "brute"}))
        ->capture_default_str();
  }

  void Execute(Run& run) const {
    Instance inst = ResolveInstance(instance.instance, instance.catalog_seed, run);
    const kq_solve_method m = method == "bb"      ? KQ_SOLVE_BRANCH_BOUND
                              : method == "brute" ? KQ_SOLVE_BRUTE_FORCE
                                                  : KQ_SOLVE_DP;
    std::vector<std::uint8_t> selection(kq_instance_num_items(inst.get()));
    kq_solution solution{};
    const auto start = std::chrono::steady_clock::now();
    Check(kq_solve(inst.get(), m, selection.data(), selection.size(), &solution));
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - start;
    std::cout << "instance: " << kq_instance_id(inst.get())
              << " (N=" << selection.size() << ", W=" << kq_instance_capacity(inst.get())
              << ")\n"
              << "method: " << method << "\n"
              << "value: " << solution.total_value << "\n"
              << "weight: " << solution.total_weight << "\n"
              << "selection: " << BitString(selection) << "\n"
              << "feasible: " << (solution.feasible ? "yes" : "no") << "\n"
              << "wall_time_ms: " << elapsed.count() << "\n";
  }
};

struct EncodeCommand {
  ProblemFlags problem;

  void Add(CLI::App* app) { problem.Add(app); }

  void Execute(Run& run) const {
    if (!problem.qubo_path.empty()) {
      throw CliError(KQ_ERR_VALIDATION, "encode reads --instance, not --qubo");
    }
    Qubo qubo = problem.Resolve(run);
    PrintWarnings(qubo.get());
    const std::string stem = run.parameters["instance"].get<std::string>();
    const fs::path path = run.Output(stem + ".qubo");
    Check(kq_qubo_save(qubo.get(), path.string().c_str()));
    run.Recorded(path);
    std::cout << "dimension: " << kq_qubo_dimension(qubo.get()) << "\n"
              << "A: " << run.parameters["A"] << "\nB: " << run.parameters["B"] << "\n"
              << "wrote " << path.string() << "\n";
    run.WriteManifest(stem + ".qubo");
  }
};

struct SaCommand {
  ProblemFlags problem;
  ScheduleFlags schedule;
  std::size_t reads = 100;
  std::uint64_t seed = 1;
  std::string sampler = "sa";

  void Add(CLI::App* app) {
    problem.Add(app);
    schedule.Add(app);
    app->add_option("--reads", reads, "number of reads")->capture_default_str();
    app->add_option("--seed", seed, "sampler seed")->capture_default_str();
    app->add_option("--sampler", sampler, "sa, or random for the uniform baseline")
        ->check(CLI::IsMember({"sa", "random"}))
        ->capture_default_str();
  }

  void Execute(Run& run) const {
    Qubo qubo = problem.Resolve(run);
    PrintWarnings(qubo.get());
    const kq_schedule s = schedule.Resolve();
    kq_sampleset* raw = nullptr;
    if (sampler == "random") {
      Check(kq_sample_random(qubo.get(), reads, seed, &raw));
    } else {
      Check(kq_sample_sa(qubo.get(), &s, reads, seed, &raw));
    }
    Samples samples(raw);
    run.parameters["sampler"] = sampler;
    run.parameters["schedule"] = schedule.Describe();
    run.parameters["reads"] = reads;
    run.parameters["seed"] = seed;

    const fs::path path = run.Output("samples.csv");
    Check(kq_sampleset_save(samples.get(), path.string().c_str()));
    run.Recorded(path);

    const std::size_t n = kq_qubo_dimension(qubo.get());
    std::vector<std::uint8_t> z(n);
    std::int64_t energy = 0;
    std::size_t count = 0;
    Check(kq_sampleset_record(samples.get(), 0, z.data(), n, &energy, &count));
    kq_degeneracy stats{};
    Check(kq_sampleset_degeneracy(samples.get(), &stats));
    run.summary = {{"best_energy", energy},
                   {"best_z", BitString(z)},
                   {"unique_solutions", stats.unique_solutions},
                   {"min_energy_multiplicity", stats.min_energy_multiplicity}};
    std::cout << "best_energy: " << energy << "\nbest_z: " << BitString(z)
              << "\nunique_solutions: " << stats.unique_solutions
              << "\nmin_energy_multiplicity: " << stats.min_energy_multiplicity << "\n";
    kq_decoded decoded{};
    if (kq_qubo_decode(qubo.get(), z.data(), n, &decoded) == KQ_OK) {
      std::cout << "best_value: " << decoded.total_value
                << "\nbest_valid: "
                << (decoded.slack_valid && decoded.weight_consistent && decoded.feasible
                        ? "yes"
                        : "no")
                << "\n";
    }
    std::cout << "wrote " << path.string() << "\n";
    run.WriteManifest("samples");
  }
};

struct GapCommand {
  ProblemFlags problem;
  std::size_t grid = 101;

  void Add(CLI::App* app) {
    problem.Add(app);
    app->add_option("--grid", grid, "uniform grid points over s in [0, 1]")
        ->capture_default_str();
  }

  void Execute(Run& run) const {
    Qubo qubo = problem.Resolve(run);
    PrintWarnings(qubo.get());
    kq_anneal* raw = nullptr;
    Check(kq_anneal_create(qubo.get(), &raw));
    Anneal anneal(raw);
    std::vector<double> s(grid);
    std::vector<double> gaps(grid);
    kq_gap_summary summary{};
    Check(kq_gap_scan(anneal.get(), grid, s.data(), gaps.data(), &summary));
    run.parameters["grid"] = grid;

    std::ostringstream csv;
    csv.precision(17);
    csv << "s,gap\n";
    for (std::size_t i = 0; i < grid; ++i) csv << s[i] << "," << gaps[i] << "\n";
    const fs::path path = run.Output("gap.csv");
    WriteFile(path, csv.str());
    run.Recorded(path);
    run.summary = {{"min_gap", summary.min_gap}, {"argmin_s", summary.argmin}};
    std::cout.precision(17);
    std::cout << "wrote " << path.string() << " (" << grid << " rows)\n"
              << "min_gap: " << summary.min_gap << " at s = " << summary.argmin << "\n";
    run.WriteManifest("gap");
  }
};

struct EvolveCommand {
  ProblemFlags problem;
  std::vector<double> times;
  std::optional<double> dt;

  void Add(CLI::App* app) {
    problem.Add(app);
    app->add_option("--T", times, "anneal time; repeat for a success curve")->required();
    app->add_option("--dt", dt, "time step (default: suggested step 1/(max|E| + n))");
  }

  void Execute(Run& run) const {
    Qubo qubo = problem.Resolve(run);
    PrintWarnings(qubo.get());
    kq_anneal* raw = nullptr;
    Check(kq_anneal_create(qubo.get(), &raw));
    Anneal anneal(raw);
    const double suggested = kq_anneal_suggested_dt(anneal.get());
    const double step = dt.value_or(suggested);
    if (step > suggested) {
      std::cerr << "warning: dt = " << step << " exceeds the stiffness-based step "
                << suggested << " (1/(max|E| + n)); consider --dt " << suggested
                << "\n";
    }
    run.parameters["T"] = times;
    run.parameters["dt"] = step;

    kq_table* table = nullptr;
    Check(kq_success_table(anneal.get(), times.data(), times.size(), step, &table));
    Table curve(table);
    WriteTable(run, curve.get(), "success.csv");
    for (std::size_t r = 0; r < kq_table_num_rows(curve.get()); ++r) {
      std::cout << "T=" << kq_table_cell(curve.get(), r, 0)
                << " success_probability=" << kq_table_cell(curve.get(), r, 1)
                << " norm_drift=" << kq_table_cell(curve.get(), r, 2) << "\n";
    }
    run.WriteManifest("success");
  }
};

struct SweepPenaltyCommand {
  InstanceFlags instance;
  SweepFlags sweep;
  std::vector<std::int64_t> b_list = {1, 10, 100};
  std::uint64_t seed = 1;

  void Add(CLI::App* app) {
    instance.Add(app);
    sweep.Add(app);
    app->add_option("--B", b_list, "objective weights B; repeat for several")
        ->capture_default_str();
    app->add_option("--seed", seed, "sweep seed")->capture_default_str();
  }

  void Execute(Run& run) const {
    Instance inst = ResolveInstance(instance.instance, instance.catalog_seed, run);
    const kq_sweep_config config = sweep.Config(seed);
    kq_table* raw = nullptr;
    Check(kq_sweep_penalty(inst.get(), b_list.data(), b_list.size(), &config, &raw));
    Table table(raw);
    run.parameters = sweep.Describe();
    run.parameters["instance"] = kq_instance_id(inst.get());
    run.parameters["B"] = b_list;
    run.parameters["seed"] = seed;
    WriteTable(run, table.get(), "sweep_penalty.csv");
    run.WriteManifest("sweep_penalty");
  }
};

struct SweepReadsCommand {
  InstanceFlags instance;
  SweepFlags sweep;
  std::vector<std::size_t> counts = {100, 500, 1000, 5000};
  int regime = 2;
  std::int64_t b = 1;
  std::uint64_t seed = 1;

  void Add(CLI::App* app) {
    instance.Add(app);
    sweep.Add(app);
    app->add_option("--counts", counts, "read counts; repeat for several")
        ->capture_default_str();
    app->add_option("--regime", regime, "penalty regime 1-3")->capture_default_str();
    app->add_option("--B", b, "objective weight B")->capture_default_str();
    app->add_option("--seed", seed, "sweep seed")->capture_default_str();
  }

  void Execute(Run& run) const {
    Instance inst = ResolveInstance(instance.instance, instance.catalog_seed, run);
    kq_sweep_config config = sweep.Config(seed);
    config.regime = regime;
    config.b = b;
    kq_table* raw = nullptr;
    Check(kq_sweep_reads(inst.get(), counts.data(), counts.size(), &config, &raw));
    Table table(raw);
    run.parameters = sweep.Describe();
    run.parameters["instance"] = kq_instance_id(inst.get());
    run.parameters["counts"] = counts;
    run.parameters["regime"] = regime;
    run.parameters["B"] = b;
    run.parameters["seed"] = seed;
    WriteTable(run, table.get(), "sweep_reads.csv");
    run.WriteManifest("sweep_reads");
  }
};

struct SweepSizeCommand {
  std::vector<std::string> instances;
  bool catalog = false;
  std::optional<std::uint64_t> catalog_seed;
  SweepFlags sweep;
  int regime = 2;
  std::int64_t b = 1;
  std::uint64_t seed = 1;

  void Add(CLI::App* app) {
    app->add_option("--instance", instances, "instance files or names; repeat for several");
    app->add_flag("--catalog", catalog, "use catalog instances A-D");
    app->add_option("--catalog-seed", catalog_seed,
                    "seed for catalog instances (default: --seed)");
    sweep.Add(app);
    app->add_option("--regime", regime, "penalty regime 1-3")->capture_default_str();
    app->add_option("--B", b, "objective weight B")->capture_default_str();
    app->add_option("--seed", seed, "sweep seed")->capture_default_str();
  }

  void Execute(Run& run) const {
    if (catalog == !instances.empty()) {
      throw CliError(KQ_ERR_VALIDATION, "give exactly one of --catalog or --instance");
    }
    const std::uint64_t cseed = catalog_seed.value_or(seed);
    std::vector<Instance> owned;
    if (catalog) {
      for (std::size_t i = 0; i < 4; ++i) {
        kq_instance* raw = nullptr;
        Check(kq_instance_catalog(cseed, i, &raw));
        owned.emplace_back(raw);
      }
    } else {
      for (const std::string& spec : instances) {
        owned.push_back(ResolveInstance(spec, cseed, run));
      }
    }
    std::vector<const kq_instance*> pointers;
    for (const Instance& inst : owned) pointers.push_back(inst.get());
    kq_sweep_config config = sweep.Config(seed);
    config.regime = regime;
    config.b = b;
    kq_table* raw = nullptr;
    Check(kq_sweep_size(pointers.data(), pointers.size(), &config, &raw));
    Table table(raw);
    run.parameters = sweep.Describe();
    run.parameters["catalog"] = catalog;
    run.parameters["catalog_seed"] = cseed;
    run.parameters["regime"] = regime;
    run.parameters["B"] = b;
    run.parameters["seed"] = seed;
    WriteTable(run, table.get(), "sweep_size.csv");
    run.WriteManifest("sweep_size");
  }
};

int Dispatch(std::vector<std::string> args, const std::string& out_override);

struct ReplayCommand {
  std::string manifest_path;

  void Add(CLI::App* app) {
    app->add_option("--manifest", manifest_path, "manifest written by an earlier run")
        ->required();
  }

  int Execute(const std::optional<std::string>& out) const {
    json manifest;
    try {
      manifest = json::parse(ReadFile(manifest_path));
    } catch (const json::exception& e) {
      throw CliError(KQ_ERR_VALIDATION, std::string("malformed manifest: ") + e.what());
    }
    for (const json& input : manifest.at("inputs")) {
      const std::string path = input.at("path").get<std::string>();
      if (Fingerprint(ReadFile(path)) != input.at("fnv1a64").get<std::string>()) {
        throw CliError(KQ_ERR_VALIDATION, "input '" + path + "' changed since the run");
      }
    }
    const fs::path original = fs::path(manifest_path).parent_path();
    const fs::path target = out ? fs::path(*out) : original / "replay";
    if (fs::equivalent(fs::absolute(target).lexically_normal(),
                       fs::absolute(original.empty() ? "." : original).lexically_normal())) {
      throw CliError(KQ_ERR_VALIDATION, "replay --out must differ from the original directory");
    }
    std::vector<std::string> args = manifest.at("args").get<std::vector<std::string>>();
    std::cout << "replaying: knapqubo";
    for (const std::string& a : args) std::cout << " " << a;
    std::cout << "\n";
    const int code = Dispatch(args, target.string());
    if (code != 0) return code;

    int mismatches = 0;
    for (const json& output : manifest.at("outputs")) {
      const std::string name = output.at("file").get<std::string>();
      const fs::path replayed = target / name;
      const bool same = fs::is_regular_file(replayed) &&
                        Fingerprint(ReadFile(replayed)) ==
                            output.at("fnv1a64").get<std::string>() &&
                        (!fs::is_regular_file(original / name) ||
                         ReadFile(original / name) == ReadFile(replayed));
      std::cout << (same ? "identical: " : "DIFFERS: ") << name << "\n";
      mismatches += same ? 0 : 1;
    }
    std::cout << "replay: " << (mismatches == 0 ? "bit-identical" : "mismatch") << "\n";
    return mismatches == 0 ? 0 : kExitFailure;
  }
};

int Dispatch(std::vector<std::string> args, const std::string& out_override) {
  CLI::App app{"knapqubo: knapsack QUBO encoding, sampling and annealing experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kq_version()));
  std::string out_dir = DefaultOutDir();
  std::optional<std::string> replay_out;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_dir, "output directory (default: $KNAPQUBO_OUT or knapqubo_out)");
  };

  GenCommand gen;
  SolveCommand solve;
  EncodeCommand encode;
  SaCommand sa;
  GapCommand gap;
  EvolveCommand evolve;
  SweepPenaltyCommand sweep_penalty;
  SweepReadsCommand sweep_reads;
  SweepSizeCommand sweep_size;
  ReplayCommand replay;

  auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
  gen.Add(gen_cmd);
  add_out(gen_cmd);
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance exactly");
  solve.Add(solve_cmd);
  auto* encode_cmd = app.add_subcommand("encode", "encode an instance as a QUBO");
  encode.Add(encode_cmd);
  add_out(encode_cmd);
  auto* sa_cmd = app.add_subcommand("sa", "sample a QUBO by simulated annealing");
  sa.Add(sa_cmd);
  add_out(sa_cmd);
  auto* gap_cmd = app.add_subcommand("gap", "scan the spectral gap of the annealing Hamiltonian");
  gap.Add(gap_cmd);
  add_out(gap_cmd);
  auto* evolve_cmd = app.add_subcommand("evolve", "simulate annealing and report success probability");
  evolve.Add(evolve_cmd);
  add_out(evolve_cmd);
  auto* sweep_cmd = app.add_subcommand("sweep", "run an experiment sweep");
  sweep_cmd->require_subcommand(1);
  auto* penalty_cmd = sweep_cmd->add_subcommand("penalty", "penalty regimes x B values");
  sweep_penalty.Add(penalty_cmd);
  add_out(penalty_cmd);
  auto* reads_cmd = sweep_cmd->add_subcommand("reads", "best energy versus read count");
  sweep_reads.Add(reads_cmd);
  add_out(reads_cmd);
  auto* size_cmd = sweep_cmd->add_subcommand("size", "Hamming distances versus problem size");
  sweep_size.Add(size_cmd);
  add_out(size_cmd);
  auto* replay_cmd = app.add_subcommand("replay", "re-run a manifest and compare outputs");
  replay.Add(replay_cmd);
  replay_cmd->add_option("--out", replay_out, "directory for the replayed outputs");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : KQ_ERR_VALIDATION;
  }
  if (!out_override.empty()) out_dir = out_override;

  // Recorded arguments omit --out so a replay can redirect its outputs.
  Run run;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--out") {
      ++i;
      continue;
    }
    if (args[i].rfind("--out=", 0) == 0) continue;
    run.args.push_back(args[i]);
  }
  run.out_dir = out_dir;

  if (*replay_cmd) return replay.Execute(replay_out);
  if (*gen_cmd) {
    run.command = "gen";
    gen.Execute(run);
  } else if (*solve_cmd) {
    run.command = "solve";
    solve.Execute(run);
  } else if (*encode_cmd) {
    run.command = "encode";
    encode.Execute(run);
  } else if (*sa_cmd) {
    run.command = "sa";
    sa.Execute(run);
  } else if (*gap_cmd) {
    run.command = "gap";
    gap.Execute(run);
  } else if (*evolve_cmd) {
    run.command = "evolve";
    evolve.Execute(run);
  } else if (*penalty_cmd) {
    run.command = "sweep penalty";
    sweep_penalty.Execute(run);
  } else if (*reads_cmd) {
    run.command = "sweep reads";
    sweep_reads.Execute(run);
  } else if (*size_cmd) {
    run.command = "sweep size";
    sweep_size.Execute(run);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return Dispatch(std::move(args), "");
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
