#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oim/baselines.hpp"
#include "oim/config.hpp"
#include "oim/dynamics.hpp"
#include "oim/graph.hpp"
#include "oim/pvt.hpp"
#include "oim/shil.hpp"

namespace oim {

struct ProblemSpec {
    enum class Source { File, Generate };
    Source source = Source::Generate;
    std::string file;
    int rows = 18;
    int cols = 18;
    WeightRule::Kind weights = WeightRule::Kind::RandomSign;
    std::uint64_t seed = 42;

    Graph build() const;
    std::string describe() const;
};

struct PowerModel {
    double node_power_w = 458.9e-3; // 324-node reference design total node power
    double shil_power_w[3] = {0.0, 6.0e-3, 33.0e-3}; // indexed by ShilKind
    double f1_hz = kNominalF1Hz;

    double shil_power(ShilKind kind) const { return shil_power_w[static_cast<int>(kind)]; }
};

// (node power + SHIL power of the kind) * cycles / f1.
double energy_to_solution(const PowerModel& pm, ShilKind kind, double cycles);

struct RunMetrics {
    double cut = 0.0;
    double accuracy = 0.0;
    bool binarized = false;
    bool forced_round = false; // spins rounded from unsettled phases
    std::optional<double> cycles_to_solution;
    std::optional<double> solution_time_s;
    std::optional<double> energy_to_solution_j;
    std::uint64_t seed = 0;
    std::string scenario_tag;
};

struct RunConfig {
    ProblemSpec problem;
    ShilKind kind = ShilKind::Ideal;
    ShilParams shil;
    double f1_hz = kNominalF1Hz;
    VariationScenario scenario;
    SensitivityModel sensitivity;
    DynamicsConfig dynamics;
    PowerModel power;
    int restarts = 1;
    std::uint64_t seed = 1;
    std::optional<double> accuracy_baseline; // cut denominator; resolved if absent
    int workers = 0;                         // 0 = hardware concurrency
    std::string out_prefix = "oim";
    // corner matrix
    int mc_seeds = 20;
    std::uint64_t mc_base_seed = 1;
    std::vector<ShilKind> mc_kinds = {ShilKind::Ideal, ShilKind::Rosc, ShilKind::Roa};
    // sweep
    std::string sweep_key;
    std::vector<double> sweep_values;
    int sweep_seeds = 5;
};

RunConfig load_run_config(const std::string& path);
RunConfig run_config_from(const ConfigFile& cfg);

// Denominator for accuracy: explicit value if configured, brute force for
// n <= 24, else tabu with defaults (deterministic).
double resolve_accuracy_baseline(const RunConfig& cfg, const Graph& g);

RunMetrics run_single(const RunConfig& cfg);

// Internals reused by the matrix/sweep so the problem and baseline are
// built once.
struct PreparedProblem {
    Graph graph;
    IsingProblem ising;
    double baseline;
};
PreparedProblem prepare_problem(const RunConfig& cfg);
RunMetrics run_once(const PreparedProblem& prep, const RunConfig& cfg, ShilKind kind,
                    const VariationScenario& scenario, std::uint64_t seed);

struct MatrixRow {
    ShilKind kind;
    int family_index = 0;
    std::string family;
    int member_index = 0;
    std::uint64_t seed = 0;
    RunMetrics metrics;
    std::string error; // non-empty if the run failed; metrics then unset
};

struct CellAggregate {
    ShilKind kind;
    std::string family;
    int runs = 0;
    double binarized_rate = 0.0;
    double mean_accuracy = 0.0;
    double min_accuracy = 0.0;
    double max_accuracy = 0.0;
    std::optional<double> mean_cycles; // over binarized runs
};

struct MatrixResult {
    std::vector<MatrixRow> rows;          // all runs, both voltage signs
    std::vector<CellAggregate> aggregates; // per (kind, family), worse sign per seed
};

// Cross product mc_kinds x corner_suite x mc_seeds. Voltage families run
// both signs per seed; aggregates keep the worse sign. Per-run failures
// become error rows and the matrix continues.
MatrixResult run_corner_matrix(const RunConfig& cfg);
MatrixResult run_corner_matrix(const RunConfig& cfg, const std::vector<ScenarioFamily>& suite);

std::string runs_to_csv(const std::vector<MatrixRow>& rows);
std::string aggregates_to_csv(const std::vector<CellAggregate>& aggs);
std::string corner_table(const std::vector<CellAggregate>& aggs,
                         const std::vector<std::string>& family_order);
std::string errors_to_csv(const std::vector<MatrixRow>& rows);

// Writes <prefix>_runs.csv, <prefix>_aggregates.csv, <prefix>_table.txt and,
// if any run failed, <prefix>_errors.csv. Returns the paths written.
std::vector<std::string> write_matrix_outputs(const MatrixResult& result, const RunConfig& cfg);

struct SweepPoint {
    double value = 0.0;
    std::uint64_t seed = 0;
    RunMetrics metrics;
};
std::vector<SweepPoint> run_sweep(const RunConfig& cfg);
std::string sweep_to_csv(const std::string& key, const std::vector<SweepPoint>& points);

// Trajectory export: CSV "t_cycles,phi_0,...,phi_{n-1}" plus a JSON sidecar
// (seed, config, settled_at, binarized) next to it.
void write_trajectory_csv(const std::string& path, const PhaseTrajectory& traj);
void write_trajectory_sidecar(const std::string& csv_path, const PhaseTrajectory& traj,
                              const RunConfig& cfg, std::uint64_t seed);

std::string metrics_to_json(const RunMetrics& m, ShilKind kind);

} // namespace oim
