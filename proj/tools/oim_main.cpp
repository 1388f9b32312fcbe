#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "oim/baselines.hpp"
#include "oim/dynamics.hpp"
#include "oim/errors.hpp"
#include "oim/harness.hpp"
#include "oim/rng.hpp"
#include "oim/shil.hpp"

namespace {

struct SolveOptions {
    std::string problem_file;
    std::string config_path;
    std::string shil = "ideal";
    std::string scenario_tag;
    std::optional<double> voltage;
    std::optional<double> temperature;
    std::optional<std::uint64_t> process_seed;
    std::optional<int> restarts;
    std::optional<std::uint64_t> seed;
    std::optional<double> baseline;
    std::string trajectory_path;
    std::string metrics_path;
};

oim::VariationScenario scenario_by_tag(const std::string& tag, std::uint64_t process_seed) {
    for (const auto& fam : oim::corner_suite(1, process_seed)) {
        for (auto member : fam.members) {
            if (member.tag == tag) {
                if (member.process_seed) member.process_seed = process_seed;
                return member;
            }
        }
    }
    throw oim::validation_error("unknown scenario tag: " + tag +
                                " (expected nominal|v+05|v-05|v+10|v-10|t-40|t+125|process)");
}

int run_solve(const SolveOptions& opt) {
    oim::RunConfig cfg = opt.config_path.empty()
                             ? oim::RunConfig{}
                             : oim::load_run_config(opt.config_path);
    cfg.problem.source = oim::ProblemSpec::Source::File;
    cfg.problem.file = opt.problem_file;
    cfg.kind = oim::shil_kind_from_string(opt.shil);
    if (!opt.scenario_tag.empty())
        cfg.scenario = scenario_by_tag(opt.scenario_tag, opt.process_seed.value_or(1));
    if (opt.voltage) cfg.scenario.voltage_pct = *opt.voltage;
    if (opt.temperature) cfg.scenario.temperature_c = *opt.temperature;
    if (opt.process_seed && opt.scenario_tag.empty()) cfg.scenario.process_seed = *opt.process_seed;
    if (opt.restarts) cfg.restarts = *opt.restarts;
    if (opt.seed) cfg.seed = *opt.seed;
    if (opt.baseline) cfg.accuracy_baseline = *opt.baseline;

    const oim::PreparedProblem prep = oim::prepare_problem(cfg);
    const oim::RunMetrics metrics =
        oim::run_once(prep, cfg, cfg.kind, cfg.scenario, cfg.seed);

    if (!opt.trajectory_path.empty()) {
        // re-run the best restart's seed path for export
        const int n = prep.graph.num_nodes();
        const auto shil = oim::build_shil(cfg.kind, cfg.f1_hz, n, cfg.shil);
        const auto dev = oim::apply_variation(cfg.scenario, shil, n, cfg.sensitivity);
        const auto traj = oim::integrate(oim::random_state(n, oim::derive_seed(cfg.seed, 0)),
                                         prep.ising, shil, dev, cfg.dynamics,
                                         oim::derive_seed(cfg.seed, 1));
        oim::write_trajectory_csv(opt.trajectory_path, traj);
        oim::write_trajectory_sidecar(opt.trajectory_path, traj, cfg, cfg.seed);
    }

    const std::string json = oim::metrics_to_json(metrics, cfg.kind);
    if (opt.metrics_path.empty()) {
        std::cout << json;
    } else {
        std::ofstream out(opt.metrics_path);
        if (!out) throw oim::validation_error("cannot write " + opt.metrics_path);
        out << json;
        std::cout << "wrote " << opt.metrics_path << "\n";
    }
    return oim::kExitOk;
}

int run_baseline(const std::string& problem_file, const std::string& method,
                 std::uint64_t seed, int restarts, int sweeps, int tenure) {
    const oim::Graph g = oim::read_problem_file(problem_file);
    oim::MaxcutResult res{0.0, oim::SpinConfig::all_up(1), 0};
    if (method == "brute") {
        res = oim::brute_force_maxcut(g);
    } else if (method == "tabu") {
        oim::TabuConfig cfg;
        cfg.seed = seed;
        cfg.restarts = restarts;
        cfg.max_sweeps = sweeps;
        cfg.tenure = tenure;
        res = oim::tabu_maxcut(g, cfg);
    } else {
        throw oim::validation_error("baseline method must be tabu|brute");
    }
    nlohmann::ordered_json j;
    j["method"] = method;
    j["best_cut"] = res.best_cut;
    j["spins"] = res.spins.spins();
    j["sweeps_used"] = res.sweeps_used;
    j["seed"] = seed;
    std::cout << j.dump(2) << "\n";
    return oim::kExitOk;
}

int run_plan(const std::string& kind_str, int nodes, bool table) {
    const oim::ShilKind kind = oim::shil_kind_from_string(kind_str);
    const oim::ShilPlan p = oim::plan(kind, nodes);
    std::cout << oim::plan_to_json(p) << "\n";
    if (table) std::cout << oim::plan_table({p});
    return oim::kExitOk;
}

int run_mc(const std::string& config_path, const std::string& out_prefix) {
    oim::RunConfig cfg = oim::load_run_config(config_path);
    if (!out_prefix.empty()) cfg.out_prefix = out_prefix;
    const oim::MatrixResult result = oim::run_corner_matrix(cfg);
    for (const auto& path : oim::write_matrix_outputs(result, cfg))
        std::cout << "wrote " << path << "\n";
    std::vector<std::string> family_order;
    for (const auto& a : result.aggregates)
        if (std::find(family_order.begin(), family_order.end(), a.family) == family_order.end())
            family_order.push_back(a.family);
    std::cout << oim::corner_table(result.aggregates, family_order);
    return oim::kExitOk;
}

int run_sweep_cmd(const std::string& config_path, const std::string& out_prefix) {
    oim::RunConfig cfg = oim::load_run_config(config_path);
    if (!out_prefix.empty()) cfg.out_prefix = out_prefix;
    const auto points = oim::run_sweep(cfg);
    const std::string csv = oim::sweep_to_csv(cfg.sweep_key, points);
    const std::string path = cfg.out_prefix + "_sweep.csv";
    std::ofstream out(path);
    if (!out) throw oim::validation_error("cannot write " + path);
    out << csv;
    std::cout << "wrote " << path << "\n";
    return oim::kExitOk;
}

int run_gen(int rows, int cols, const std::string& weights, std::uint64_t seed,
            const std::string& out_path) {
    oim::WeightRule rule = oim::WeightRule::all_ones();
    if (weights == "pm1")
        rule = oim::WeightRule::random_sign(seed);
    else if (weights != "ones")
        throw oim::validation_error("gen: weights must be ones|pm1");
    const oim::Graph g = oim::kings_graph(rows, cols, rule);
    oim::write_problem_file(out_path, g);
    std::cout << "wrote " << out_path << " (" << g.num_nodes() << " nodes, " << g.num_edges()
              << " edges)\n";
    return oim::kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"oim: behavioral oscillator-based Ising machine simulator"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    auto* solve = app.add_subcommand("solve", "run the OIM on a problem file");
    solve->add_option("problem", solve_opt.problem_file, "problem file")->required();
    solve->add_option("--shil", solve_opt.shil, "SHIL kind: ideal|rosc|roa");
    solve->add_option("--config", solve_opt.config_path, "run config file");
    solve->add_option("--scenario", solve_opt.scenario_tag, "scenario tag (nominal, v+10, ...)");
    double volt = 0, temp = 0;
    std::uint64_t pseed = 0, rseed = 0;
    int restarts = 0;
    double baseline = 0;
    solve->add_option("--voltage", volt, "fractional supply deviation")
        ->each([&](const std::string&) { solve_opt.voltage = volt; });
    solve->add_option("--temperature", temp, "temperature in C")
        ->each([&](const std::string&) { solve_opt.temperature = temp; });
    solve->add_option("--process-seed", pseed, "enable process variation with this seed")
        ->each([&](const std::string&) { solve_opt.process_seed = pseed; });
    solve->add_option("--restarts", restarts, "random restarts")
        ->each([&](const std::string&) { solve_opt.restarts = restarts; });
    solve->add_option("--seed", rseed, "run seed")
        ->each([&](const std::string&) { solve_opt.seed = rseed; });
    solve->add_option("--baseline", baseline, "accuracy denominator (cut value)")
        ->each([&](const std::string&) { solve_opt.baseline = baseline; });
    solve->add_option("--trajectory", solve_opt.trajectory_path, "write phase trajectory CSV here");
    solve->add_option("--metrics", solve_opt.metrics_path, "write metrics JSON here");

    std::string b_file, b_method = "tabu";
    std::uint64_t b_seed = 1;
    int b_restarts = 10, b_sweeps = 2000, b_tenure = 20;
    auto* base = app.add_subcommand("baseline", "software max-cut baseline");
    base->add_option("problem", b_file, "problem file")->required();
    base->add_option("--method", b_method, "tabu|brute");
    base->add_option("--seed", b_seed, "tabu seed");
    base->add_option("--restarts", b_restarts, "tabu restarts");
    base->add_option("--sweeps", b_sweeps, "tabu moves per restart");
    base->add_option("--tenure", b_tenure, "tabu tenure");

    std::string p_kind;
    int p_nodes = 0;
    bool p_table = false;
    auto* plan_cmd = app.add_subcommand("plan", "SHIL planning arithmetic");
    plan_cmd->add_option("--shil", p_kind, "SHIL kind")->required();
    plan_cmd->add_option("--nodes", p_nodes, "Ising node count")->required();
    plan_cmd->add_flag("--table", p_table, "also print an aligned table");

    std::string mc_config, mc_out;
    auto* mc = app.add_subcommand("mc", "PVT corner matrix (Monte Carlo)");
    mc->add_option("--config", mc_config, "run config file")->required();
    mc->add_option("--out", mc_out, "output prefix override");

    std::string sw_config, sw_out;
    auto* sweep = app.add_subcommand("sweep", "parameter sweep from a config file");
    sweep->add_option("--config", sw_config, "run config file")->required();
    sweep->add_option("--out", sw_out, "output prefix override");

    int g_rows = 18, g_cols = 18;
    std::string g_weights = "pm1", g_out = "problem.txt";
    std::uint64_t g_seed = 42;
    auto* gen = app.add_subcommand("gen", "generate a king's-graph problem file");
    gen->add_option("--rows", g_rows, "lattice rows");
    gen->add_option("--cols", g_cols, "lattice cols");
    gen->add_option("--weights", g_weights, "ones|pm1");
    gen->add_option("--seed", g_seed, "weight seed");
    gen->add_option("-o,--out", g_out, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : oim::kExitValidation;
    }

    try {
        if (solve->parsed()) return run_solve(solve_opt);
        if (base->parsed()) return run_baseline(b_file, b_method, b_seed, b_restarts, b_sweeps, b_tenure);
        if (plan_cmd->parsed()) return run_plan(p_kind, p_nodes, p_table);
        if (mc->parsed()) return run_mc(mc_config, mc_out);
        if (sweep->parsed()) return run_sweep_cmd(sw_config, sw_out);
        if (gen->parsed()) return run_gen(g_rows, g_cols, g_weights, g_seed, g_out);
    } catch (const oim::capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return oim::kExitCapacity;
    } catch (const oim::divergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return oim::kExitDivergence;
    } catch (const oim::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return oim::kExitValidation;
    } catch (const oim::contract_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return oim::kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
