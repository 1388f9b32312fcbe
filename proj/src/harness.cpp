#include "oim/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "oim/errors.hpp"
#include "oim/refdesign.hpp"
#include "oim/rng.hpp"

namespace oim {

namespace {

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fmt_pct(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.1f%%", 100.0 * v);
    return buf;
}

void write_text_file(const std::string& path, const std::string& text) {
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw validation_error("cannot write output file: " + path);
    out << text;
}

} // namespace

Graph ProblemSpec::build() const {
    if (source == Source::File) return read_problem_file(file);
    return kings_graph(rows, cols, {weights, seed});
}

std::string ProblemSpec::describe() const {
    if (source == Source::File) return "file:" + file;
    std::ostringstream os;
    os << "kings:" << rows << "x" << cols << ":"
       << (weights == WeightRule::Kind::AllOnes ? "ones" : "pm1") << ":seed=" << seed;
    return os.str();
}

double energy_to_solution(const PowerModel& pm, ShilKind kind, double cycles) {
    if (cycles < 0.0) throw contract_error("energy_to_solution: cycles must be >= 0");
    if (pm.f1_hz <= 0.0) throw validation_error("energy_to_solution: f1 must be positive");
    return (pm.node_power_w + pm.shil_power(kind)) * cycles / pm.f1_hz;
}

RunConfig run_config_from(const ConfigFile& cfg) {
    RunConfig rc;

    const std::string src = cfg.get_string("problem.source", "generate");
    if (src == "file") {
        rc.problem.source = ProblemSpec::Source::File;
        rc.problem.file = cfg.get_string("problem.file", "");
        if (rc.problem.file.empty())
            throw validation_error(cfg.origin() + ": problem.source=file requires problem.file");
        if (!std::filesystem::exists(rc.problem.file))
            throw validation_error(cfg.origin() + ": problem file not found: " + rc.problem.file);
    } else if (src == "generate") {
        rc.problem.source = ProblemSpec::Source::Generate;
        rc.problem.rows = cfg.get_int("problem.rows", rc.problem.rows);
        rc.problem.cols = cfg.get_int("problem.cols", rc.problem.cols);
        const std::string w = cfg.get_string("problem.weights", "pm1");
        if (w == "ones")
            rc.problem.weights = WeightRule::Kind::AllOnes;
        else if (w == "pm1")
            rc.problem.weights = WeightRule::Kind::RandomSign;
        else
            throw validation_error(cfg.origin() + ": problem.weights must be ones|pm1");
        rc.problem.seed = cfg.get_u64("problem.seed", rc.problem.seed);
    } else {
        throw validation_error(cfg.origin() + ": problem.source must be file|generate");
    }

    rc.kind = shil_kind_from_string(cfg.get_string("shil.kind", "ideal"));
    rc.f1_hz = cfg.get_double("shil.f1_hz", rc.f1_hz);
    rc.shil.rosc_freq_hz = cfg.get_double("shil.rosc_freq_hz", rc.shil.rosc_freq_hz);
    rc.shil.roa_freq_hz = cfg.get_double("shil.roa_freq_hz", rc.shil.roa_freq_hz);
    rc.shil.rosc_drive_limit = cfg.get_int("shil.rosc_drive_limit", rc.shil.rosc_drive_limit);
    rc.shil.roa_taps = cfg.get_int("shil.roa_taps", rc.shil.roa_taps);
    rc.shil.roa_drive_total = cfg.get_int("shil.roa_drive_total", rc.shil.roa_drive_total);
    rc.shil.lattice_rows = cfg.get_int("shil.lattice_rows", rc.shil.lattice_rows);
    rc.shil.lattice_cols = cfg.get_int("shil.lattice_cols", rc.shil.lattice_cols);
    rc.shil.amplitude_scale = cfg.get_double("shil.amplitude_scale", rc.shil.amplitude_scale);
    if (rc.problem.source == ProblemSpec::Source::Generate && rc.shil.lattice_rows == 0) {
        rc.shil.lattice_rows = rc.problem.rows;
        rc.shil.lattice_cols = rc.problem.cols;
    }

    rc.scenario.tag = cfg.get_string("scenario.tag", rc.scenario.tag);
    rc.scenario.voltage_pct = cfg.get_double("scenario.voltage_pct", 0.0);
    rc.scenario.temperature_c = cfg.get_double("scenario.temperature_c", 27.0);
    rc.scenario.process_sigma = cfg.get_double("scenario.process_sigma", rc.scenario.process_sigma);
    if (cfg.get_bool("scenario.process", false))
        rc.scenario.process_seed = cfg.get_u64("scenario.process_seed", 1);

    rc.sensitivity.alpha_node = cfg.get_double("pvt.alpha_node", rc.sensitivity.alpha_node);
    rc.sensitivity.alpha_rosc = cfg.get_double("pvt.alpha_rosc", rc.sensitivity.alpha_rosc);
    rc.sensitivity.beta_node = cfg.get_double("pvt.beta_node", rc.sensitivity.beta_node);
    rc.sensitivity.beta_rosc = cfg.get_double("pvt.beta_rosc", rc.sensitivity.beta_rosc);
    rc.sensitivity.gamma_rosc_vphase =
        cfg.get_double("pvt.gamma_rosc_vphase", rc.sensitivity.gamma_rosc_vphase);
    rc.sensitivity.roa_suppression =
        cfg.get_double("pvt.roa_suppression", rc.sensitivity.roa_suppression);
    rc.sensitivity.roa_dfrac_clamp =
        cfg.get_double("pvt.roa_dfrac_clamp", rc.sensitivity.roa_dfrac_clamp);
    rc.sensitivity.roa_dphase_clamp =
        cfg.get_double("pvt.roa_dphase_clamp", rc.sensitivity.roa_dphase_clamp);

    rc.dynamics.k_c = cfg.get_double("dynamics.k_c", rc.dynamics.k_c);
    rc.dynamics.k_s = cfg.get_double("dynamics.k_s", rc.dynamics.k_s);
    rc.dynamics.dt_cycles = cfg.get_double("dynamics.dt_cycles", rc.dynamics.dt_cycles);
    rc.dynamics.max_cycles = cfg.get_double("dynamics.max_cycles", rc.dynamics.max_cycles);
    rc.dynamics.noise_sigma = cfg.get_double("dynamics.noise_sigma", rc.dynamics.noise_sigma);
    rc.dynamics.settle_band = cfg.get_double("dynamics.settle_band", rc.dynamics.settle_band);
    rc.dynamics.settle_window_cycles =
        cfg.get_double("dynamics.settle_window_cycles", rc.dynamics.settle_window_cycles);
    rc.dynamics.sample_stride_cycles =
        cfg.get_double("dynamics.sample_stride_cycles", rc.dynamics.sample_stride_cycles);
    rc.dynamics.stop_on_settle = cfg.get_bool("dynamics.stop_on_settle", rc.dynamics.stop_on_settle);
    const std::string wave = cfg.get_string("dynamics.coupling_wave", "sine");
    if (wave == "sine")
        rc.dynamics.coupling_wave = CouplingWave::Sine;
    else if (wave == "sawtooth")
        rc.dynamics.coupling_wave = CouplingWave::Sawtooth;
    else
        throw validation_error(cfg.origin() + ": dynamics.coupling_wave must be sine|sawtooth");
    rc.dynamics.validate();

    rc.power.node_power_w = cfg.get_double("power.node_power_w", rc.power.node_power_w);
    rc.power.shil_power_w[0] = cfg.get_double("power.shil_power_ideal_w", rc.power.shil_power_w[0]);
    rc.power.shil_power_w[1] = cfg.get_double("power.shil_power_rosc_w", rc.power.shil_power_w[1]);
    rc.power.shil_power_w[2] = cfg.get_double("power.shil_power_roa_w", rc.power.shil_power_w[2]);
    rc.power.f1_hz = rc.f1_hz;
    for (double p : rc.power.shil_power_w)
        if (p < 0.0) throw validation_error(cfg.origin() + ": SHIL power must be >= 0");
    if (rc.power.node_power_w < 0.0)
        throw validation_error(cfg.origin() + ": node power must be >= 0");

    rc.restarts = cfg.get_int("run.restarts", rc.restarts);
    if (rc.restarts < 1) throw validation_error(cfg.origin() + ": run.restarts must be >= 1");
    rc.seed = cfg.get_u64("run.seed", rc.seed);
    if (cfg.has("run.accuracy_baseline"))
        rc.accuracy_baseline = cfg.get_double("run.accuracy_baseline", 0.0);
    rc.workers = cfg.get_int("run.workers", rc.workers);
    rc.out_prefix = cfg.get_string("run.out_prefix", rc.out_prefix);

    rc.mc_seeds = cfg.get_int("mc.seeds", rc.mc_seeds);
    if (rc.mc_seeds < 1) throw validation_error(cfg.origin() + ": mc.seeds must be >= 1");
    rc.mc_base_seed = cfg.get_u64("mc.base_seed", rc.mc_base_seed);
    if (cfg.has("mc.kinds")) {
        rc.mc_kinds.clear();
        for (const auto& k : cfg.get_list("mc.kinds")) rc.mc_kinds.push_back(shil_kind_from_string(k));
        if (rc.mc_kinds.empty()) throw validation_error(cfg.origin() + ": mc.kinds is empty");
    }

    rc.sweep_key = cfg.get_string("sweep.key", "");
    for (const auto& v : cfg.get_list("sweep.values")) rc.sweep_values.push_back(std::stod(v));
    rc.sweep_seeds = cfg.get_int("sweep.seeds", rc.sweep_seeds);

    const auto unread = cfg.unread_keys();
    if (!unread.empty()) {
        std::string msg = cfg.origin() + ": unknown config key(s):";
        for (const auto& k : unread) msg += " " + k;
        throw validation_error(msg);
    }
    return rc;
}

RunConfig load_run_config(const std::string& path) {
    return run_config_from(ConfigFile::parse_file(path));
}

double resolve_accuracy_baseline(const RunConfig& cfg, const Graph& g) {
    if (cfg.accuracy_baseline) {
        if (*cfg.accuracy_baseline <= 0.0)
            throw validation_error("accuracy_baseline must be positive");
        return *cfg.accuracy_baseline;
    }
    if (g.num_nodes() <= 24) return brute_force_maxcut(g).best_cut;
    return tabu_maxcut(g, TabuConfig{}).best_cut;
}

PreparedProblem prepare_problem(const RunConfig& cfg) {
    Graph g = cfg.problem.build();
    const double baseline = resolve_accuracy_baseline(cfg, g);
    IsingProblem ising = maxcut_to_ising(g);
    return {std::move(g), std::move(ising), baseline};
}

RunMetrics run_once(const PreparedProblem& prep, const RunConfig& cfg, ShilKind kind,
                    const VariationScenario& scenario, std::uint64_t seed) {
    const int n = prep.graph.num_nodes();
    const ShilSystem shil = build_shil(kind, cfg.f1_hz, n, cfg.shil);
    const DeviationSet dev = apply_variation(scenario, shil, n, cfg.sensitivity);

    double best_cut = -std::numeric_limits<double>::infinity();
    bool best_binarized = false;
    std::optional<double> best_settled;

    for (int r = 0; r < cfg.restarts; ++r) {
        const std::uint64_t init_seed = derive_seed(seed, 2 * static_cast<std::uint64_t>(r));
        const std::uint64_t noise_seed = derive_seed(seed, 2 * static_cast<std::uint64_t>(r) + 1);
        const PhaseTrajectory traj =
            integrate(random_state(n, init_seed), prep.ising, shil, dev, cfg.dynamics, noise_seed);
        const double cut = cut_size(prep.graph, binarize(traj.final_state));
        if (cut > best_cut) {
            best_cut = cut;
            best_binarized = traj.binarized;
            best_settled = traj.settled_at_cycles;
        }
    }

    RunMetrics m;
    m.cut = best_cut;
    m.accuracy = best_cut / prep.baseline;
    m.binarized = best_binarized;
    m.forced_round = !best_binarized;
    m.seed = seed;
    m.scenario_tag = scenario.tag;
    if (best_binarized && best_settled) {
        m.cycles_to_solution = *best_settled;
        m.solution_time_s = *best_settled / cfg.f1_hz;
        m.energy_to_solution_j = energy_to_solution(cfg.power, kind, *best_settled);
    }
    return m;
}

RunMetrics run_single(const RunConfig& cfg) {
    const PreparedProblem prep = prepare_problem(cfg);
    return run_once(prep, cfg, cfg.kind, cfg.scenario, cfg.seed);
}

namespace {

struct Task {
    ShilKind kind;
    int family_index;
    std::string family;
    int member_index;
    VariationScenario scenario;
    std::uint64_t seed;
};

// worse = unbinarized first, then lower accuracy
bool worse_than(const RunMetrics& a, const RunMetrics& b) {
    if (a.binarized != b.binarized) return !a.binarized;
    return a.accuracy < b.accuracy;
}

} // namespace

MatrixResult run_corner_matrix(const RunConfig& cfg) {
    return run_corner_matrix(
        cfg, corner_suite(cfg.mc_seeds, cfg.mc_base_seed, cfg.scenario.process_sigma));
}

MatrixResult run_corner_matrix(const RunConfig& cfg, const std::vector<ScenarioFamily>& suite) {
    const PreparedProblem prep = prepare_problem(cfg);

    std::vector<Task> tasks;
    for (ShilKind kind : cfg.mc_kinds) {
        for (int f = 0; f < static_cast<int>(suite.size()); ++f) {
            const auto& fam = suite[f];
            // Process batches enumerate their Monte Carlo seeds as members.
            const bool per_member_seed =
                !fam.members.empty() && fam.members.front().process_seed.has_value();
            if (per_member_seed) {
                for (int m = 0; m < static_cast<int>(fam.members.size()); ++m)
                    tasks.push_back({kind, f, fam.name, m, fam.members[m],
                                     derive_seed(cfg.mc_base_seed, static_cast<std::uint64_t>(m))});
            } else {
                for (int s = 0; s < cfg.mc_seeds; ++s)
                    for (int m = 0; m < static_cast<int>(fam.members.size()); ++m)
                        tasks.push_back({kind, f, fam.name, m, fam.members[m],
                                         derive_seed(cfg.mc_base_seed, static_cast<std::uint64_t>(s))});
            }
        }
    }

    std::vector<MatrixRow> rows(tasks.size());
    std::atomic<std::size_t> next{0};
    const unsigned workers = cfg.workers > 0
                                 ? static_cast<unsigned>(cfg.workers)
                                 : std::max(1u, std::thread::hardware_concurrency());

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& t = tasks[i];
            MatrixRow& row = rows[i];
            row.kind = t.kind;
            row.family_index = t.family_index;
            row.family = t.family;
            row.member_index = t.member_index;
            row.seed = t.seed;
            try {
                row.metrics = run_once(prep, cfg, t.kind, t.scenario, t.seed);
            } catch (const std::exception& e) {
                row.error = e.what();
                row.metrics.scenario_tag = t.scenario.tag;
                row.metrics.seed = t.seed;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    // rows are already in deterministic (kind, family, seed, member) task order
    MatrixResult result;
    result.rows = std::move(rows);

    for (ShilKind kind : cfg.mc_kinds) {
        for (int f = 0; f < static_cast<int>(suite.size()); ++f) {
            // worse-sign selection: one representative row per seed
            std::map<std::uint64_t, const RunMetrics*> per_seed;
            for (const auto& row : result.rows) {
                if (row.kind != kind || row.family_index != f || !row.error.empty()) continue;
                auto [it, inserted] = per_seed.try_emplace(row.seed, &row.metrics);
                if (!inserted && worse_than(row.metrics, *it->second)) it->second = &row.metrics;
            }
            if (per_seed.empty()) continue;

            CellAggregate agg;
            agg.kind = kind;
            agg.family = suite[f].name;
            agg.runs = static_cast<int>(per_seed.size());
            double acc_sum = 0.0, cyc_sum = 0.0;
            int binarized = 0, cyc_n = 0;
            agg.min_accuracy = std::numeric_limits<double>::infinity();
            agg.max_accuracy = -std::numeric_limits<double>::infinity();
            for (const auto& [seed, m] : per_seed) {
                acc_sum += m->accuracy;
                agg.min_accuracy = std::min(agg.min_accuracy, m->accuracy);
                agg.max_accuracy = std::max(agg.max_accuracy, m->accuracy);
                if (m->binarized) {
                    ++binarized;
                    if (m->cycles_to_solution) {
                        cyc_sum += *m->cycles_to_solution;
                        ++cyc_n;
                    }
                }
            }
            agg.mean_accuracy = acc_sum / agg.runs;
            agg.binarized_rate = static_cast<double>(binarized) / agg.runs;
            if (cyc_n > 0) agg.mean_cycles = cyc_sum / cyc_n;
            result.aggregates.push_back(std::move(agg));
        }
    }
    return result;
}

std::string runs_to_csv(const std::vector<MatrixRow>& rows) {
    std::ostringstream out;
    out << "kind,scenario,seed,cut,accuracy,binarized,cycles,time_s,energy_j\n";
    for (const auto& row : rows) {
        if (!row.error.empty()) continue;
        const RunMetrics& m = row.metrics;
        out << to_string(row.kind) << ',' << m.scenario_tag << ',' << m.seed << ',' << fmt_g(m.cut)
            << ',' << fmt_g(m.accuracy) << ',' << (m.binarized ? 1 : 0) << ',';
        if (m.cycles_to_solution) out << fmt_g(*m.cycles_to_solution);
        out << ',';
        if (m.solution_time_s) out << fmt_g(*m.solution_time_s);
        out << ',';
        if (m.energy_to_solution_j) out << fmt_g(*m.energy_to_solution_j);
        out << '\n';
    }
    return out.str();
}

std::string errors_to_csv(const std::vector<MatrixRow>& rows) {
    std::ostringstream out;
    out << "kind,scenario,seed,error\n";
    for (const auto& row : rows) {
        if (row.error.empty()) continue;
        std::string what = row.error;
        std::replace(what.begin(), what.end(), ',', ';');
        out << to_string(row.kind) << ',' << row.metrics.scenario_tag << ',' << row.metrics.seed
            << ',' << what << '\n';
    }
    return out.str();
}

std::string aggregates_to_csv(const std::vector<CellAggregate>& aggs) {
    std::ostringstream out;
    out << "kind,family,runs,binarized_rate,mean_accuracy,min_accuracy,max_accuracy,mean_cycles\n";
    for (const auto& a : aggs) {
        out << to_string(a.kind) << ',' << a.family << ',' << a.runs << ','
            << fmt_g(a.binarized_rate) << ',' << fmt_g(a.mean_accuracy) << ','
            << fmt_g(a.min_accuracy) << ',' << fmt_g(a.max_accuracy) << ',';
        if (a.mean_cycles) out << fmt_g(*a.mean_cycles);
        out << '\n';
    }
    return out.str();
}

std::string corner_table(const std::vector<CellAggregate>& aggs,
                         const std::vector<std::string>& family_order) {
    auto find = [&](ShilKind k, const std::string& fam) -> const CellAggregate* {
        for (const auto& a : aggs)
            if (a.kind == k && a.family == fam) return &a;
        return nullptr;
    };
    std::vector<ShilKind> kinds;
    for (const auto& a : aggs)
        if (std::find(kinds.begin(), kinds.end(), a.kind) == kinds.end()) kinds.push_back(a.kind);

    std::ostringstream out;
    char buf[64];
    auto cell = [&](const std::string& s) {
        std::snprintf(buf, sizeof(buf), " %-12s", s.c_str());
        out << buf;
    };
    cell("");
    cell("");
    for (const auto& f : family_order) cell(f);
    out << '\n';

    for (ShilKind k : kinds) {
        cell(to_string(k));
        cell("binarized");
        for (const auto& f : family_order) {
            const CellAggregate* a = find(k, f);
            if (!a) {
                cell("-");
            } else if (a->binarized_rate == 1.0) {
                cell("yes");
            } else if (a->binarized_rate == 0.0) {
                cell("no");
            } else {
                std::snprintf(buf, sizeof(buf), "%d/%d",
                              static_cast<int>(std::lround(a->binarized_rate * a->runs)), a->runs);
                cell(buf);
            }
        }
        out << '\n';
        cell("");
        cell("accuracy");
        for (const auto& f : family_order) {
            const CellAggregate* a = find(k, f);
            if (!a) {
                cell("-");
            } else if (f == "process") {
                std::snprintf(buf, sizeof(buf), "%.1f-%.1f%%", 100.0 * a->min_accuracy,
                              100.0 * a->max_accuracy);
                cell(buf);
            } else {
                cell(fmt_pct(a->mean_accuracy));
            }
        }
        out << '\n';
    }
    return out.str();
}

std::vector<std::string> write_matrix_outputs(const MatrixResult& result, const RunConfig& cfg) {
    std::vector<std::string> written;
    const std::string runs_path = cfg.out_prefix + "_runs.csv";
    write_text_file(runs_path, runs_to_csv(result.rows));
    written.push_back(runs_path);

    const std::string agg_path = cfg.out_prefix + "_aggregates.csv";
    write_text_file(agg_path, aggregates_to_csv(result.aggregates));
    written.push_back(agg_path);

    std::vector<std::string> family_order;
    for (const auto& a : result.aggregates)
        if (std::find(family_order.begin(), family_order.end(), a.family) == family_order.end())
            family_order.push_back(a.family);
    const std::string table_path = cfg.out_prefix + "_table.txt";
    write_text_file(table_path, corner_table(result.aggregates, family_order));
    written.push_back(table_path);

    const bool any_error =
        std::any_of(result.rows.begin(), result.rows.end(),
                    [](const MatrixRow& r) { return !r.error.empty(); });
    if (any_error) {
        const std::string err_path = cfg.out_prefix + "_errors.csv";
        write_text_file(err_path, errors_to_csv(result.rows));
        written.push_back(err_path);
    }
    return written;
}

namespace {

void apply_sweep_value(RunConfig& cfg, const std::string& key, double value) {
    if (key == "dynamics.k_s")
        cfg.dynamics.k_s = value;
    else if (key == "dynamics.k_c")
        cfg.dynamics.k_c = value;
    else if (key == "dynamics.noise_sigma")
        cfg.dynamics.noise_sigma = value;
    else if (key == "dynamics.max_cycles")
        cfg.dynamics.max_cycles = value;
    else if (key == "scenario.voltage_pct")
        cfg.scenario.voltage_pct = value;
    else if (key == "scenario.temperature_c")
        cfg.scenario.temperature_c = value;
    else if (key == "pvt.gamma_rosc_vphase")
        cfg.sensitivity.gamma_rosc_vphase = value;
    else if (key == "pvt.roa_suppression")
        cfg.sensitivity.roa_suppression = value;
    else if (key == "shil.amplitude_scale")
        cfg.shil.amplitude_scale = value;
    else if (key == "run.restarts")
        cfg.restarts = static_cast<int>(value);
    else
        throw validation_error("sweep: unsupported key: " + key);
    cfg.dynamics.validate();
}

} // namespace

std::vector<SweepPoint> run_sweep(const RunConfig& cfg) {
    if (cfg.sweep_key.empty() || cfg.sweep_values.empty())
        throw validation_error("sweep: config needs sweep.key and sweep.values");
    if (cfg.sweep_seeds < 1) throw validation_error("sweep: sweep.seeds must be >= 1");

    const PreparedProblem prep = prepare_problem(cfg);
    std::vector<SweepPoint> points;
    for (double value : cfg.sweep_values) {
        RunConfig local = cfg;
        apply_sweep_value(local, cfg.sweep_key, value);
        for (int s = 0; s < cfg.sweep_seeds; ++s) {
            const std::uint64_t seed = derive_seed(cfg.mc_base_seed, static_cast<std::uint64_t>(s));
            points.push_back({value, seed, run_once(prep, local, local.kind, local.scenario, seed)});
        }
    }
    return points;
}

std::string sweep_to_csv(const std::string& key, const std::vector<SweepPoint>& points) {
    std::ostringstream out;
    out << key << ",seed,cut,accuracy,binarized,cycles\n";
    for (const auto& p : points) {
        out << fmt_g(p.value) << ',' << p.seed << ',' << fmt_g(p.metrics.cut) << ','
            << fmt_g(p.metrics.accuracy) << ',' << (p.metrics.binarized ? 1 : 0) << ',';
        if (p.metrics.cycles_to_solution) out << fmt_g(*p.metrics.cycles_to_solution);
        out << '\n';
    }
    return out.str();
}

void write_trajectory_csv(const std::string& path, const PhaseTrajectory& traj) {
    std::ostringstream out;
    const int n = traj.samples.empty() ? 0 : static_cast<int>(traj.samples.front().phases.size());
    out << "t_cycles";
    for (int i = 0; i < n; ++i) out << ",phi_" << i;
    out << '\n';
    for (const auto& s : traj.samples) {
        out << fmt_g(s.t_cycles);
        for (double p : s.phases) out << ',' << fmt_g(p);
        out << '\n';
    }
    write_text_file(path, out.str());
}

void write_trajectory_sidecar(const std::string& csv_path, const PhaseTrajectory& traj,
                              const RunConfig& cfg, std::uint64_t seed) {
    nlohmann::ordered_json j;
    j["seed"] = seed;
    j["binarized"] = traj.binarized;
    if (traj.settled_at_cycles)
        j["settled_at_cycles"] = *traj.settled_at_cycles;
    else
        j["settled_at_cycles"] = nullptr;
    j["config"] = {{"problem", cfg.problem.describe()},
                   {"shil", to_string(cfg.kind)},
                   {"f1_hz", cfg.f1_hz},
                   {"k_c", cfg.dynamics.k_c},
                   {"k_s", cfg.dynamics.k_s},
                   {"dt_cycles", cfg.dynamics.dt_cycles},
                   {"max_cycles", cfg.dynamics.max_cycles},
                   {"noise_sigma", cfg.dynamics.noise_sigma},
                   {"settle_band", cfg.dynamics.settle_band},
                   {"settle_window_cycles", cfg.dynamics.settle_window_cycles},
                   {"scenario", cfg.scenario.tag}};
    write_text_file(csv_path + ".json", j.dump(2) + "\n");
}

std::string metrics_to_json(const RunMetrics& m, ShilKind kind) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(kind);
    j["scenario"] = m.scenario_tag;
    j["seed"] = m.seed;
    j["cut"] = m.cut;
    j["accuracy"] = m.accuracy;
    j["binarized"] = m.binarized;
    j["forced_round"] = m.forced_round;
    if (m.cycles_to_solution) j["cycles_to_solution"] = *m.cycles_to_solution;
    if (m.solution_time_s) j["solution_time_s"] = *m.solution_time_s;
    if (m.energy_to_solution_j) j["energy_to_solution_j"] = *m.energy_to_solution_j;
    return j.dump(2) + "\n";
}

} // namespace oim
