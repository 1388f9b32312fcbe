#include "oim/dynamics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "oim/errors.hpp"
#include "oim/rng.hpp"

namespace oim {

double sin_folded(double x) {
    double r = std::remainder(x, kTwoPi); // [-pi, pi]
    if (r > kPi / 2.0)
        r = kPi - r;
    else if (r < -kPi / 2.0)
        r = -kPi - r;
    return std::sin(r);
}

double wrap_phase(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

void DynamicsConfig::validate() const {
    if (k_c <= 0.0) throw validation_error("dynamics: k_c must be > 0");
    if (k_s < 0.0) throw validation_error("dynamics: k_s must be >= 0");
    if (dt_cycles <= 0.0 || dt_cycles > 0.05)
        throw validation_error("dynamics: dt_cycles must be in (0, 0.05]");
    if (max_cycles <= 0.0) throw validation_error("dynamics: max_cycles must be > 0");
    if (noise_sigma < 0.0) throw validation_error("dynamics: noise_sigma must be >= 0");
    if (settle_band <= 0.0 || settle_band >= kPi / 4.0)
        throw validation_error("dynamics: settle_band must be in (0, pi/4)");
    if (settle_window_cycles <= 0.0) throw validation_error("dynamics: settle_window_cycles must be > 0");
    if (sample_stride_cycles <= 0.0) throw validation_error("dynamics: sample_stride_cycles must be > 0");
}

PhaseState random_state(int n, std::uint64_t seed) {
    CounterRng rng(seed, /*stream=*/0x696e6974); // "init"
    PhaseState st;
    st.phases.resize(n);
    for (int i = 0; i < n; ++i) st.phases[i] = rng.uniform(0.0, kTwoPi);
    return st;
}

namespace {

// Triangle analogue of -sin for the experimental coupling waveform.
double tri_folded(double x) {
    double r = std::remainder(x, kTwoPi);
    if (r > kPi / 2.0)
        r = kPi - r;
    else if (r < -kPi / 2.0)
        r = -kPi - r;
    return r * (2.0 / kPi);
}

// Precomputed quantities shared by the four RK4 stage evaluations.
struct KuramotoSystem {
    const DynamicsConfig& cfg;
    AdjacencyList adj;
    std::vector<double> node_drift;   // 2pi * node_dfrac
    std::vector<double> shil_gain;    // k_s * amplitude_scale of the node's source
    std::vector<double> theta0;       // per node: source phase_offset + dphase
    std::vector<double> theta_rate;   // per node: source drift, rad per cycle
    bool driven = false;              // any nonzero detuning/drift/deviation

    KuramotoSystem(const IsingProblem& problem, const ShilSystem& shil,
                   const DeviationSet& dev, const DynamicsConfig& config)
        : cfg(config) {
        const int n = problem.num_nodes();
        if (shil.num_nodes() != n)
            throw contract_error("dynamics: SHIL assignment covers " +
                                 std::to_string(shil.num_nodes()) + " nodes, problem has " +
                                 std::to_string(n));
        if (static_cast<int>(dev.node_dfrac.size()) != n ||
            static_cast<int>(dev.source_dfrac.size()) != shil.num_sources() ||
            static_cast<int>(dev.source_dphase.size()) != shil.num_sources())
            throw contract_error("dynamics: deviation set dimensions disagree with system");

        adj = build_adjacency(n, problem.couplings());
        node_drift.resize(n);
        shil_gain.resize(n);
        theta0.resize(n);
        theta_rate.resize(n);
        for (int i = 0; i < n; ++i) {
            const int s = shil.assignment[i];
            const ShilSource& src = shil.sources[s];
            node_drift[i] = kTwoPi * dev.node_dfrac[i];
            shil_gain[i] = cfg.k_s * src.amplitude_scale;
            const double dphase_rate =
                dev.source_dphase_rate.empty() ? 0.0 : dev.source_dphase_rate[s];
            theta_rate[i] = kTwoPi *
                                (src.freq_hz * (1.0 + dev.source_dfrac[s]) - shil.reference_freq_hz) /
                                shil.f1_hz +
                            dphase_rate;
            theta0[i] = src.phase_offset + dev.source_dphase[s];
            if (node_drift[i] != 0.0 || theta_rate[i] != 0.0) driven = true;
        }
    }

    void rhs_into(const std::vector<double>& phases, double t_cycles,
                  std::vector<double>& out) const {
        const int n = static_cast<int>(phases.size());
        const bool saw = cfg.coupling_wave == CouplingWave::Sawtooth;
        for (int i = 0; i < n; ++i) {
            double coupling = 0.0;
            for (int k = adj.offsets[i]; k < adj.offsets[i + 1]; ++k) {
                const auto& [j, w] = adj.entries[k];
                const double d = phases[i] - phases[j];
                coupling += w * (saw ? tri_folded(d) : sin_folded(d));
            }
            const double theta = theta_rate[i] * t_cycles + theta0[i];
            out[i] = node_drift[i] - cfg.k_c * coupling -
                     shil_gain[i] * sin_folded(2.0 * phases[i] - theta);
        }
    }
};

double band_distance(double phase) {
    return std::abs(std::remainder(phase, kPi)); // distance to nearest of {0, pi}
}

} // namespace

std::vector<double> rhs(const PhaseState& state, const IsingProblem& problem,
                        const ShilSystem& shil, const DeviationSet& dev,
                        const DynamicsConfig& cfg) {
    cfg.validate();
    if (state.size() != problem.num_nodes())
        throw contract_error("rhs: state size does not match problem");
    KuramotoSystem sys(problem, shil, dev, cfg);
    std::vector<double> out(state.phases.size());
    sys.rhs_into(state.phases, state.t_cycles, out);
    return out;
}

PhaseTrajectory integrate(const PhaseState& initial, const IsingProblem& problem,
                          const ShilSystem& shil, const DeviationSet& dev,
                          const DynamicsConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    if (initial.size() != problem.num_nodes())
        throw contract_error("integrate: state size does not match problem");

    KuramotoSystem sys(problem, shil, dev, cfg);
    const int n = initial.size();
    const double dt = cfg.dt_cycles;
    const long max_steps = static_cast<long>(std::ceil(cfg.max_cycles / dt));

    std::vector<double> phi = initial.phases;
    for (auto& p : phi) p = wrap_phase(p);
    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);

    CounterRng noise_rng(seed, /*stream=*/0x6e6f6973); // "nois"

    PhaseTrajectory traj;
    traj.samples.push_back({0.0, phi});
    double next_sample = cfg.sample_stride_cycles;

    // Settle tracking: start of the current all-in-band window, NaN if none.
    double window_start = std::numeric_limits<double>::quiet_NaN();
    auto all_in_band = [&](const std::vector<double>& p) {
        for (double x : p)
            if (band_distance(x) > cfg.settle_band) return false;
        return true;
    };
    if (all_in_band(phi)) window_start = 0.0;

    for (long step = 0; step < max_steps; ++step) {
        const double t = static_cast<double>(step) * dt;

        sys.rhs_into(phi, t, k1);
        for (int i = 0; i < n; ++i) tmp[i] = phi[i] + 0.5 * dt * k1[i];
        sys.rhs_into(tmp, t + 0.5 * dt, k2);
        for (int i = 0; i < n; ++i) tmp[i] = phi[i] + 0.5 * dt * k2[i];
        sys.rhs_into(tmp, t + 0.5 * dt, k3);
        for (int i = 0; i < n; ++i) tmp[i] = phi[i] + dt * k3[i];
        sys.rhs_into(tmp, t + dt, k4);
        for (int i = 0; i < n; ++i)
            phi[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

        if (cfg.noise_sigma > 0.0) {
            const double scale = cfg.noise_sigma * std::sqrt(dt);
            for (int i = 0; i < n; ++i) phi[i] += scale * noise_rng.gaussian();
        }

        const double t_next = static_cast<double>(step + 1) * dt;
        for (int i = 0; i < n; ++i) {
            if (!std::isfinite(phi[i]))
                throw divergence_error("integrate: non-finite phase for node " + std::to_string(i) +
                                       " at step " + std::to_string(step));
            phi[i] = wrap_phase(phi[i]);
        }

        if (t_next >= next_sample - 1e-12) {
            traj.samples.push_back({t_next, phi});
            while (next_sample <= t_next + 1e-12) next_sample += cfg.sample_stride_cycles;
        }

        if (all_in_band(phi)) {
            if (std::isnan(window_start)) window_start = t_next;
            if (!traj.binarized && t_next - window_start >= cfg.settle_window_cycles - 1e-12) {
                traj.settled_at_cycles = window_start;
                traj.binarized = true;
                if (cfg.stop_on_settle) {
                    traj.steps = step + 1;
                    if (traj.samples.back().t_cycles < t_next) traj.samples.push_back({t_next, phi});
                    traj.final_state = {phi, t_next};
                    return traj;
                }
            }
        } else {
            window_start = std::numeric_limits<double>::quiet_NaN();
        }
        traj.steps = step + 1;
    }

    const double t_end = static_cast<double>(max_steps) * dt;
    if (traj.samples.back().t_cycles < t_end) traj.samples.push_back({t_end, phi});
    traj.final_state = {phi, t_end};
    return traj;
}

double lyapunov_energy(const PhaseState& state, const IsingProblem& problem,
                       const ShilSystem& shil, const DeviationSet& dev,
                       const DynamicsConfig& cfg) {
    if (state.size() != problem.num_nodes())
        throw contract_error("lyapunov_energy: state size does not match problem");
    KuramotoSystem sys(problem, shil, dev, cfg);
    if (sys.driven)
        throw unsupported_error(
            "lyapunov_energy: defined only for the autonomous case (zero detuning and deviations)");

    double e = 0.0;
    for (const auto& c : problem.couplings())
        e -= cfg.k_c * c.value * std::cos(state.phases[c.i] - state.phases[c.j]);
    for (int i = 0; i < state.size(); ++i)
        e -= 0.5 * sys.shil_gain[i] * std::cos(2.0 * state.phases[i] - sys.theta0[i]);
    return e;
}

SpinConfig binarize(const PhaseState& state) {
    std::vector<int> spins(state.phases.size());
    for (std::size_t i = 0; i < state.phases.size(); ++i) {
        const double p = wrap_phase(state.phases[i]);
        spins[i] = (p < kPi / 2.0 || p >= 1.5 * kPi) ? 1 : -1;
    }
    return SpinConfig(std::move(spins));
}

} // namespace oim
