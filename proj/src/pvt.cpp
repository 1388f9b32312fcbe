#include "oim/pvt.hpp"

#include <algorithm>
#include <cmath>

#include "oim/errors.hpp"
#include "oim/rng.hpp"

namespace oim {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Stream labels for the counter RNG so node/source draws are independent.
enum : std::uint64_t {
    kStreamNodeFreq = 0x6e6f6465,   // "node"
    kStreamSourceFreq = 0x73726366, // "srcf"
    kStreamSourcePhase = 0x73726370 // "srcp"
};

void validate(const VariationScenario& sc) {
    if (std::abs(sc.voltage_pct) > 0.2)
        throw validation_error("scenario '" + sc.tag + "': |voltage_pct| must be <= 0.2");
    if (sc.temperature_c < -40.0 || sc.temperature_c > 125.0)
        throw validation_error("scenario '" + sc.tag + "': temperature outside supported corners [-40, 125]");
    if (sc.process_sigma < 0.0)
        throw validation_error("scenario '" + sc.tag + "': process_sigma must be >= 0");
}

} // namespace

double temperature_norm(double temperature_c) {
    const double dt = temperature_c - 27.0;
    return dt >= 0.0 ? dt / 98.0 : dt / 67.0;
}

DeviationSet DeviationSet::zero(int n_nodes, int n_sources) {
    DeviationSet d;
    d.node_dfrac.assign(n_nodes, 0.0);
    d.source_dfrac.assign(n_sources, 0.0);
    d.source_dphase.assign(n_sources, 0.0);
    d.source_dphase_rate.assign(n_sources, 0.0);
    return d;
}

bool DeviationSet::is_zero() const {
    auto all_zero = [](const std::vector<double>& v) {
        return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
    };
    return all_zero(node_dfrac) && all_zero(source_dfrac) && all_zero(source_dphase) &&
           all_zero(source_dphase_rate);
}

DeviationSet apply_variation(const VariationScenario& scenario, const ShilSystem& shil,
                             int n_nodes, const SensitivityModel& sens) {
    validate(scenario);
    if (n_nodes != shil.num_nodes())
        throw contract_error("apply_variation: node count does not match the SHIL assignment");

    const int n_sources = shil.num_sources();
    DeviationSet dev = DeviationSet::zero(n_nodes, n_sources);

    const double v = scenario.voltage_pct;
    const double tn = temperature_norm(scenario.temperature_c);
    const bool process = scenario.process_seed.has_value();
    const std::uint64_t seed = process ? *scenario.process_seed : 0;

    // Ising nodes are ring oscillators in every architecture.
    CounterRng node_rng(seed, kStreamNodeFreq);
    for (int i = 0; i < n_nodes; ++i) {
        double d = sens.alpha_node * v + sens.beta_node * tn;
        if (process) d += scenario.process_sigma * node_rng.gaussian();
        dev.node_dfrac[i] = d;
    }

    switch (shil.kind) {
        case ShilKind::Ideal:
            break; // pinned external reference: zero deviations always

        case ShilKind::Rosc: {
            CounterRng freq_rng(seed, kStreamSourceFreq);
            CounterRng phase_rng(seed, kStreamSourcePhase);
            const double drift =
                sens.gamma_rosc_vphase * v * kTwoPi * (shil.reference_freq_hz / shil.f1_hz);
            for (int s = 0; s < n_sources; ++s) {
                double d = sens.alpha_rosc * v + sens.beta_rosc * tn;
                if (process) {
                    d += scenario.process_sigma * freq_rng.gaussian();
                    dev.source_dphase[s] = phase_rng.uniform(0.0, kTwoPi);
                }
                dev.source_dfrac[s] = d;
                dev.source_dphase_rate[s] = drift;
            }
            break;
        }

        case ShilKind::Roa: {
            // One shared draw; the resonant brick suppresses the raw
            // disturbance and the residual is bounded (2% freq, 4% phase).
            CounterRng freq_rng(seed, kStreamSourceFreq);
            CounterRng phase_rng(seed, kStreamSourcePhase);
            double raw_f = sens.alpha_rosc * v + sens.beta_rosc * tn;
            double raw_p = 0.0;
            if (process) {
                raw_f += scenario.process_sigma * freq_rng.gaussian();
                raw_p = phase_rng.uniform(0.0, kTwoPi) - kTwoPi / 2.0; // centered
            }
            const double df = std::clamp(sens.roa_suppression * raw_f, -sens.roa_dfrac_clamp,
                                         sens.roa_dfrac_clamp);
            const double dp = std::clamp(sens.roa_suppression * raw_p, -sens.roa_dphase_clamp,
                                         sens.roa_dphase_clamp);
            for (int s = 0; s < n_sources; ++s) {
                dev.source_dfrac[s] = df;
                dev.source_dphase[s] = dp;
            }
            break;
        }
    }
    return dev;
}

std::vector<ScenarioFamily> corner_suite(int mc_count, std::uint64_t base_seed, double process_sigma) {
    if (mc_count < 1) throw validation_error("corner_suite: need at least one Monte Carlo seed");

    auto scen = [&](std::string tag, double v, double t) {
        VariationScenario s;
        s.tag = std::move(tag);
        s.voltage_pct = v;
        s.temperature_c = t;
        s.process_sigma = process_sigma;
        return s;
    };

    std::vector<ScenarioFamily> suite;
    suite.push_back({"nominal", {scen("nominal", 0.0, 27.0)}});
    suite.push_back({"voltage5", {scen("v+05", 0.05, 27.0), scen("v-05", -0.05, 27.0)}});
    suite.push_back({"voltage10", {scen("v+10", 0.10, 27.0), scen("v-10", -0.10, 27.0)}});
    suite.push_back({"temp-40", {scen("t-40", 0.0, -40.0)}});
    suite.push_back({"temp125", {scen("t+125", 0.0, 125.0)}});

    ScenarioFamily process{"process", {}};
    for (int k = 0; k < mc_count; ++k) {
        VariationScenario s = scen("process", 0.0, 27.0);
        s.process_seed = derive_seed(base_seed, 0x70726f63u + static_cast<std::uint64_t>(k));
        process.members.push_back(std::move(s));
    }
    suite.push_back(std::move(process));
    return suite;
}

} // namespace oim
