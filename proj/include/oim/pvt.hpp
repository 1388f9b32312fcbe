#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oim/shil.hpp"

namespace oim {

// One operating condition. voltage_pct is the signed fractional supply
// deviation (0.05 = +5%); process variation is enabled iff process_seed
// is present.
struct VariationScenario {
    std::string tag = "nominal";
    double voltage_pct = 0.0;
    double temperature_c = 27.0;
    std::optional<std::uint64_t> process_seed;
    double process_sigma = 0.02; // std-dev of per-element fractional frequency deviation

    static VariationScenario nominal() { return {}; }
};

// Frequency/phase sensitivities of nodes and SHIL sources. Defaults are
// calibrated so the corner matrix reproduces the characterized
// binarized/not-binarized pattern; they are model knobs, not device physics.
struct SensitivityModel {
    double alpha_node = 1.0;  // fractional node freq shift per fractional supply shift
    double alpha_rosc = 1.0;  // same, for ring-oscillator SHIL sources
    double beta_node = 0.03;  // fractional freq shift at the hot/cold corner
    double beta_rosc = 0.004;
    // Extra SHIL reference drift for ROSC sources under supply shift,
    // gamma * voltage_pct * 2*pi * (f_ref / f1) radians per node cycle.
    // Calibrated (see README); disabled for ideal/roa.
    double gamma_rosc_vphase = 16.0;
    // ROA brick response: deviation = clamp(suppression * raw, +/-clamp).
    double roa_suppression = 0.18;
    double roa_dfrac_clamp = 0.02;
    double roa_dphase_clamp = 0.08 * 3.14159265358979323846; // 4% of a full turn
};

// Per-element deviations produced by a scenario.
struct DeviationSet {
    std::vector<double> node_dfrac;         // fractional node frequency deviation
    std::vector<double> source_dfrac;       // fractional SHIL source frequency deviation
    std::vector<double> source_dphase;      // SHIL source phase offset, radians
    std::vector<double> source_dphase_rate; // SHIL reference drift, radians per node cycle

    static DeviationSet zero(int n_nodes, int n_sources);
    bool is_zero() const;
};

// Node deviations: alpha_node*v + beta_node*tempnorm(T) + N(0, sigma) when
// process is enabled. ROSC sources get the same form with their own
// coefficients, independent per-source Gaussian draws, uniform [0, 2pi)
// phases under process, and the gamma drift under supply shift. ROA taps
// share one suppressed+clamped deviation (coherent across taps). Ideal
// sources deviate by exactly zero.
DeviationSet apply_variation(const VariationScenario& scenario, const ShilSystem& shil,
                             int n_nodes, const SensitivityModel& sens = {});

// Temperature normalized piecewise-linearly through the corners:
// (T-27)/98 for T >= 27, (T-27)/67 below; +/-1 at 125C / -40C.
double temperature_norm(double temperature_c);

// One family per corner-matrix column; voltage families carry both signs.
struct ScenarioFamily {
    std::string name;
    std::vector<VariationScenario> members;
};

// nominal; voltage +/-5%, +/-10%; -40C; 125C; seeded process batch.
std::vector<ScenarioFamily> corner_suite(int mc_count = 20, std::uint64_t base_seed = 1,
                                         double process_sigma = 0.02);

} // namespace oim
