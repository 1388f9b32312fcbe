#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oim/ising.hpp"
#include "oim/pvt.hpp"
#include "oim/shil.hpp"

namespace oim {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// sin with exact folding so multiples of pi map to exactly 0; binarized
// states must be exact fixed points of the flow.
double sin_folded(double x);

// wrap to [0, 2pi)
double wrap_phase(double x);

enum class CouplingWave { Sine, Sawtooth }; // sawtooth is experimental only

struct DynamicsConfig {
    double k_c = 1.0;          // coupling strength
    double k_s = 2.0;          // SHIL strength
    double dt_cycles = 0.01;   // RK4 step, in units of 1/f1
    double max_cycles = 200.0; // horizon, node cycles
    double noise_sigma = 0.0;  // per-step phase noise std (rad / sqrt(cycle))
    double settle_band = kPi / 8.0;
    double settle_window_cycles = 3.0;
    double sample_stride_cycles = 1.0;
    bool stop_on_settle = true;
    CouplingWave coupling_wave = CouplingWave::Sine;

    void validate() const; // dt <= 0.05, settle_band < pi/4, ...
};

struct PhaseState {
    std::vector<double> phases; // radians, wrapped to [0, 2pi); rotating frame
    double t_cycles = 0.0;

    int size() const { return static_cast<int>(phases.size()); }
};

PhaseState random_state(int n, std::uint64_t seed);

struct PhaseTrajectory {
    struct Sample {
        double t_cycles;
        std::vector<double> phases;
    };
    std::vector<Sample> samples; // strictly increasing in time
    std::optional<double> settled_at_cycles;
    bool binarized = false;
    PhaseState final_state;
    long steps = 0;
};

// Phase velocity in the rotating frame, per node cycle:
//   dphi_i = 2pi*dfrac_i - k_c * sum_j J_ij sin(phi_i - phi_j)
//            - k_s * amp_src(i) * sin(2 phi_i - theta_src(i)(t))
// where theta_src(t) tracks the (possibly detuned, drifting) source.
std::vector<double> rhs(const PhaseState& state, const IsingProblem& problem,
                        const ShilSystem& shil, const DeviationSet& dev,
                        const DynamicsConfig& cfg);

// Fixed-step RK4; optional post-step Gaussian phase noise (the noiseless
// path is exactly RK4). Settles when every phase stays within settle_band
// of 0 or pi for settle_window_cycles; band edges count as inside.
PhaseTrajectory integrate(const PhaseState& initial, const IsingProblem& problem,
                          const ShilSystem& shil, const DeviationSet& dev,
                          const DynamicsConfig& cfg, std::uint64_t seed = 0);

// Descent certificate for the autonomous case (zero detuning/deviations):
//   E = -k_c sum_{i<j} J_ij cos(phi_i - phi_j)
//       - sum_i (k_s*amp_i/2) cos(2 phi_i - theta_i).
// rhs == -grad E there. Throws unsupported_error when the system is driven.
double lyapunov_energy(const PhaseState& state, const IsingProblem& problem,
                       const ShilSystem& shil, const DeviationSet& dev,
                       const DynamicsConfig& cfg);

// Nearest of {0, pi}: +1 on [-pi/2, pi/2) mod 2pi, else -1.
// Boundary pi/2 rounds to -1.
SpinConfig binarize(const PhaseState& state);

} // namespace oim
