#pragma once

#include <string>
#include <vector>

namespace oim {

enum class ShilKind { Ideal, Rosc, Roa };

const char* to_string(ShilKind kind);
ShilKind shil_kind_from_string(const std::string& s);

// One perturbation source running near 2*f1.
struct ShilSource {
    double freq_hz = 0.0;         // nominal perturbation frequency
    double phase_offset = 0.0;    // reference phase at t = 0, radians
    double amplitude_scale = 1.0; // multiplies the SHIL coupling strength k_s
};

// Architecture defaults. The on-chip source frequencies are characterization
// values for f1 = 1.13 GHz and scale proportionally with 2*f1 otherwise.
struct ShilParams {
    double rosc_freq_hz = 2.18e9;
    double roa_freq_hz = 2.31e9;
    int rosc_drive_limit = 65;   // nodes one ring-oscillator SHIL can drive
    int roa_taps = 4;            // same-phase tap points on one brick
    int roa_drive_total = 2792;  // nodes one brick can drive across its taps
    int lattice_rows = 0;        // 0 = assume a square lattice of ceil(sqrt(n))
    int lattice_cols = 0;
    double amplitude_scale = 1.0;
    // Brick master oscillator; enters only the planning/energy arithmetic.
    double roa_master_freq_hz = 20.82e9;
    int roa_divider = 9;
};

constexpr double kNominalF1Hz = 1.13e9;
constexpr double kRoscFootprintUm2 = 113.0;   // per SHIL unit
constexpr double kRoaFootprintUm2 = 425812.0; // per brick (664.5 x 640.8 um)

struct ShilSystem {
    ShilKind kind = ShilKind::Ideal;
    std::vector<ShilSource> sources;
    std::vector<int> assignment; // node index -> source index
    int drive_limit = 0;         // max nodes per source (ideal: n, i.e. unlimited)
    double reference_freq_hz = 0.0; // 2*f1, the rotating-frame reference
    double f1_hz = kNominalF1Hz;

    int num_sources() const { return static_cast<int>(sources.size()); }
    int num_nodes() const { return static_cast<int>(assignment.size()); }
};

// ideal: one source at exactly 2*f1, unlimited drive.
// rosc:  ceil(n/65) sources at the ring-oscillator design frequency,
//        contiguous row-major node blocks.
// roa:   4 phase-coherent taps at the brick frequency, nodes assigned by
//        lattice quadrant (round-robin fallback when a quadrant would exceed
//        the per-tap limit). Throws capacity_error past the brick total.
ShilSystem build_shil(ShilKind kind, double f1_hz, int n_nodes, const ShilParams& params = {});

struct ShilPlan {
    ShilKind kind = ShilKind::Ideal;
    int n_nodes = 0;
    int sources_needed = 0;
    int nodes_per_source = 0;
    double footprint_um2 = 0.0;
};

ShilPlan plan(ShilKind kind, int n_nodes, const ShilParams& params = {});

// One-record JSON: {kind, n_nodes, sources, nodes_per_source, footprint_um2};
// integral footprints are emitted as integers so values stay byte-exact.
std::string plan_to_json(const ShilPlan& p);
std::string plan_table(const std::vector<ShilPlan>& plans);

// Smallest node count at which total node area reaches target_util of the
// floorplan against the brick footprint:
//   ceil(target_util * roa_footprint / ((1 - target_util) * node_area)).
// node_area default 1022 um^2 is calibrated so the 60% utilization crossover
// lands at 625 nodes.
constexpr double kDefaultNodeAreaUm2 = 1022.0;
int utilization_threshold(double node_area_um2 = kDefaultNodeAreaUm2, double target_util = 0.60);

} // namespace oim
