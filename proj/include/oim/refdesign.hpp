#pragma once

#include "oim/shil.hpp"

namespace oim {

// Characterization of the 324-node 65nm reference design (18x18 king's
// graph OIM at f1 = 1.13 GHz) for each SHIL architecture. These are model
// inputs for the power/energy accounting, not simulator outputs.
struct ReferencePoint {
    ShilKind kind;
    const char* shil_structure;
    double shil_freq_hz;
    double total_power_w;
    double shil_power_w;
    double node_power_w;
    double energy_to_solution_j;
    double cycles_to_solution;
    double solution_time_s;
    double accuracy;
};

inline constexpr ReferencePoint kReference324[3] = {
    {ShilKind::Ideal, "input pin", 2.26e9, 458.9e-3, 0.0, 458.9e-3, 8.71e-9, 23.0, 19.63e-9, 0.952},
    {ShilKind::Rosc, "5 ROSCs", 2.18e9, 468.2e-3, 6.0e-3, 462.2e-3, 11.24e-9, 28.0, 24.70e-9, 0.943},
    {ShilKind::Roa, "4 RTWOs", 2.31e9, 502.0e-3, 33.0e-3, 469.0e-3, 11.20e-9, 26.0, 22.96e-9, 0.946},
};

inline const ReferencePoint& reference_point(ShilKind kind) {
    return kReference324[static_cast<int>(kind)];
}

} // namespace oim
