#include "oim/shil.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "oim/errors.hpp"

namespace oim {

const char* to_string(ShilKind kind) {
    switch (kind) {
        case ShilKind::Ideal: return "ideal";
        case ShilKind::Rosc: return "rosc";
        case ShilKind::Roa: return "roa";
    }
    return "?";
}

ShilKind shil_kind_from_string(const std::string& s) {
    if (s == "ideal") return ShilKind::Ideal;
    if (s == "rosc") return ShilKind::Rosc;
    if (s == "roa") return ShilKind::Roa;
    throw validation_error("unknown SHIL kind: " + s + " (expected ideal|rosc|roa)");
}

namespace {

// Design frequencies are stated for f1 = 1.13 GHz; track 2*f1 proportionally.
double scaled(double design_freq_hz, double f1_hz) {
    return design_freq_hz * (2.0 * f1_hz) / (2.0 * kNominalF1Hz);
}

void check_roa_capacity(int n_nodes, const ShilParams& p) {
    if (n_nodes > p.roa_drive_total)
        throw capacity_error("roa SHIL: " + std::to_string(n_nodes) +
                             " nodes exceed the brick drive total of " +
                             std::to_string(p.roa_drive_total));
}

// Quadrant of node i on a rows x cols row-major lattice; taps sit at the
// four corners of the brick.
int quadrant(int i, int rows, int cols) {
    const int r = i / cols, c = i % cols;
    const int top = (rows + 1) / 2, left = (cols + 1) / 2;
    return (r < top ? 0 : 2) + (c < left ? 0 : 1);
}

} // namespace

ShilSystem build_shil(ShilKind kind, double f1_hz, int n_nodes, const ShilParams& params) {
    if (f1_hz <= 0.0) throw validation_error("build_shil: f1 must be positive");
    if (n_nodes < 1) throw validation_error("build_shil: need at least one node");

    ShilSystem sys;
    sys.kind = kind;
    sys.f1_hz = f1_hz;
    sys.reference_freq_hz = 2.0 * f1_hz;
    sys.assignment.assign(n_nodes, 0);

    switch (kind) {
        case ShilKind::Ideal:
            sys.sources.push_back({sys.reference_freq_hz, 0.0, params.amplitude_scale});
            sys.drive_limit = n_nodes; // unlimited
            break;

        case ShilKind::Rosc: {
            const int limit = params.rosc_drive_limit;
            const int k = (n_nodes + limit - 1) / limit;
            sys.sources.assign(k, {scaled(params.rosc_freq_hz, f1_hz), 0.0, params.amplitude_scale});
            for (int i = 0; i < n_nodes; ++i) sys.assignment[i] = i / limit;
            sys.drive_limit = limit;
            break;
        }

        case ShilKind::Roa: {
            check_roa_capacity(n_nodes, params);
            const int taps = params.roa_taps;
            const int per_tap = params.roa_drive_total / taps;
            sys.sources.assign(taps, {scaled(params.roa_freq_hz, f1_hz), 0.0, params.amplitude_scale});
            sys.drive_limit = per_tap;

            int rows = params.lattice_rows, cols = params.lattice_cols;
            if (rows <= 0 || cols <= 0) {
                const int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n_nodes))));
                rows = cols = side;
            }
            std::vector<int> count(taps, 0);
            bool fits = (taps == 4);
            if (fits) {
                for (int i = 0; i < n_nodes; ++i) {
                    const int q = quadrant(i, rows, cols);
                    sys.assignment[i] = q;
                    if (++count[q] > per_tap) {
                        fits = false;
                        break;
                    }
                }
            }
            if (!fits) // balanced fallback, always within the per-tap limit
                for (int i = 0; i < n_nodes; ++i) sys.assignment[i] = i % taps;
            break;
        }
    }
    return sys;
}

ShilPlan plan(ShilKind kind, int n_nodes, const ShilParams& params) {
    if (n_nodes < 1) throw validation_error("plan: need at least one node");
    ShilPlan p;
    p.kind = kind;
    p.n_nodes = n_nodes;
    switch (kind) {
        case ShilKind::Ideal:
            p.sources_needed = 1;
            p.nodes_per_source = n_nodes;
            p.footprint_um2 = 0.0;
            break;
        case ShilKind::Rosc:
            p.sources_needed = (n_nodes + params.rosc_drive_limit - 1) / params.rosc_drive_limit;
            p.nodes_per_source = params.rosc_drive_limit;
            p.footprint_um2 = p.sources_needed * kRoscFootprintUm2;
            break;
        case ShilKind::Roa:
            check_roa_capacity(n_nodes, params);
            p.sources_needed = params.roa_taps; // one brick
            p.nodes_per_source = params.roa_drive_total / params.roa_taps;
            p.footprint_um2 = kRoaFootprintUm2;
            break;
    }
    return p;
}

std::string plan_to_json(const ShilPlan& p) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(p.kind);
    j["n_nodes"] = p.n_nodes;
    j["sources"] = p.sources_needed;
    j["nodes_per_source"] = p.nodes_per_source;
    if (p.footprint_um2 == std::floor(p.footprint_um2))
        j["footprint_um2"] = static_cast<long long>(p.footprint_um2);
    else
        j["footprint_um2"] = p.footprint_um2;
    return j.dump();
}

std::string plan_table(const std::vector<ShilPlan>& plans) {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof(line), "%-8s %-8s %-8s %-16s %-14s\n", "kind", "nodes", "sources",
                  "nodes_per_source", "footprint_um2");
    out << line;
    for (const auto& p : plans) {
        std::snprintf(line, sizeof(line), "%-8s %-8d %-8d %-16d %-14.0f\n", to_string(p.kind),
                      p.n_nodes, p.sources_needed, p.nodes_per_source, p.footprint_um2);
        out << line;
    }
    return out.str();
}

int utilization_threshold(double node_area_um2, double target_util) {
    if (node_area_um2 <= 0.0) throw validation_error("utilization_threshold: node area must be positive");
    if (target_util <= 0.0 || target_util >= 1.0)
        throw validation_error("utilization_threshold: target utilization must be in (0, 1)");
    const double nodes = target_util * kRoaFootprintUm2 / ((1.0 - target_util) * node_area_um2);
    const double up = std::ceil(nodes);
    return up < 1.0 ? 1 : static_cast<int>(up);
}

} // namespace oim
