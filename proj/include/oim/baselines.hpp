#pragma once

#include <cstdint>
#include <utility>

#include "oim/graph.hpp"
#include "oim/ising.hpp"

namespace oim {

struct MaxcutResult {
    double best_cut = 0.0;
    SpinConfig spins;
    long sweeps_used = 0;
};

// Exact maximum over the 2^(n-1) sign-distinct configurations (s_0 = +1).
// Tie-break: lexicographically smallest spin vector (-1 < +1). Guarded at
// n <= 24.
MaxcutResult brute_force_maxcut(const Graph& g);

struct TabuConfig {
    int tenure = 20;       // clamped to n-1 with a warning when too large
    int max_sweeps = 2000; // single-flip moves per restart
    int restarts = 10;
    std::uint64_t seed = 1;
    bool paranoid = false; // recheck incremental gains against full recomputation
};

// Single-flip tabu search on the cut objective: per sweep, flip the
// non-tabu node with best gain; a tabu move is allowed if it beats the
// incumbent (aspiration). Gains are maintained incrementally. Restart
// reduction picks max cut, then the lexicographically smallest spin vector.
MaxcutResult tabu_maxcut(const Graph& g, const TabuConfig& cfg = {});

// Best-improvement local search from a seeded start; test reference for
// the tabu lower-bound property.
MaxcutResult greedy_local_search(const Graph& g, std::uint64_t seed);

} // namespace oim
