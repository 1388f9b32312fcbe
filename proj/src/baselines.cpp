#include "oim/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "oim/errors.hpp"
#include "oim/rng.hpp"

namespace oim {

namespace {

// Change in cut value when node v flips: s_v * sum_j w_vj s_j.
double flip_gain(int v, const std::vector<int>& s, const std::vector<double>& h) {
    return s[v] * h[v];
}

std::vector<double> local_fields(const AdjacencyList& adj, const std::vector<int>& s) {
    std::vector<double> h(s.size(), 0.0);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (int k = adj.offsets[i]; k < adj.offsets[i + 1]; ++k)
            h[i] += adj.entries[k].second * s[adj.entries[k].first];
    return h;
}

double direct_cut(const Graph& g, const std::vector<int>& s) {
    double cut = 0.0;
    for (const auto& e : g.edges())
        if (s[e.i] != s[e.j]) cut += e.w;
    return cut;
}

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<int> random_spins(int n, CounterRng& rng) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = (rng.next_u64() & 1u) ? 1 : -1;
    return s;
}

} // namespace

MaxcutResult brute_force_maxcut(const Graph& g) {
    const int n = g.num_nodes();
    if (n > 24)
        throw contract_error("brute_force_maxcut: n = " + std::to_string(n) +
                             " exceeds the 24-node guard");

    const AdjacencyList adj = build_adjacency(g);
    // Gray-code walk over the 2^(n-1) configurations with s_0 fixed +1;
    // consecutive codes differ by one flip.
    std::vector<int> s(n, -1);
    s[0] = 1;
    std::vector<double> h = local_fields(adj, s);
    double cut = direct_cut(g, s);

    double best = cut;
    std::vector<int> best_spins = s;

    const std::uint64_t total = n == 1 ? 1 : (1ull << (n - 1));
    for (std::uint64_t k = 1; k < total; ++k) {
        const int v = 1 + __builtin_ctzll(k); // node whose gray bit flips
        cut += flip_gain(v, s, h);
        const int old = s[v];
        s[v] = -old;
        for (int e = adj.offsets[v]; e < adj.offsets[v + 1]; ++e)
            h[adj.entries[e].first] -= 2.0 * old * adj.entries[e].second;

        if (cut > best || (cut == best && lex_less(s, best_spins))) {
            best = cut;
            best_spins = s;
        }
    }
    return {best, SpinConfig(std::move(best_spins)), static_cast<long>(total)};
}

MaxcutResult tabu_maxcut(const Graph& g, const TabuConfig& cfg) {
    const int n = g.num_nodes();
    if (cfg.max_sweeps < 0 || cfg.restarts < 1 || cfg.tenure < 1)
        throw validation_error("tabu: tenure/restarts must be >= 1, max_sweeps >= 0");
    int tenure = cfg.tenure;
    if (tenure >= n) {
        tenure = std::max(1, n - 1);
        std::fprintf(stderr, "tabu: tenure %d >= n, clamped to %d\n", cfg.tenure, tenure);
    }

    const AdjacencyList adj = build_adjacency(g);
    double best = -std::numeric_limits<double>::infinity();
    std::vector<int> best_spins;
    long moves = 0;

    for (int r = 0; r < cfg.restarts; ++r) {
        CounterRng rng(cfg.seed, /*stream=*/0x74616275u + static_cast<std::uint64_t>(r));
        std::vector<int> s = random_spins(n, rng);
        std::vector<double> h = local_fields(adj, s);
        double cut = direct_cut(g, s);
        std::vector<long> tabu_until(n, -1);

        if (cut > best || (cut == best && lex_less(s, best_spins))) {
            best = cut;
            best_spins = s;
        }

        for (long iter = 0; iter < cfg.max_sweeps; ++iter) {
            int pick = -1;
            double pick_gain = 0.0;
            for (int v = 0; v < n; ++v) {
                const double gain = flip_gain(v, s, h);
                const bool tabu = tabu_until[v] > iter;
                if (tabu && !(cut + gain > best)) continue; // aspiration only
                if (pick < 0 || gain > pick_gain) {
                    pick = v;
                    pick_gain = gain;
                }
            }
            if (pick < 0) break; // everything tabu and nothing aspirates

            cut += pick_gain;
            const int old = s[pick];
            s[pick] = -old;
            for (int e = adj.offsets[pick]; e < adj.offsets[pick + 1]; ++e)
                h[adj.entries[e].first] -= 2.0 * old * adj.entries[e].second;
            tabu_until[pick] = iter + tenure;
            ++moves;

            if (cfg.paranoid) {
                const std::vector<double> href = local_fields(adj, s);
                const double cref = direct_cut(g, s);
                for (int v = 0; v < n; ++v)
                    if (std::abs(href[v] - h[v]) > 1e-9)
                        throw contract_error("tabu: incremental field drifted at node " +
                                             std::to_string(v));
                if (std::abs(cref - cut) > 1e-9)
                    throw contract_error("tabu: incremental cut drifted");
            }

            if (cut > best || (cut == best && lex_less(s, best_spins))) {
                best = cut;
                best_spins = s;
            }
        }
    }
    return {best, SpinConfig(std::move(best_spins)), moves};
}

MaxcutResult greedy_local_search(const Graph& g, std::uint64_t seed) {
    const int n = g.num_nodes();
    const AdjacencyList adj = build_adjacency(g);
    CounterRng rng(seed, /*stream=*/0x74616275u); // same init stream as tabu restart 0
    std::vector<int> s = random_spins(n, rng);
    std::vector<double> h = local_fields(adj, s);
    double cut = direct_cut(g, s);
    long moves = 0;

    for (;;) {
        int pick = -1;
        double pick_gain = 0.0;
        for (int v = 0; v < n; ++v) {
            const double gain = flip_gain(v, s, h);
            if (gain > pick_gain) {
                pick = v;
                pick_gain = gain;
            }
        }
        if (pick < 0) break;
        cut += pick_gain;
        const int old = s[pick];
        s[pick] = -old;
        for (int e = adj.offsets[pick]; e < adj.offsets[pick + 1]; ++e)
            h[adj.entries[e].first] -= 2.0 * old * adj.entries[e].second;
        ++moves;
    }
    return {cut, SpinConfig(std::move(s)), moves};
}

} // namespace oim
