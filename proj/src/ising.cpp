#include "oim/ising.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "oim/errors.hpp"

namespace oim {

SpinConfig::SpinConfig(std::vector<int> spins) : spins_(std::move(spins)) {
    for (int s : spins_)
        if (s != 1 && s != -1) throw validation_error("spin config: entries must be -1 or +1");
}

IsingProblem::IsingProblem(int n, std::vector<Coupling> couplings, Provenance provenance)
    : n_(n), couplings_(std::move(couplings)), provenance_(provenance) {
    if (n_ <= 0) throw validation_error("ising problem: node count must be positive");
    for (auto& c : couplings_) {
        if (c.i == c.j) throw validation_error("ising problem: diagonal coupling J_ii not allowed");
        if (c.i > c.j) std::swap(c.i, c.j);
        if (c.i < 0 || c.j >= n_) throw validation_error("ising problem: coupling index out of range");
        if (!std::isfinite(c.value)) throw validation_error("ising problem: non-finite coupling");
    }
    std::sort(couplings_.begin(), couplings_.end(),
              [](const Coupling& a, const Coupling& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
    for (std::size_t k = 1; k < couplings_.size(); ++k)
        if (couplings_[k - 1].i == couplings_[k].i && couplings_[k - 1].j == couplings_[k].j)
            throw validation_error("ising problem: duplicate coupling");
}

AdjacencyList build_adjacency(int n, const std::vector<Coupling>& couplings) {
    AdjacencyList adj;
    adj.offsets.assign(n + 1, 0);
    for (const auto& c : couplings) {
        ++adj.offsets[c.i + 1];
        ++adj.offsets[c.j + 1];
    }
    for (int i = 0; i < n; ++i) adj.offsets[i + 1] += adj.offsets[i];
    adj.entries.resize(adj.offsets[n]);
    std::vector<int> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
    for (const auto& c : couplings) {
        adj.entries[cursor[c.i]++] = {c.j, c.value};
        adj.entries[cursor[c.j]++] = {c.i, c.value};
    }
    return adj;
}

AdjacencyList build_adjacency(const Graph& g) {
    std::vector<Coupling> cs;
    cs.reserve(g.edges().size());
    for (const auto& e : g.edges()) cs.push_back({e.i, e.j, e.w});
    return build_adjacency(g.num_nodes(), cs);
}

IsingProblem maxcut_to_ising(const Graph& g) {
    std::vector<Coupling> cs;
    cs.reserve(g.edges().size());
    for (const auto& e : g.edges()) cs.push_back({e.i, e.j, -e.w});
    return IsingProblem(g.num_nodes(), std::move(cs), Provenance::FromMaxcut);
}

double hamiltonian(const IsingProblem& p, const SpinConfig& s) {
    if (s.size() != p.num_nodes())
        throw contract_error("hamiltonian: spin length " + std::to_string(s.size()) +
                             " != node count " + std::to_string(p.num_nodes()));
    double h = 0.0;
    for (const auto& c : p.couplings()) h -= c.value * s[c.i] * s[c.j];
    return h;
}

double cut_size(const Graph& g, const SpinConfig& s) {
    if (s.size() != g.num_nodes())
        throw contract_error("cut_size: spin length " + std::to_string(s.size()) +
                             " != node count " + std::to_string(g.num_nodes()));
    double cut = 0.0;
    for (const auto& e : g.edges())
        if (s[e.i] != s[e.j]) cut += e.w;
    return cut;
}

} // namespace oim
