#pragma once

#include <cstdint>
#include <vector>

#include "oim/graph.hpp"

namespace oim {

// Spin vector, entries exactly -1 or +1.
class SpinConfig {
public:
    explicit SpinConfig(std::vector<int> spins);
    static SpinConfig all_up(int n) { return SpinConfig(std::vector<int>(n, 1)); }

    int size() const { return static_cast<int>(spins_.size()); }
    int operator[](int i) const { return spins_[i]; }
    const std::vector<int>& spins() const { return spins_; }
    void flip(int i) { spins_[i] = -spins_[i]; }

private:
    std::vector<int> spins_;
};

struct Coupling {
    int i = 0;
    int j = 0; // i < j
    double value = 0.0;
};

enum class Provenance { NativeIsing, FromMaxcut };

// Sparse symmetric couplings; energy H(s) = -sum_{i<j} J_ij s_i s_j.
class IsingProblem {
public:
    IsingProblem(int n, std::vector<Coupling> couplings,
                 Provenance provenance = Provenance::NativeIsing);

    int num_nodes() const { return n_; }
    const std::vector<Coupling>& couplings() const { return couplings_; }
    Provenance provenance() const { return provenance_; }

private:
    int n_ = 0;
    std::vector<Coupling> couplings_; // sorted by (i, j)
    Provenance provenance_ = Provenance::NativeIsing;
};

// CSR-style symmetric neighbor view shared by the dynamics and the solvers.
struct AdjacencyList {
    std::vector<int> offsets;                    // size n+1
    std::vector<std::pair<int, double>> entries; // (neighbor, weight), both directions
};
AdjacencyList build_adjacency(int n, const std::vector<Coupling>& couplings);
AdjacencyList build_adjacency(const Graph& g);

// J_ij = -w_ij, so minimizing H maximizes the cut.
IsingProblem maxcut_to_ising(const Graph& g);

double hamiltonian(const IsingProblem& p, const SpinConfig& s);
double cut_size(const Graph& g, const SpinConfig& s);

} // namespace oim
