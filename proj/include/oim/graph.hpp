#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace oim {

struct Edge {
    int i = 0;
    int j = 0; // i < j after normalization
    double w = 1.0;
};

// Undirected weighted graph; simple (no self-loops, no duplicate pairs).
class Graph {
public:
    Graph(int n, std::vector<Edge> edges);

    int num_nodes() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    double total_weight() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_; // sorted by (i, j)
};

struct WeightRule {
    enum class Kind { AllOnes, RandomSign };
    Kind kind = Kind::AllOnes;
    std::uint64_t seed = 0;

    static WeightRule all_ones() { return {Kind::AllOnes, 0}; }
    static WeightRule random_sign(std::uint64_t seed) { return {Kind::RandomSign, seed}; }
};

// R x C lattice with cardinal + intercardinal adjacency.
// Node indexing is row-major: node(r, c) = r*cols + c.
// Edge count: R(C-1) + C(R-1) + 2(R-1)(C-1).
Graph kings_graph(int rows, int cols, WeightRule rule = WeightRule::all_ones());

// Seeded Erdos-Renyi-style graph used by the test corpus; every pair kept
// with probability p, weights +/-1.
Graph random_graph(int n, double edge_prob, std::uint64_t seed);

// Problem file format:
//   line 1: "n m", then m lines "i j w" (0-indexed), '#' starts a comment.
Graph read_problem(std::istream& in);
Graph read_problem_file(const std::string& path);
void write_problem(std::ostream& out, const Graph& g); // edges sorted by (i, j)
void write_problem_file(const std::string& path, const Graph& g);

} // namespace oim
