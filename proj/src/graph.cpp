#include "oim/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "oim/errors.hpp"
#include "oim/rng.hpp"

namespace oim {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ <= 0) throw validation_error("graph: node count must be positive");
    for (auto& e : edges_) {
        if (e.i == e.j) throw validation_error("graph: self-loop at node " + std::to_string(e.i));
        if (e.i > e.j) std::swap(e.i, e.j);
        if (e.i < 0 || e.j >= n_)
            throw validation_error("graph: edge (" + std::to_string(e.i) + "," +
                                   std::to_string(e.j) + ") out of range for n=" + std::to_string(n_));
        if (!std::isfinite(e.w)) throw validation_error("graph: non-finite edge weight");
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
    for (std::size_t k = 1; k < edges_.size(); ++k) {
        if (edges_[k - 1].i == edges_[k].i && edges_[k - 1].j == edges_[k].j)
            throw validation_error("graph: duplicate edge (" + std::to_string(edges_[k].i) + "," +
                                   std::to_string(edges_[k].j) + ")");
    }
}

double Graph::total_weight() const {
    double w = 0.0;
    for (const auto& e : edges_) w += e.w;
    return w;
}

Graph kings_graph(int rows, int cols, WeightRule rule) {
    if (rows < 1 || cols < 1) throw validation_error("kings_graph: rows and cols must be >= 1");
    const auto node = [cols](int r, int c) { return r * cols + c; };

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(rows) * (cols - 1) + static_cast<std::size_t>(cols) * (rows - 1) +
                  2u * (rows - 1) * (cols - 1));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({node(r, c), node(r, c + 1), 1.0});
            if (r + 1 < rows) edges.push_back({node(r, c), node(r + 1, c), 1.0});
            if (r + 1 < rows && c + 1 < cols) edges.push_back({node(r, c), node(r + 1, c + 1), 1.0});
            if (r + 1 < rows && c > 0) edges.push_back({node(r, c), node(r + 1, c - 1), 1.0});
        }
    }

    if (rule.kind == WeightRule::Kind::RandomSign) {
        // Draw in sorted-edge order so the instance depends only on the seed.
        std::sort(edges.begin(), edges.end(),
                  [](const Edge& a, const Edge& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
        CounterRng rng(rule.seed, /*stream=*/0x6b696e67); // "king"
        for (auto& e : edges) e.w = (rng.next_u64() & 1u) ? 1.0 : -1.0;
    }
    return Graph(rows * cols, std::move(edges));
}

Graph random_graph(int n, double edge_prob, std::uint64_t seed) {
    if (n < 2) throw validation_error("random_graph: need n >= 2");
    if (edge_prob <= 0.0 || edge_prob > 1.0) throw validation_error("random_graph: p in (0, 1]");
    CounterRng rng(seed, /*stream=*/0x726e6467); // "rndg"
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_double() < edge_prob)
                edges.push_back({i, j, (rng.next_u64() & 1u) ? 1.0 : -1.0});
    if (edges.empty()) edges.push_back({0, 1, 1.0}); // keep the instance non-trivial
    return Graph(n, std::move(edges));
}

Graph read_problem(std::istream& in) {
    std::string line;
    long n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (ls >> n >> m) {
                if (n <= 0 || m < 0) throw validation_error("problem file: bad header");
                edges.reserve(static_cast<std::size_t>(m));
            } else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
                throw validation_error("problem file: expected 'n m' header");
            }
            continue;
        }
        int i, j;
        double w;
        if (ls >> i >> j >> w) {
            edges.push_back({i, j, w});
        } else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
            throw validation_error("problem file: bad edge line: " + line);
        }
    }
    if (n < 0) throw validation_error("problem file: empty input");
    if (static_cast<long>(edges.size()) != m)
        throw validation_error("problem file: header promised " + std::to_string(m) + " edges, got " +
                               std::to_string(edges.size()));
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph read_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open problem file: " + path);
    return read_problem(in);
}

void write_problem(std::ostream& out, const Graph& g) {
    out << g.num_nodes() << ' ' << g.num_edges() << '\n';
    char buf[64];
    for (const auto& e : g.edges()) {
        std::snprintf(buf, sizeof(buf), "%.17g", e.w);
        out << e.i << ' ' << e.j << ' ' << buf << '\n';
    }
}

void write_problem_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw validation_error("cannot write problem file: " + path);
    write_problem(out, g);
}

} // namespace oim
