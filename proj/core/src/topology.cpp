#include "dbb/topology.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "dbb/error.hpp"
#include "dbb/rng.hpp"

namespace dbb {

namespace {

constexpr int kResampleCap = 100;
constexpr int kSinkhornSweepCap = 10000;
constexpr double kSumTolerance = 1e-10;

MixingMatrix finish(const Matrix& m) {
    MixingMatrix out;
    out.W = SymMatrix(m);
    out.lambda2 = second_eigenvalue(out.W);
    return out;
}

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw ConfigError("graph is not connected", "topology");
}

}  // namespace

std::vector<std::vector<std::size_t>> Graph::adjacency() const {
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [i, j] : edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> d(n, 0);
    for (auto [i, j] : edges) {
        ++d[i];
        ++d[j];
    }
    return d;
}

Graph make_graph_from_edges(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) {
    Graph g;
    g.n = n;
    for (auto [i, j] : edges) {
        if (i >= n || j >= n) throw ConfigError("edge endpoint out of range", "topology");
        if (i == j) throw ConfigError("self-loops are not allowed", "topology");
        g.edges.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

Graph make_graph(GraphKind kind, std::size_t n, std::uint64_t seed, double prob) {
    if (n < 2) throw ConfigError("graph needs at least 2 agents", "n");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    switch (kind) {
        case GraphKind::complete:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            return make_graph_from_edges(n, std::move(edges));
        case GraphKind::ring:
            for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
            return make_graph_from_edges(n, std::move(edges));
        case GraphKind::erdos_renyi: {
            if (!(prob > 0.0 && prob <= 1.0))
                throw ConfigError("edge probability must lie in (0, 1]", "edge_prob");
            auto rng = make_stream(seed, Stream::graph);
            std::uniform_real_distribution<double> u(0.0, 1.0);
            for (int attempt = 0; attempt < kResampleCap; ++attempt) {
                edges.clear();
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (u(rng) < prob) edges.emplace_back(i, j);
                Graph g = make_graph_from_edges(n, edges);
                if (is_connected(g)) return g;
            }
            throw GenerationError("no connected Erdos-Renyi sample after " +
                                  std::to_string(kResampleCap) + " attempts");
        }
    }
    throw ConfigError("unknown graph kind", "topology");
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    const auto adj = g.adjacency();
    std::vector<bool> seen(g.n, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                queue.push_back(w);
            }
    }
    return count == g.n;
}

MixingMatrix metropolis_weights(const Graph& g) {
    require_connected(g);
    const auto deg = g.degrees();
    Matrix m(g.n, g.n);
    for (auto [i, j] : g.edges) {
        const double w = 1.0 / (1.0 + static_cast<double>(std::max(deg[i], deg[j])));
        m(i, j) = w;
        m(j, i) = w;
    }
    for (std::size_t i = 0; i < g.n; ++i) {
        double off = 0.0;
        for (std::size_t j = 0; j < g.n; ++j)
            if (j != i) off += m(i, j);
        m(i, i) = 1.0 - off;
    }
    return finish(m);
}

MixingMatrix sinkhorn_random_weights(const Graph& g, std::uint64_t seed) {
    require_connected(g);
    const std::size_t n = g.n;
    auto rng = make_stream(seed, Stream::weights);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = uniform_open_closed(rng);
    for (auto [i, j] : g.edges) {
        const double w = uniform_open_closed(rng);
        m(i, j) = w;
        m(j, i) = w;
    }

    auto worst_deviation = [&] {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double row = 0.0, col = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                row += m(i, j);
                col += m(j, i);
            }
            worst = std::max({worst, std::abs(row - 1.0), std::abs(col - 1.0)});
        }
        return worst;
    };

    for (int sweep = 0; sweep < kSinkhornSweepCap; ++sweep) {
        if (worst_deviation() <= kSumTolerance) return finish(m);
        for (std::size_t i = 0; i < n; ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < n; ++j) row += m(i, j);
            for (std::size_t j = 0; j < n; ++j) m(i, j) /= row;
        }
        for (std::size_t j = 0; j < n; ++j) {
            double col = 0.0;
            for (std::size_t i = 0; i < n; ++i) col += m(i, j);
            for (std::size_t i = 0; i < n; ++i) m(i, j) /= col;
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double s = 0.5 * (m(i, j) + m(j, i));
                m(i, j) = s;
                m(j, i) = s;
            }
    }
    const double dev = worst_deviation();
    if (dev <= kSumTolerance) return finish(m);
    throw GenerationError("Sinkhorn normalization did not converge", dev);
}

MixingMatrix lazy_weights(const MixingMatrix& m) {
    const std::size_t n = m.W.dim();
    Matrix w(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w(i, j) = 0.5 * m.W(i, j) + (i == j ? 0.5 : 0.0);
    return finish(w);
}

MixingMatrix uniform_weights(std::size_t n) {
    if (n == 0) throw ConfigError("uniform weights need at least one agent", "n");
    return finish(Matrix(n, n, 1.0 / static_cast<double>(n)));
}

double second_eigenvalue(const SymMatrix& W) {
    const std::size_t n = W.dim();
    const double avg = 1.0 / static_cast<double>(n);
    Matrix d(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d(i, j) = W(i, j) - avg;
    const EigBounds eb = sym_eig_bounds(SymMatrix(d));
    return std::max(std::abs(eb.lambda_min), std::abs(eb.lambda_max));
}

}  // namespace dbb
