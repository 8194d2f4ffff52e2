#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "dbb/numerics.hpp"

namespace dbb {

enum class GraphKind { complete, ring, erdos_renyi };

/// Undirected simple graph; edges stored as (i, j) with i < j, sorted.
struct Graph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::vector<std::vector<std::size_t>> adjacency() const;
    std::vector<std::size_t> degrees() const;
};

/// Builds a graph from an arbitrary pair list, normalizing order and dropping duplicates.
Graph make_graph_from_edges(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges);

/// `prob` is used only for erdos_renyi, which resamples up to 100 times until connected.
Graph make_graph(GraphKind kind, std::size_t n, std::uint64_t seed, double prob = 1.0);

bool is_connected(const Graph& g);

struct MixingMatrix {
    SymMatrix W;
    double lambda2 = 0.0;
};

MixingMatrix metropolis_weights(const Graph& g);
MixingMatrix sinkhorn_random_weights(const Graph& g, std::uint64_t seed);
/// (I + W)/2: same support, every eigenvalue moved into [0, 1].
MixingMatrix lazy_weights(const MixingMatrix& m);
/// (1/n)𝟙𝟙ᵀ
MixingMatrix uniform_weights(std::size_t n);

/// Largest |eigenvalue| of W − (1/n)𝟙𝟙ᵀ.
double second_eigenvalue(const SymMatrix& W);

}  // namespace dbb
