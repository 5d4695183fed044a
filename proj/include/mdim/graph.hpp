#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mdim {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
/// Ascending list of vertex ids.
using VertexSet = std::vector<Vertex>;

class GraphError : public std::runtime_error {
public:
    enum class Kind { LoopEdge, DuplicateEdge, VertexOutOfRange, Disconnected };

    GraphError(Kind kind, Edge edge, const std::string& what)
        : std::runtime_error(what), kind_(kind), edge_(edge) {}

    Kind kind() const noexcept { return kind_; }
    /// Offending edge, or for Disconnected two vertices in different components.
    Edge edge() const noexcept { return edge_; }

private:
    Kind kind_;
    Edge edge_;
};

const char* to_string(GraphError::Kind kind);

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
public:
    Graph() = default;

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    std::size_t degree(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Edges as (u, v) with u < v, ascending.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Throws GraphError on loops, repeated edges or ids outside 0..n-1.
Graph build_graph(std::size_t n, std::span<const Edge> edges);

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

bool is_connected(const Graph& g);

/// Connected, at most n-1 edges and maximum degree 2. K1 and K2 count as paths.
bool is_path(const Graph& g);

/// Vertex (a, b) gets id a * |V(h)| + b.
Graph cartesian_product(const Graph& g, const Graph& h);

}  // namespace mdim
