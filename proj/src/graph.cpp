#include "mdim/graph.hpp"

#include <algorithm>
#include <queue>

namespace mdim {

const char* to_string(GraphError::Kind kind) {
    switch (kind) {
    case GraphError::Kind::LoopEdge: return "LoopEdge";
    case GraphError::Kind::DuplicateEdge: return "DuplicateEdge";
    case GraphError::Kind::VertexOutOfRange: return "VertexOutOfRange";
    case GraphError::Kind::Disconnected: return "Disconnected";
    }
    return "Unknown";
}

namespace {

std::string edge_text(Edge e) {
    return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

}  // namespace

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& adj = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adjacency_.size(); ++u)
        for (Vertex v : adjacency_[u])
            if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
    return out;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.adjacency_.assign(n, {});
    const auto in_range = [n](Vertex v) { return v >= 0 && static_cast<std::size_t>(v) < n; };
    for (const Edge& e : edges) {
        if (!in_range(e.first) || !in_range(e.second))
            throw GraphError(GraphError::Kind::VertexOutOfRange, e,
                             "edge " + edge_text(e) + " has an endpoint outside 0.." +
                                 std::to_string(static_cast<long long>(n) - 1));
        if (e.first == e.second)
            throw GraphError(GraphError::Kind::LoopEdge, e, "loop edge " + edge_text(e));
        g.adjacency_[static_cast<std::size_t>(e.first)].push_back(e.second);
        g.adjacency_[static_cast<std::size_t>(e.second)].push_back(e.first);
    }
    for (std::size_t u = 0; u < n; ++u) {
        auto& adj = g.adjacency_[u];
        std::sort(adj.begin(), adj.end());
        auto dup = std::adjacent_find(adj.begin(), adj.end());
        if (dup != adj.end()) {
            Edge e{static_cast<Vertex>(u), *dup};
            if (e.first > e.second) std::swap(e.first, e.second);
            throw GraphError(GraphError::Kind::DuplicateEdge, e, "duplicate edge " + edge_text(e));
        }
    }
    g.edge_count_ = edges.size();
    return g;
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.order();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::queue<Vertex> todo;
    todo.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!todo.empty()) {
        Vertex u = todo.front();
        todo.pop();
        for (Vertex v : g.neighbors(u)) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                todo.push(v);
            }
        }
    }
    return reached == n;
}

bool is_path(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0) return false;
    if (g.size() != n - 1) return false;
    for (std::size_t v = 0; v < n; ++v)
        if (g.degree(static_cast<Vertex>(v)) > 2) return false;
    return is_connected(g);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const auto nh = static_cast<Vertex>(h.order());
    const auto id = [nh](Vertex a, Vertex b) { return a * nh + b; };
    std::vector<Edge> edges;
    edges.reserve(g.order() * h.size() + h.order() * g.size());
    for (Vertex a = 0; a < static_cast<Vertex>(g.order()); ++a)
        for (auto [b, b2] : h.edges()) edges.emplace_back(id(a, b), id(a, b2));
    for (auto [a, a2] : g.edges())
        for (Vertex b = 0; b < nh; ++b) edges.emplace_back(id(a, b), id(a2, b));
    return build_graph(g.order() * h.order(), edges);
}

}  // namespace mdim
