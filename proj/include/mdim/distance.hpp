#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

/// All-pairs hop counts of a connected graph, stored row-major.
class DistanceMatrix {
public:
    using Hops = std::uint16_t;

    DistanceMatrix() = default;

    std::size_t order() const noexcept { return n_; }
    Hops operator()(Vertex u, Vertex v) const {
        return d_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)];
    }
    std::span<const Hops> row(Vertex v) const {
        return {d_.data() + static_cast<std::size_t>(v) * n_, n_};
    }

private:
    friend DistanceMatrix all_pairs_distances(const Graph& g);

    std::size_t n_ = 0;
    std::vector<Hops> d_;
};

/// BFS from every vertex. Throws GraphError(Disconnected) naming vertex 0
/// and the least vertex it cannot reach.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Maximum entry; 0 for graphs of order <= 1.
int diameter(const DistanceMatrix& d);

}  // namespace mdim
