#include "mdim/distance.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace mdim {

DistanceMatrix all_pairs_distances(const Graph& g) {
    constexpr auto unreached = std::numeric_limits<DistanceMatrix::Hops>::max();
    const std::size_t n = g.order();
    DistanceMatrix dm;
    dm.n_ = n;
    dm.d_.assign(n * n, unreached);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        auto* row = dm.d_.data() + s * n;
        row[s] = 0;
        queue.clear();
        queue.push_back(static_cast<Vertex>(s));
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex u = queue[head];
            for (Vertex v : g.neighbors(u)) {
                if (row[v] == unreached) {
                    row[v] = static_cast<DistanceMatrix::Hops>(row[u] + 1);
                    queue.push_back(v);
                }
            }
        }
        if (queue.size() != n) {
            const auto* miss = std::find(row, row + n, unreached);
            const Edge pair{static_cast<Vertex>(s), static_cast<Vertex>(miss - row)};
            throw GraphError(GraphError::Kind::Disconnected, pair,
                             "graph is disconnected: no path between " + std::to_string(pair.first) +
                                 " and " + std::to_string(pair.second));
        }
    }
    return dm;
}

int diameter(const DistanceMatrix& d) {
    int best = 0;
    for (Vertex v = 0; v < static_cast<Vertex>(d.order()); ++v)
        for (auto h : d.row(v)) best = std::max(best, static_cast<int>(h));
    return best;
}

}  // namespace mdim
