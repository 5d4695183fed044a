#include "mdim/structure.hpp"

#include <algorithm>
#include <string>

namespace mdim {

std::size_t TwinPartition::pair_count() const {
    return static_cast<std::size_t>(
        std::count_if(classes.begin(), classes.end(), [](const VertexSet& c) { return c.size() == 2; }));
}

const VertexSet* TwinPartition::largest() const {
    const VertexSet* best = nullptr;
    for (const auto& c : classes)
        if (!best || c.size() > best->size()) best = &c;
    return best;
}

bool are_twins(const Graph& g, Vertex u, Vertex v) {
    if (u == v) return true;
    auto nu = g.neighbors(u);
    auto nv = g.neighbors(v);
    // Merge-compare the sorted lists while skipping v in N(u) and u in N(v).
    auto a = nu.begin();
    auto b = nv.begin();
    for (;;) {
        if (a != nu.end() && *a == v) ++a;
        if (b != nv.end() && *b == u) ++b;
        if (a == nu.end() || b == nv.end()) return a == nu.end() && b == nv.end();
        if (*a != *b) return false;
        ++a;
        ++b;
    }
}

TwinPartition twin_partition(const Graph& g) {
    const auto n = static_cast<Vertex>(g.order());
    std::vector<char> related(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    const auto rel = [&](Vertex u, Vertex v) -> char& {
        return related[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
    };
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u; v < n; ++v) rel(u, v) = rel(v, u) = are_twins(g, u, v) ? 1 : 0;

    TwinPartition tp;
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (Vertex v = 0; v < n; ++v) {
        if (owner[static_cast<std::size_t>(v)] >= 0) continue;
        VertexSet cls{v};
        for (Vertex u = v + 1; u < n; ++u)
            if (owner[static_cast<std::size_t>(u)] < 0 && rel(v, u)) cls.push_back(u);
        for (Vertex u : cls) owner[static_cast<std::size_t>(u)] = static_cast<int>(tp.classes.size());
        tp.classes.push_back(std::move(cls));
    }

    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const bool same = owner[static_cast<std::size_t>(u)] == owner[static_cast<std::size_t>(v)];
            if (same != static_cast<bool>(rel(u, v)))
                throw RelationNotTransitive("twin relation is not an equivalence at vertices " +
                                            std::to_string(u) + " and " + std::to_string(v));
        }
    return tp;
}

MajorVertexReport major_vertex_report(const Graph& g, const DistanceMatrix& d) {
    MajorVertexReport r;
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) >= 3) {
            r.majors.push_back(v);
            r.terminals[v];
        }
    if (r.majors.empty()) return r;

    for (Vertex u = 0; u < n; ++u) {
        if (g.degree(u) != 1) continue;
        // u is terminal for the strictly closest major vertex, if unique.
        Vertex closest = -1;
        int best = -1;
        bool tie = false;
        for (Vertex m : r.majors) {
            const int dist = d(u, m);
            if (best < 0 || dist < best) {
                best = dist;
                closest = m;
                tie = false;
            } else if (dist == best) {
                tie = true;
            }
        }
        if (!tie) r.terminals[closest].push_back(u);
    }
    for (const auto& [m, terms] : r.terminals) {
        r.sigma += static_cast<int>(terms.size());
        if (!terms.empty()) ++r.ex;
    }
    return r;
}

}  // namespace mdim
