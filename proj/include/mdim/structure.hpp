#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "mdim/distance.hpp"
#include "mdim/graph.hpp"

namespace mdim {

/// Partition of V(G) into classes of the "equal or twins" relation, where
/// u, v are twins when N(u) \ {v} == N(v) \ {u}. Classes are ascending and
/// ordered by their least vertex.
struct TwinPartition {
    std::vector<VertexSet> classes;

    std::size_t pair_count() const;
    const VertexSet* largest() const;
};

class RelationNotTransitive : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

bool are_twins(const Graph& g, Vertex u, Vertex v);

TwinPartition twin_partition(const Graph& g);

struct MajorVertexReport {
    VertexSet majors;
    /// Terminal pendant vertices per major vertex (every major has an entry).
    std::map<Vertex, VertexSet> terminals;
    int sigma = 0;
    int ex = 0;
};

MajorVertexReport major_vertex_report(const Graph& g, const DistanceMatrix& d);

}  // namespace mdim
