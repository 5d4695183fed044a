#pragma once

#include <cstdint>

#include "mdim/graph.hpp"

namespace mdim {

/// Labeled graphs on n <= 11 vertices as adjacency bit strings. Pair (i, j),
/// i < j, has index j(j-1)/2 + i and is stored at bit E-1-index, E = n(n-1)/2,
/// so numeric order on codes is lexicographic order on bit strings.
using EdgeCode = std::uint64_t;

constexpr int max_code_order = 11;

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

EdgeCode code_of(const Graph& g);
Graph graph_from_code(int n, EdgeCode code);
bool code_connected(int n, EdgeCode code);

/// Least code over all n! relabelings.
EdgeCode canonical_code(int n, EdgeCode code);

/// code == canonical_code(n, code), with early exit.
bool is_canonical(int n, EdgeCode code);

}  // namespace mdim
