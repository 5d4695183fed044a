#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/resolving.hpp"

namespace mdim {

struct SearchConfig {
    std::size_t max_vertices = 24;
    bool parallel = false;
    /// Worker threads when parallel; 0 picks std::thread::hardware_concurrency.
    unsigned workers = 0;
    bool progress_reporting = false;
    std::ostream* progress = nullptr;  // defaults to std::cerr
};

struct Finite {
    int value = 0;
    VertexSet witness;
    friend bool operator==(const Finite&, const Finite&) = default;
};

struct Infinite {
    InfiniteCertificate certificate;
};

struct Aborted {
    std::string reason;
};

struct ResolveOutcome {
    std::variant<Finite, Infinite, Aborted> result;
    /// Candidate subsets examined per size k (index k); diagnostic only.
    std::vector<std::uint64_t> candidates_per_size;

    bool finite() const { return std::holds_alternative<Finite>(result); }
    bool infinite() const { return std::holds_alternative<Infinite>(result); }
    bool aborted() const { return std::holds_alternative<Aborted>(result); }
    const Finite& as_finite() const { return std::get<Finite>(result); }
    const Infinite& as_infinite() const { return std::get<Infinite>(result); }
    const Aborted& as_aborted() const { return std::get<Aborted>(result); }
};

class SearchAborted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact multiset dimension with the lexicographically least minimum witness.
/// Throws GraphError(Disconnected).
ResolveOutcome compute_md(const Graph& g, const SearchConfig& cfg = {});

/// Exact metric dimension. Throws SearchAborted above the vertex cap and
/// GraphError(Disconnected).
Finite compute_dim(const Graph& g, const SearchConfig& cfg = {});

/// md by plain enumeration of every subset, no bounds and no pruning.
/// Returns nullopt when no subset is m-resolving.
std::optional<Finite> brute_force_md(const DistanceMatrix& d);

struct WitnessReport {
    CollisionReport multiset;
    CollisionReport metric;
    std::vector<DistanceMultiset> representations;
};

WitnessReport verify_witness(const Graph& g, std::span<const Vertex> w);

}  // namespace mdim
