#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdim/distance.hpp"
#include "mdim/graph.hpp"
#include "mdim/structure.hpp"

namespace mdim {

/// r_m(v|W): ascending hop counts from v to every member of W.
using DistanceMultiset = std::vector<int>;

struct Collision {
    Vertex u = 0;
    Vertex v = 0;
    /// Shared representation (multiset, or ordered tuple for metric checks).
    std::vector<int> shared;
};

struct CollisionReport {
    bool resolving = true;
    /// Least (u, v), u < v, with equal representations.
    std::optional<Collision> first_collision;
};

DistanceMultiset representation(const DistanceMatrix& d, Vertex v, std::span<const Vertex> w);

/// Ordered tuple (d(v, w_1), ..., d(v, w_k)).
std::vector<int> metric_representation(const DistanceMatrix& d, Vertex v, std::span<const Vertex> w);

/// Throws std::out_of_range for ids outside 0..n-1.
CollisionReport is_m_resolving(const DistanceMatrix& d, std::span<const Vertex> w);
CollisionReport is_metric_resolving(const DistanceMatrix& d, std::span<const Vertex> w);

/// Least k >= 1 with C(k+d-1, d-1) + k >= n, exact for any inputs.
int f_lower_bound(long long n, int d);

enum class BoundKind { Trivial, NonPath, SigmaMinusEx, Diameter, TwinPairs };

const char* to_string(BoundKind kind);

struct LowerBound {
    struct Term {
        BoundKind kind;
        int value;
    };
    int value = 1;
    std::vector<Term> terms;

    /// Terms whose value equals the maximum.
    std::vector<BoundKind> attained_by() const;
};

LowerBound md_lower_bound(const Graph& g, const DistanceMatrix& d, const TwinPartition& tp,
                          const MajorVertexReport& mr);

struct InfiniteCertificate {
    enum class Kind { DiameterTwoNonPath, LargeTwinClass, ExhaustiveSearch };
    Kind kind = Kind::ExhaustiveSearch;
    /// The offending class for LargeTwinClass; empty otherwise.
    VertexSet twin_class;
};

const char* to_string(InfiniteCertificate::Kind kind);

std::optional<InfiniteCertificate> detect_infinite(const Graph& g, const DistanceMatrix& d,
                                                   const TwinPartition& tp);

/// True when |w| >= 2 and all pairwise distances in w are at most 2; such a
/// set is never m-resolving.
bool violates_dist2_lemma(const DistanceMatrix& d, std::span<const Vertex> w);

using VertexMask = std::uint64_t;

VertexMask to_mask(std::span<const Vertex> w);
VertexSet from_mask(VertexMask mask);

/// Resolvability tests over bitmask subsets of graphs with at most 64
/// vertices. Stateless after construction; safe to share between threads.
class MaskResolver {
public:
    static constexpr std::size_t max_order = 64;

    explicit MaskResolver(const DistanceMatrix& d);

    std::size_t order() const noexcept { return n_; }
    bool multiset_resolves(VertexMask w) const;
    bool metric_resolves(VertexMask w) const;
    bool pairwise_within_two(VertexMask w) const;

private:
    template <bool Sorted>
    bool resolves(VertexMask w) const;

    std::size_t n_;
    const DistanceMatrix* d_;
    std::vector<VertexMask> within_two_;
};

}  // namespace mdim
