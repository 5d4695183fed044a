#include "mdim/resolving.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>

namespace mdim {

namespace {

void check_ids(const DistanceMatrix& d, std::span<const Vertex> w) {
    for (Vertex x : w)
        if (x < 0 || static_cast<std::size_t>(x) >= d.order())
            throw std::out_of_range("vertex " + std::to_string(x) + " outside 0.." +
                                    std::to_string(static_cast<long long>(d.order()) - 1));
}

template <class RepFn>
CollisionReport first_collision(const DistanceMatrix& d, RepFn rep) {
    // Map each representation to its least vertex; the first repeat seen in
    // ascending v order is the least colliding v, paired with the least u.
    std::map<std::vector<int>, Vertex> seen;
    std::optional<Collision> best;
    for (Vertex v = 0; v < static_cast<Vertex>(d.order()); ++v) {
        auto r = rep(v);
        auto [it, inserted] = seen.emplace(r, v);
        if (!inserted) {
            Collision c{it->second, v, std::move(r)};
            if (!best || c.u < best->u || (c.u == best->u && c.v < best->v)) best = std::move(c);
        }
    }
    CollisionReport report;
    report.resolving = !best.has_value();
    report.first_collision = std::move(best);
    return report;
}

}  // namespace

DistanceMultiset representation(const DistanceMatrix& d, Vertex v, std::span<const Vertex> w) {
    auto r = metric_representation(d, v, w);
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<int> metric_representation(const DistanceMatrix& d, Vertex v, std::span<const Vertex> w) {
    check_ids(d, w);
    check_ids(d, std::span<const Vertex>(&v, 1));
    std::vector<int> r;
    r.reserve(w.size());
    for (Vertex x : w) r.push_back(d(v, x));
    return r;
}

CollisionReport is_m_resolving(const DistanceMatrix& d, std::span<const Vertex> w) {
    check_ids(d, w);
    return first_collision(d, [&](Vertex v) { return representation(d, v, w); });
}

CollisionReport is_metric_resolving(const DistanceMatrix& d, std::span<const Vertex> w) {
    check_ids(d, w);
    return first_collision(d, [&](Vertex v) { return metric_representation(d, v, w); });
}

int f_lower_bound(long long n, int d) {
    if (d < 1) throw std::invalid_argument("f_lower_bound needs diameter >= 1");
    for (int k = 1;; ++k) {
        if (k >= n) return k;
        // C(k+d-1, k) = C(lo+hi, lo) built as prod_{i=1..lo} (hi+i)/i, exact at
        // every step; stop as soon as it reaches n - k.
        const auto need = static_cast<unsigned __int128>(n - k);
        const long long lo = std::min<long long>(k, d - 1), hi = std::max<long long>(k, d - 1);
        unsigned __int128 c = 1;
        for (long long i = 1; i <= lo && c < need; ++i)
            c = c * static_cast<unsigned __int128>(hi + i) / static_cast<unsigned __int128>(i);
        if (c >= need) return k;
    }
}

const char* to_string(BoundKind kind) {
    switch (kind) {
    case BoundKind::Trivial: return "trivial";
    case BoundKind::NonPath: return "non_path";
    case BoundKind::SigmaMinusEx: return "sigma_minus_ex";
    case BoundKind::Diameter: return "diameter";
    case BoundKind::TwinPairs: return "twin_pairs";
    }
    return "unknown";
}

std::vector<BoundKind> LowerBound::attained_by() const {
    std::vector<BoundKind> out;
    for (const auto& t : terms)
        if (t.value == value) out.push_back(t.kind);
    return out;
}

LowerBound md_lower_bound(const Graph& g, const DistanceMatrix& d, const TwinPartition& tp,
                          const MajorVertexReport& mr) {
    LowerBound lb;
    lb.terms.push_back({BoundKind::Trivial, 1});
    if (!is_path(g)) {
        lb.terms.push_back({BoundKind::NonPath, 3});
        lb.terms.push_back({BoundKind::SigmaMinusEx, mr.sigma - mr.ex});
        if (const int diam = diameter(d); diam >= 1)
            lb.terms.push_back({BoundKind::Diameter, f_lower_bound(static_cast<long long>(g.order()), diam)});
        // Every m-resolving set holds exactly one vertex of each twin pair.
        lb.terms.push_back({BoundKind::TwinPairs, static_cast<int>(tp.pair_count())});
    }
    for (const auto& t : lb.terms) lb.value = std::max(lb.value, t.value);
    return lb;
}

const char* to_string(InfiniteCertificate::Kind kind) {
    switch (kind) {
    case InfiniteCertificate::Kind::DiameterTwoNonPath: return "DiameterTwoNonPath";
    case InfiniteCertificate::Kind::LargeTwinClass: return "LargeTwinClass";
    case InfiniteCertificate::Kind::ExhaustiveSearch: return "ExhaustiveSearch";
    }
    return "Unknown";
}

std::optional<InfiniteCertificate> detect_infinite(const Graph& g, const DistanceMatrix& d,
                                                   const TwinPartition& tp) {
    if (is_path(g)) return std::nullopt;
    if (diameter(d) <= 2) return InfiniteCertificate{InfiniteCertificate::Kind::DiameterTwoNonPath, {}};
    if (const VertexSet* big = tp.largest(); big && big->size() >= 3)
        return InfiniteCertificate{InfiniteCertificate::Kind::LargeTwinClass, *big};
    return std::nullopt;
}

bool violates_dist2_lemma(const DistanceMatrix& d, std::span<const Vertex> w) {
    check_ids(d, w);
    if (w.size() < 2) return false;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (d(w[i], w[j]) > 2) return false;
    return true;
}

VertexMask to_mask(std::span<const Vertex> w) {
    VertexMask m = 0;
    for (Vertex x : w) {
        if (x < 0 || x >= 64) throw std::out_of_range("vertex id does not fit a 64-bit mask");
        m |= VertexMask{1} << x;
    }
    return m;
}

VertexSet from_mask(VertexMask mask) {
    VertexSet out;
    out.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

MaskResolver::MaskResolver(const DistanceMatrix& d) : n_(d.order()), d_(&d) {
    if (n_ > max_order) throw std::invalid_argument("MaskResolver supports at most 64 vertices");
    within_two_.assign(n_, 0);
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = 0; v < n_; ++v)
            if (d(static_cast<Vertex>(u), static_cast<Vertex>(v)) <= 2) within_two_[u] |= VertexMask{1} << v;
}

template <bool Sorted>
bool MaskResolver::resolves(VertexMask w) const {
    const int k = std::popcount(w);
    if (n_ <= 1) return true;
    if (k == 0) return false;

    std::array<Vertex, max_order> members{};
    int m = 0;
    for (VertexMask rest = w; rest; rest &= rest - 1) members[static_cast<std::size_t>(m++)] = std::countr_zero(rest);

    if (k <= 21) {
        // Hop counts are below 64, so six bits per entry packs a k-tuple
        // injectively into 128 bits.
        std::array<unsigned __int128, max_order> keys{};
        std::array<int, max_order> buf{};
        for (std::size_t v = 0; v < n_; ++v) {
            const auto row = d_->row(static_cast<Vertex>(v));
            for (int i = 0; i < k; ++i) buf[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(members[static_cast<std::size_t>(i)])];
            if constexpr (Sorted) std::sort(buf.begin(), buf.begin() + k);
            unsigned __int128 key = 0;
            for (int i = 0; i < k; ++i) key = (key << 6) | static_cast<unsigned>(buf[static_cast<std::size_t>(i)]);
            keys[v] = key;
        }
        std::sort(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(n_));
        return std::adjacent_find(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(n_)) ==
               keys.begin() + static_cast<std::ptrdiff_t>(n_);
    }

    std::vector<std::vector<int>> reps(n_);
    for (std::size_t v = 0; v < n_; ++v) {
        auto& r = reps[v];
        r.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) r.push_back((*d_)(static_cast<Vertex>(v), members[static_cast<std::size_t>(i)]));
        if constexpr (Sorted) std::sort(r.begin(), r.end());
    }
    std::sort(reps.begin(), reps.end());
    return std::adjacent_find(reps.begin(), reps.end()) == reps.end();
}

bool MaskResolver::multiset_resolves(VertexMask w) const { return resolves<true>(w); }

bool MaskResolver::metric_resolves(VertexMask w) const { return resolves<false>(w); }

bool MaskResolver::pairwise_within_two(VertexMask w) const {
    if (std::popcount(w) < 2) return false;
    for (VertexMask rest = w; rest; rest &= rest - 1)
        if ((w & ~within_two_[static_cast<std::size_t>(std::countr_zero(rest))]) != 0) return false;
    return true;
}

}  // namespace mdim
