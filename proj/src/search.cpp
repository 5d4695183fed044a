#include "mdim/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <iostream>
#include <limits>
#include <thread>

#include "mdim/structure.hpp"

namespace mdim {

namespace {

// How a vertex participates in candidate subsets. A size-2 twin class
// {a, b}, a < b, contributes exactly one vertex: a is decided freely and b
// takes the complementary decision.
enum class Slot : std::uint8_t { Free, PairFirst, PairSecond };

struct Layout {
    std::vector<Slot> slot;
    std::vector<Vertex> partner;
    std::vector<int> free_suffix;  // free vertices with id >= v
    std::vector<int> pair_suffix;  // pairs whose first vertex is >= v
};

Layout unconstrained_layout(std::size_t n) {
    Layout l;
    l.slot.assign(n, Slot::Free);
    l.partner.assign(n, -1);
    l.free_suffix.assign(n + 1, 0);
    l.pair_suffix.assign(n + 1, 0);
    for (std::size_t v = n; v-- > 0;) l.free_suffix[v] = l.free_suffix[v + 1] + 1;
    return l;
}

Layout twin_layout(const TwinPartition& tp, std::size_t n) {
    Layout l = unconstrained_layout(n);
    for (const auto& c : tp.classes) {
        if (c.size() != 2) continue;
        const auto a = static_cast<std::size_t>(c[0]);
        const auto b = static_cast<std::size_t>(c[1]);
        l.slot[a] = Slot::PairFirst;
        l.slot[b] = Slot::PairSecond;
        l.partner[a] = c[1];
        l.partner[b] = c[0];
    }
    for (std::size_t v = n; v-- > 0;) {
        l.free_suffix[v] = l.free_suffix[v + 1] + (l.slot[v] == Slot::Free ? 1 : 0);
        l.pair_suffix[v] = l.pair_suffix[v + 1] + (l.slot[v] == Slot::PairFirst ? 1 : 0);
    }
    return l;
}

struct Node {
    std::size_t next = 0;  // next vertex to decide
    VertexMask chosen = 0;
    int remaining = 0;  // vertices still to add
    int pending = 0;    // pair seconds forced in by an excluded first
};

using Accept = std::function<bool(VertexMask)>;

// Include-before-exclude depth-first enumeration of size-k subsets. For sets
// of equal size this visits them in lexicographic order of their ascending
// id lists.
class Enumerator {
public:
    Enumerator(const Layout& layout, std::size_t n) : layout_(layout), n_(n) {}

    bool feasible(const Node& s) const {
        const int min_need = layout_.pair_suffix[s.next] + s.pending;
        const int max_need = min_need + layout_.free_suffix[s.next];
        return s.remaining >= min_need && s.remaining <= max_need;
    }

    template <class Visit>
    bool walk(const Node& s, std::size_t stop_depth, Visit&& visit) const {
        if (!feasible(s)) return false;
        if (s.next == stop_depth || s.next == n_) return visit(s);
        const std::size_t v = s.next;
        const VertexMask bit = VertexMask{1} << v;
        Node in = s, out = s;
        in.next = out.next = v + 1;
        in.chosen |= bit;
        in.remaining -= 1;
        switch (layout_.slot[v]) {
        case Slot::Free:
            return walk(in, stop_depth, visit) || walk(out, stop_depth, visit);
        case Slot::PairFirst:
            out.pending += 1;
            return walk(in, stop_depth, visit) || walk(out, stop_depth, visit);
        case Slot::PairSecond: {
            const bool partner_in = (s.chosen >> layout_.partner[v]) & 1U;
            if (partner_in) return walk(out, stop_depth, visit);
            in.pending -= 1;
            return walk(in, stop_depth, visit);
        }
        }
        return false;
    }

private:
    const Layout& layout_;
    std::size_t n_;
};

struct SizeResult {
    std::optional<VertexMask> witness;
    std::uint64_t examined = 0;
};

unsigned worker_count(const SearchConfig& cfg) {
    if (!cfg.parallel) return 1;
    unsigned w = cfg.workers ? cfg.workers : std::thread::hardware_concurrency();
    return std::max(1U, w);
}

// Lexicographically least accepted subset of size k, or none. Shards are
// prefixes in lexicographic order, so the least shard index holding a hit
// gives the overall least witness regardless of scheduling.
SizeResult search_size(const Layout& layout, std::size_t n, int k, const Accept& accept, unsigned workers) {
    const Enumerator en(layout, n);
    const Node root{0, 0, k, 0};
    SizeResult out;

    const auto run_shard = [&](const Node& start, std::uint64_t& examined) -> std::optional<VertexMask> {
        std::optional<VertexMask> hit;
        en.walk(start, n, [&](const Node& leaf) {
            if (leaf.remaining != 0 || leaf.pending != 0) return false;
            ++examined;
            if (accept(leaf.chosen)) {
                hit = leaf.chosen;
                return true;
            }
            return false;
        });
        return hit;
    };

    if (workers <= 1) {
        out.witness = run_shard(root, out.examined);
        return out;
    }

    std::size_t depth = std::min<std::size_t>(n, 2 + static_cast<std::size_t>(std::bit_width(workers * 8U)));
    std::vector<Node> shards;
    en.walk(root, depth, [&](const Node& s) {
        shards.push_back(s);
        return false;
    });

    std::vector<std::optional<VertexMask>> hits(shards.size());
    std::vector<std::uint64_t> counts(shards.size(), 0);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    const auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= shards.size()) return;
            if (i > best.load()) continue;
            hits[i] = run_shard(shards[i], counts[i]);
            if (hits[i]) {
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    pool.clear();

    for (std::size_t i = 0; i < shards.size(); ++i) {
        out.examined += counts[i];
        if (!out.witness && hits[i]) out.witness = hits[i];
    }
    return out;
}

std::ostream& progress_stream(const SearchConfig& cfg) { return cfg.progress ? *cfg.progress : std::cerr; }

std::optional<std::string> cap_violation(const Graph& g, const SearchConfig& cfg) {
    const std::size_t cap = std::min(cfg.max_vertices, MaskResolver::max_order);
    if (g.order() <= cap) return std::nullopt;
    return "graph has " + std::to_string(g.order()) + " vertices, above the exhaustive-search cap of " +
           std::to_string(cap);
}

}  // namespace

ResolveOutcome compute_md(const Graph& g, const SearchConfig& cfg) {
    ResolveOutcome out;
    if (auto why = cap_violation(g, cfg)) {
        out.result = Aborted{*why};
        return out;
    }
    const std::size_t n = g.order();
    if (n == 0) throw std::invalid_argument("multiset dimension of the empty graph is undefined");
    const DistanceMatrix d = all_pairs_distances(g);

    if (is_path(g)) {
        Vertex end = 0;
        while (static_cast<std::size_t>(end) < n && g.degree(end) > 1) ++end;
        out.result = Finite{1, {end}};
        return out;
    }

    const TwinPartition tp = twin_partition(g);
    if (auto cert = detect_infinite(g, d, tp)) {
        out.result = Infinite{*cert};
        return out;
    }

    const LowerBound lb = md_lower_bound(g, d, tp, major_vertex_report(g, d));
    const Layout layout = twin_layout(tp, n);
    const MaskResolver resolver(d);
    // Sets whose members are pairwise within distance 2 never resolve.
    const Accept accept = [&](VertexMask w) {
        return !resolver.pairwise_within_two(w) && resolver.multiset_resolves(w);
    };
    const unsigned workers = worker_count(cfg);
    out.candidates_per_size.assign(n + 1, 0);

    // m-resolvability is not monotone under supersets: sizes are tried in
    // ascending order and every size must fail before declaring infinity.
    for (int k = lb.value; k <= static_cast<int>(n); ++k) {
        const SizeResult r = search_size(layout, n, k, accept, workers);
        out.candidates_per_size[static_cast<std::size_t>(k)] = r.examined;
        if (cfg.progress_reporting)
            progress_stream(cfg) << "md search: size " << k << ", " << r.examined << " candidates"
                                 << (r.witness ? ", witness found" : "") << '\n';
        if (r.witness) {
            if (k == 2) throw std::logic_error("search produced a multiset basis of size 2");
            out.result = Finite{k, from_mask(*r.witness)};
            return out;
        }
    }
    out.result = Infinite{InfiniteCertificate{InfiniteCertificate::Kind::ExhaustiveSearch, {}}};
    return out;
}

Finite compute_dim(const Graph& g, const SearchConfig& cfg) {
    if (auto why = cap_violation(g, cfg)) throw SearchAborted(*why);
    const std::size_t n = g.order();
    if (n == 0) throw std::invalid_argument("metric dimension of the empty graph is undefined");
    const DistanceMatrix d = all_pairs_distances(g);
    const MaskResolver resolver(d);
    const Layout layout = unconstrained_layout(n);
    const Accept accept = [&](VertexMask w) { return resolver.metric_resolves(w); };
    const unsigned workers = worker_count(cfg);
    for (int k = 1; k <= static_cast<int>(n); ++k) {
        const SizeResult r = search_size(layout, n, k, accept, workers);
        if (cfg.progress_reporting)
            progress_stream(cfg) << "dim search: size " << k << ", " << r.examined << " candidates\n";
        if (r.witness) return Finite{k, from_mask(*r.witness)};
    }
    throw std::logic_error("V(G) is always metric-resolving");
}

std::optional<Finite> brute_force_md(const DistanceMatrix& d) {
    const std::size_t n = d.order();
    if (n > MaskResolver::max_order) throw SearchAborted("brute_force_md supports at most 64 vertices");
    const MaskResolver resolver(d);
    const Layout layout = unconstrained_layout(n);
    const Accept accept = [&](VertexMask w) { return resolver.multiset_resolves(w); };
    for (int k = 1; k <= static_cast<int>(n); ++k) {
        const SizeResult r = search_size(layout, n, k, accept, 1);
        if (r.witness) return Finite{k, from_mask(*r.witness)};
    }
    return std::nullopt;
}

WitnessReport verify_witness(const Graph& g, std::span<const Vertex> w) {
    const DistanceMatrix d = all_pairs_distances(g);
    VertexSet sorted(w.begin(), w.end());
    std::sort(sorted.begin(), sorted.end());
    WitnessReport r;
    r.multiset = is_m_resolving(d, sorted);
    r.metric = is_metric_resolving(d, sorted);
    r.representations.reserve(g.order());
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) r.representations.push_back(representation(d, v, sorted));
    return r;
}

}  // namespace mdim
