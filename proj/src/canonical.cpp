#include "mdim/canonical.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <vector>

namespace mdim {

namespace {

using Rows = std::array<std::uint16_t, max_code_order>;

int bit_position(int n, int i, int j) { return pair_count(n) - 1 - (j * (j - 1) / 2 + i); }

Rows rows_of(int n, EdgeCode code) {
    if (n < 0 || n > max_code_order) throw std::invalid_argument("edge codes support at most 11 vertices");
    Rows rows{};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((code >> bit_position(n, i, j)) & 1U) {
                rows[static_cast<std::size_t>(i)] |= static_cast<std::uint16_t>(1U << j);
                rows[static_cast<std::size_t>(j)] |= static_cast<std::uint16_t>(1U << i);
            }
    return rows;
}

// Branch and bound over relabelings. Label j is assigned after labels
// 0..j-1, which fixes the next j bits of the relabeled string. With
// `early_exit` set, returns as soon as some prefix beats `best`.
class Canonicalizer {
public:
    Canonicalizer(int n, EdgeCode code, bool early_exit)
        : n_(n), total_(pair_count(n)), rows_(rows_of(n, code)), best_(code), early_exit_(early_exit) {}

    EdgeCode run() {
        search(0, 0, 0);
        return best_;
    }
    bool beaten() const { return beaten_; }

private:
    void search(int depth, EdgeCode prefix, std::uint16_t used) {
        if (beaten_ && early_exit_) return;
        if (depth == n_) {
            if (prefix < best_) {
                best_ = prefix;
                beaten_ = true;
            }
            return;
        }
        const int len = (depth + 1) * depth / 2;
        const EdgeCode best_prefix = best_ >> (total_ - len);
        for (int x = 0; x < n_; ++x) {
            if ((used >> x) & 1U) continue;
            EdgeCode next = prefix;
            for (int i = 0; i < depth; ++i) next = (next << 1) | ((rows_[static_cast<std::size_t>(x)] >> perm_[static_cast<std::size_t>(i)]) & 1U);
            if (next > best_prefix) continue;
            if (next < best_prefix && early_exit_) {
                beaten_ = true;
                return;
            }
            perm_[static_cast<std::size_t>(depth)] = x;
            search(depth + 1, next, static_cast<std::uint16_t>(used | (1U << x)));
            if (beaten_ && early_exit_) return;
        }
    }

    int n_;
    int total_;
    Rows rows_;
    std::array<int, max_code_order> perm_{};
    EdgeCode best_;
    bool early_exit_;
    bool beaten_ = false;
};

}  // namespace

EdgeCode code_of(const Graph& g) {
    const int n = static_cast<int>(g.order());
    if (n > max_code_order) throw std::invalid_argument("edge codes support at most 11 vertices");
    EdgeCode code = 0;
    for (auto [u, v] : g.edges()) code |= EdgeCode{1} << bit_position(n, u, v);
    return code;
}

Graph graph_from_code(int n, EdgeCode code) {
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((code >> bit_position(n, i, j)) & 1U) edges.emplace_back(i, j);
    return build_graph(static_cast<std::size_t>(n), edges);
}

bool code_connected(int n, EdgeCode code) {
    if (n <= 1) return true;
    const Rows rows = rows_of(n, code);
    std::uint16_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint16_t next = 0;
        for (std::uint16_t f = frontier; f; f &= static_cast<std::uint16_t>(f - 1))
            next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
        frontier = static_cast<std::uint16_t>(next & ~seen);
        seen |= next;
    }
    return std::popcount(seen) == n;
}

EdgeCode canonical_code(int n, EdgeCode code) { return Canonicalizer(n, code, false).run(); }

bool is_canonical(int n, EdgeCode code) {
    Canonicalizer c(n, code, true);
    c.run();
    return !c.beaten();
}

}  // namespace mdim
