#include "mdim/families.hpp"

#include <charconv>
#include <vector>

namespace mdim {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int parse_int(std::string_view s, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw InvalidParameter("bad integer '" + std::string(s) + "' in family spec '" + std::string(whole) + "'");
    return value;
}

std::pair<int, int> parse_pair(std::string_view s, std::string_view whole) {
    const auto x = s.find('x');
    if (x == std::string_view::npos)
        throw InvalidParameter("expected <a>x<b> in family spec '" + std::string(whole) + "'");
    return {parse_int(s.substr(0, x), whole), parse_int(s.substr(x + 1), whole)};
}

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidParameter(what);
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(static_cast<std::size_t>(n), e);
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    const auto need_arg = [&] {
        if (colon == std::string_view::npos)
            throw InvalidParameter("family '" + std::string(name) + "' needs parameters");
    };
    FamilySpec spec;
    if (name == "path") {
        need_arg();
        spec = family::Path{parse_int(arg, text)};
    } else if (name == "cycle") {
        need_arg();
        spec = family::Cycle{parse_int(arg, text)};
    } else if (name == "complete") {
        need_arg();
        spec = family::Complete{parse_int(arg, text)};
    } else if (name == "star") {
        need_arg();
        spec = family::Star{parse_int(arg, text)};
    } else if (name == "substar") {
        need_arg();
        auto [n, p] = parse_pair(arg, text);
        spec = family::SubdividedStar{n, p};
    } else if (name == "grid") {
        need_arg();
        auto [m, n] = parse_pair(arg, text);
        spec = family::Grid{m, n};
    } else if (name == "karytree") {
        need_arg();
        auto [k, h] = parse_pair(arg, text);
        spec = family::KAryTree{k, h};
    } else if (name == "petersen" && colon == std::string_view::npos) {
        spec = family::Petersen{};
    } else if (name == "cextree" && colon == std::string_view::npos) {
        spec = family::CounterexampleTree{};
    } else {
        throw InvalidParameter("unknown family spec '" + std::string(text) + "'");
    }
    validate(spec);
    return spec;
}

std::string to_string(const FamilySpec& spec) {
    return std::visit(
        overloaded{
            [](family::Path f) { return "path:" + std::to_string(f.n); },
            [](family::Cycle f) { return "cycle:" + std::to_string(f.n); },
            [](family::Complete f) { return "complete:" + std::to_string(f.n); },
            [](family::Star f) { return "star:" + std::to_string(f.n); },
            [](family::SubdividedStar f) { return "substar:" + std::to_string(f.n) + "x" + std::to_string(f.p); },
            [](family::Grid f) { return "grid:" + std::to_string(f.m) + "x" + std::to_string(f.n); },
            [](family::KAryTree f) { return "karytree:" + std::to_string(f.k) + "x" + std::to_string(f.h); },
            [](family::Petersen) { return std::string("petersen"); },
            [](family::CounterexampleTree) { return std::string("cextree"); },
        },
        spec);
}

void validate(const FamilySpec& spec) {
    std::visit(overloaded{
                   [](family::Path f) { require(f.n >= 1, "path needs n >= 1"); },
                   [](family::Cycle f) { require(f.n >= 3, "cycle needs n >= 3"); },
                   [](family::Complete f) { require(f.n >= 1, "complete graph needs n >= 1"); },
                   [](family::Star f) { require(f.n >= 1, "star needs n >= 1"); },
                   [](family::SubdividedStar f) {
                       require(f.n >= 1, "subdivided star needs n >= 1");
                       require(f.p >= 1, "subdivided star needs p >= 1");
                   },
                   [](family::Grid f) { require(f.m >= 1 && f.n >= 1, "grid needs m, n >= 1"); },
                   [](family::KAryTree f) {
                       require(f.k >= 1, "k-ary tree needs k >= 1");
                       require(f.h >= 1, "k-ary tree needs h >= 1");
                   },
                   [](family::Petersen) {},
                   [](family::CounterexampleTree) {},
               },
               spec);
}

Graph generate(const FamilySpec& spec) {
    validate(spec);
    return std::visit(
        overloaded{
            [](family::Path f) { return path_graph(f.n); },
            [](family::Cycle f) {
                std::vector<Edge> e;
                for (int i = 0; i < f.n; ++i) e.emplace_back(i, (i + 1) % f.n);
                return build_graph(static_cast<std::size_t>(f.n), e);
            },
            [](family::Complete f) {
                std::vector<Edge> e;
                for (int i = 0; i < f.n; ++i)
                    for (int j = i + 1; j < f.n; ++j) e.emplace_back(i, j);
                return build_graph(static_cast<std::size_t>(f.n), e);
            },
            [](family::Star f) {
                std::vector<Edge> e;
                for (int i = 1; i <= f.n; ++i) e.emplace_back(0, i);
                return build_graph(static_cast<std::size_t>(f.n) + 1, e);
            },
            [](family::SubdividedStar f) {
                std::vector<Edge> e;
                for (int b = 1; b <= f.n; ++b) {
                    const int first = 1 + (b - 1) * f.p;
                    e.emplace_back(0, first);
                    for (int t = 1; t < f.p; ++t) e.emplace_back(first + t - 1, first + t);
                }
                return build_graph(1 + static_cast<std::size_t>(f.n) * static_cast<std::size_t>(f.p), e);
            },
            [](family::Grid f) {
                const auto id = [&](int i, int j) { return (i - 1) * f.n + (j - 1); };
                std::vector<Edge> e;
                for (int i = 1; i <= f.m; ++i)
                    for (int j = 1; j < f.n; ++j) e.emplace_back(id(i, j), id(i, j + 1));
                for (int i = 1; i < f.m; ++i)
                    for (int j = 1; j <= f.n; ++j) e.emplace_back(id(i, j), id(i + 1, j));
                return build_graph(static_cast<std::size_t>(f.m) * static_cast<std::size_t>(f.n), e);
            },
            [](family::KAryTree f) {
                // Breadth-first ids: the children of v are k v + 1 .. k v + k.
                long long count = 1, level = 1;
                for (int i = 0; i < f.h; ++i) {
                    level *= f.k;
                    count += level;
                    require(count <= 4096, "k-ary tree too large");
                }
                std::vector<Edge> e;
                for (int c = 1; c < count; ++c) e.emplace_back((c - 1) / f.k, c);
                return build_graph(static_cast<std::size_t>(count), e);
            },
            [](family::Petersen) {
                std::vector<Edge> e;
                for (int i = 0; i < 5; ++i) {
                    e.emplace_back(i, (i + 1) % 5);
                    e.emplace_back(5 + i, 5 + (i + 2) % 5);
                    e.emplace_back(i, i + 5);
                }
                return build_graph(10, e);
            },
            [](family::CounterexampleTree) {
                return build_graph(10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9}});
            },
        },
        spec);
}

ExpectedMd expected_md(const FamilySpec& spec) {
    using K = ExpectedMd::Kind;
    validate(spec);
    const auto finite = [](int v, std::string note) { return ExpectedMd{K::Finite, v, std::move(note)}; };
    const auto infinite = [](std::string note) { return ExpectedMd{K::Infinite, 0, std::move(note)}; };
    const auto open = [](std::string note) { return ExpectedMd{K::Unspecified, 0, std::move(note)}; };
    return std::visit(
        overloaded{
            [&](family::Path) { return finite(1, "paths have md 1"); },
            [&](family::Cycle f) {
                return f.n >= 6 ? finite(3, "cycles of order >= 6 have md 3")
                                : infinite("cycles of order <= 5 have diameter <= 2");
            },
            [&](family::Complete f) {
                return f.n <= 2 ? finite(1, "K1 and K2 are paths") : infinite("complete graphs have diameter 1");
            },
            [&](family::Star f) {
                return f.n <= 2 ? finite(1, "K_{1,1} and K_{1,2} are paths") : infinite("stars have diameter 2");
            },
            [&](family::SubdividedStar f) {
                if (f.n <= 2) return finite(1, "a spider with at most two legs is a path");
                if (f.p == 1) return infinite("unsubdivided star has diameter 2");
                if (f.n == 3)
                    return open("the n - 1 closed form gives md = 2 at n = 3, but no graph has md 2; "
                                "resolved empirically by the suite");
                if (f.p >= f.n - 1) return finite(f.n - 1, "md = dim = n - 1 when p >= n - 1");
                return open("p < n - 1: only md != n - 1 is known");
            },
            [&](family::Grid f) {
                if (f.m == 1 || f.n == 1) return finite(1, "a grid with a single row or column is a path");
                if (f.m == 2 && f.n == 2) return infinite("P2 x P2 is C4, of diameter 2");
                if (f.m >= 3) return finite(3, "grids with m >= 3, n >= 2 have md 3");
                return open("P2 x Pn with n >= 3 has no closed form; left to the solver");
            },
            [&](family::KAryTree f) {
                if (f.k == 1) return finite(1, "a 1-ary tree is a path");
                if (f.k >= 3) return infinite("k >= 3 puts k pendant twins under one vertex");
                if (f.h == 1) return finite(1, "the binary tree of height 1 is P3");
                return finite((1 << f.h) - 1, "complete binary trees have md 2^h - 1");
            },
            [&](family::Petersen) { return infinite("Petersen graph has diameter 2"); },
            [&](family::CounterexampleTree) {
                return infinite("no twin class of size >= 3 and diameter 4, yet no m-resolving set");
            },
        },
        spec);
}

std::optional<VertexSet> witness_for(const FamilySpec& spec) {
    validate(spec);
    return std::visit(
        overloaded{
            [](family::Cycle f) -> std::optional<VertexSet> {
                if (f.n >= 6) return VertexSet{0, 1, 3};
                return std::nullopt;
            },
            [](family::Grid f) -> std::optional<VertexSet> {
                // v_{1,1}, v_{1,2}, v_{3,1}
                if (f.m >= 3 && f.n >= 2) return VertexSet{0, 1, 2 * f.n};
                return std::nullopt;
            },
            [](family::KAryTree f) -> std::optional<VertexSet> {
                if (f.k != 2) return std::nullopt;
                // Sibling pairs are (2j+1, 2j+2); take the lower id of each.
                VertexSet w;
                const int last = (1 << (f.h + 1)) - 2;
                for (int v = 1; v <= last; v += 2) w.push_back(v);
                return w;
            },
            [](family::SubdividedStar f) -> std::optional<VertexSet> {
                if (f.n < 4 || f.p < f.n - 1) return std::nullopt;
                // Vertex at distance b on branch b, for b = 1..n-1.
                VertexSet w;
                for (int b = 1; b <= f.n - 1; ++b) w.push_back((b - 1) * f.p + b);
                return w;
            },
            [](auto) -> std::optional<VertexSet> { return std::nullopt; },
        },
        spec);
}

VertexSet require_witness(const FamilySpec& spec) {
    if (auto w = witness_for(spec)) return *w;
    throw NoKnownWitness("no explicit witness construction for " + to_string(spec));
}

}  // namespace mdim
