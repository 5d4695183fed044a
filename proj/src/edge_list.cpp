#include "mdim/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <vector>

namespace mdim {

namespace {

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::optional<long long> to_int(std::string_view s) {
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::optional<long long> declared;
    bool seen_data = false;
    std::vector<Edge> edges;
    std::map<Edge, std::size_t> first_line;
    long long max_id = -1;

    std::size_t lineno = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++lineno;
        if (line.empty() || line.front() == '#') continue;

        if (line.starts_with("n=")) {
            if (seen_data) throw ParseError(lineno, std::nullopt, "'n=' must be the first data line");
            declared = to_int(trim(line.substr(2)));
            if (!declared || *declared < 0 || *declared > 1'000'000)
                throw ParseError(lineno, std::nullopt, "bad vertex count '" + std::string(line) + "'");
            seen_data = true;
            continue;
        }
        seen_data = true;

        const auto gap = line.find_first_of(" \t");
        const auto a = gap == std::string_view::npos ? std::optional<long long>{} : to_int(line.substr(0, gap));
        const auto b = gap == std::string_view::npos ? std::optional<long long>{} : to_int(trim(line.substr(gap)));
        if (!a || !b) throw ParseError(lineno, std::nullopt, "expected 'u v', got '" + std::string(line) + "'");

        const auto out_of_range = [&](long long x) { return x < 0 || (declared && x >= *declared) || x > 1'000'000; };
        if (out_of_range(*a) || out_of_range(*b))
            throw ParseError(lineno, GraphError::Kind::VertexOutOfRange,
                             "vertex out of range in edge '" + std::string(line) + "'");
        Edge e{static_cast<Vertex>(*a), static_cast<Vertex>(*b)};
        if (e.first == e.second)
            throw ParseError(lineno, GraphError::Kind::LoopEdge, "loop edge '" + std::string(line) + "'");
        Edge key = e.first < e.second ? e : Edge{e.second, e.first};
        if (auto [it, fresh] = first_line.emplace(key, lineno); !fresh)
            throw ParseError(lineno, GraphError::Kind::DuplicateEdge,
                             "duplicate of the edge on line " + std::to_string(it->second));
        max_id = std::max({max_id, *a, *b});
        edges.push_back(e);
    }
    const auto n = static_cast<std::size_t>(declared ? *declared : max_id + 1);
    return build_graph(n, edges);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.order() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

}  // namespace mdim
