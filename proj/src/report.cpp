#include <sstream>

#include "mdim/harness.hpp"

namespace mdim {

using nlohmann::json;

std::string md_key(const ResolveOutcome& o) {
    if (o.finite()) return std::to_string(o.as_finite().value);
    if (o.infinite()) return "inf";
    return "aborted";
}

json edges_json(const std::vector<Edge>& edges) {
    json a = json::array();
    for (auto [u, v] : edges) a.push_back({u, v});
    return a;
}

json to_json(const Check& c) {
    json j;
    j["check_id"] = c.check_id;
    j["status"] = to_string(c.status);
    j["graph"] = c.graph ? edges_json(*c.graph) : json(nullptr);
    j["details"] = c.details;
    return j;
}

json to_json(const SuiteReport& r) {
    json a = json::array();
    for (const auto& c : r.checks) a.push_back(to_json(c));
    return a;
}

json to_json(const ScanReport& r) {
    json j;
    j["n"] = r.n;
    j["dedup"] = r.dedup;
    j["graphs_total"] = r.graphs_total;
    j["graphs_connected"] = r.graphs_connected;
    j["md_histogram"] = r.md_histogram;
    j["diameter2_fraction"] = r.diameter2_fraction;
    j["detector_misses"] = r.detector_misses;
    json v = json::array();
    for (const auto& x : r.violations) v.push_back({{"claim", x.claim}, {"graph", edges_json(x.edges)}, {"details", x.details}});
    j["violations"] = v;
    json f = json::array();
    for (const auto& x : r.conjecture_findings) f.push_back({{"id", x.id}, {"summary", x.summary}, {"data", x.data}});
    j["conjecture_findings"] = f;
    return j;
}

json to_json(const RepresentationTable& t) {
    json j;
    j["table"] = t.name;
    j["witness"] = t.witness;
    j["entries"] = t.rows.size();
    json rows = json::array(), bad = json::array();
    for (const auto& r : t.rows) {
        json row{{"vertex", r.vertex}, {"entry", r.label}, {"computed", r.computed}, {"closed_form", r.closed_form},
                 {"match", r.match()}};
        if (!r.match()) bad.push_back(row);
        rows.push_back(std::move(row));
    }
    j["rows"] = rows;
    j["mismatches"] = bad;
    j["uncovered"] = t.uncovered;
    return j;
}

namespace {

std::string braces(const std::vector<int>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + "}";
}

}  // namespace

std::string render_text(const RepresentationTable& t) {
    std::ostringstream os;
    os << t.name << " with W = " << braces(t.witness) << '\n';
    for (const auto& r : t.rows)
        os << "  " << r.vertex << "  " << r.label << "  bfs " << braces(r.computed) << "  closed form "
           << braces(r.closed_form) << (r.match() ? "" : "  MISMATCH") << '\n';
    if (!t.uncovered.empty()) os << "  uncovered vertices: " << braces(t.uncovered) << '\n';
    os << (t.agrees() ? "  all entries agree\n" : "  DISAGREEMENT\n");
    return os.str();
}

std::string render_text(const ScanReport& r) {
    std::ostringstream os;
    os << "scan n = " << r.n << (r.dedup ? " (one graph per isomorphism class)" : " (labeled)") << '\n';
    os << "  graphs enumerated: " << r.graphs_total << ", connected analysed: " << r.graphs_connected << '\n';
    os << "  md histogram:";
    for (const auto& [k, c] : r.md_histogram) os << ' ' << k << ':' << c;
    os << '\n';
    for (const auto& f : r.conjecture_findings) os << "  " << f.id << ": " << f.summary << '\n';
    if (r.violations.empty()) {
        os << "  no violations\n";
    } else {
        for (const auto& v : r.violations) os << "  VIOLATION " << v.claim << ": " << v.details << " on " << edges_json(v.edges).dump() << '\n';
    }
    return os.str();
}

std::string render_text(const SuiteReport& r) {
    std::ostringstream os;
    for (const auto& c : r.checks) {
        os << '[' << to_string(c.status) << "] " << c.check_id;
        if (c.details.contains("summary")) os << " - " << c.details["summary"].get<std::string>();
        if (c.status != CheckStatus::Pass && c.details.contains("computed"))
            os << " computed " << c.details["computed"].dump();
        os << '\n';
    }
    os << r.count(CheckStatus::Pass) << " pass, " << r.count(CheckStatus::Finding) << " findings, "
       << r.count(CheckStatus::Violation) << " violations, " << r.count(CheckStatus::Aborted) << " aborted\n";
    return os.str();
}

}  // namespace mdim
