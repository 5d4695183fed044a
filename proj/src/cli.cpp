#include "mdim/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mdim/edge_list.hpp"
#include "mdim/families.hpp"
#include "mdim/harness.hpp"
#include "mdim/structure.hpp"

namespace mdim::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Graph load(const Input& in) {
    if (in.path.has_value() == in.family.has_value())
        throw UsageError("give exactly one of a graph file or --family <spec>");
    if (in.family) return generate(parse_family(*in.family));
    std::ifstream file(*in.path);
    if (!file) throw UsageError("cannot read '" + *in.path + "'");
    std::stringstream text;
    text << file.rdbuf();
    Graph g = parse_edge_list(text.str());
    if (g.order() == 0) throw ParseError(0, std::nullopt, "graph has no vertices");
    return g;
}

std::string braces(const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

std::string certificate_text(const InfiniteCertificate& c) {
    switch (c.kind) {
    case InfiniteCertificate::Kind::DiameterTwoNonPath: return "diameter-2 non-path certificate";
    case InfiniteCertificate::Kind::LargeTwinClass:
        return "twin class " + braces(c.twin_class) + " of size " + std::to_string(c.twin_class.size()) +
               " certificate";
    case InfiniteCertificate::Kind::ExhaustiveSearch: return "exhaustive search certificate";
    }
    return "";
}

json outcome_json(const ResolveOutcome& o) {
    json j;
    if (o.finite()) {
        j["result"] = "finite";
        j["value"] = o.as_finite().value;
        j["witness"] = o.as_finite().witness;
    } else if (o.infinite()) {
        j["result"] = "infinite";
        j["certificate"] = to_string(o.as_infinite().certificate.kind);
        j["twin_class"] = o.as_infinite().certificate.twin_class;
    } else {
        j["result"] = "aborted";
        j["reason"] = o.as_aborted().reason;
    }
    return j;
}

std::string outcome_text(const ResolveOutcome& o) {
    if (o.finite()) return "md = " + std::to_string(o.as_finite().value) + ", witness = " + braces(o.as_finite().witness);
    if (o.infinite()) return "md = infinite (" + certificate_text(o.as_infinite().certificate) + ")";
    return "aborted: " + o.as_aborted().reason;
}

int emit(const Options& opts, std::ostream& out, const json& j, const std::string& text) {
    if (opts.json)
        out << j.dump(2) << '\n';
    else
        out << text;
    return Ok;
}

json collision_json(const CollisionReport& r) {
    json j{{"resolving", r.resolving}};
    if (r.first_collision)
        j["collision"] = {{"u", r.first_collision->u}, {"v", r.first_collision->v}, {"representation", r.first_collision->shared}};
    return j;
}

int run_md(const Md& c, const Options& opts, std::ostream& out) {
    const Graph g = load(c.input);
    const ResolveOutcome o = compute_md(g, opts.search);
    json j = outcome_json(o);
    j["command"] = "md";
    j["n"] = g.order();
    emit(opts, out, j, outcome_text(o) + "\n");
    return o.aborted() ? SearchCapExceeded : Ok;
}

int run_dim(const Dim& c, const Options& opts, std::ostream& out) {
    const Graph g = load(c.input);
    const Finite dim = compute_dim(g, opts.search);
    return emit(opts, out, json{{"command", "dim"}, {"n", g.order()}, {"value", dim.value}, {"witness", dim.witness}},
                "dim = " + std::to_string(dim.value) + ", witness = " + braces(dim.witness) + "\n");
}

int run_verify(const Verify& c, const Options& opts, std::ostream& out) {
    const Graph g = load(c.input);
    const WitnessReport r = verify_witness(g, c.set);
    json j{{"command", "verify"}, {"set", c.set}, {"multiset", collision_json(r.multiset)},
           {"metric", collision_json(r.metric)}, {"representations", r.representations}};
    std::ostringstream os;
    const auto collision = [&](const CollisionReport& cr) {
        if (!cr.first_collision) return std::string();
        return " (vertices " + std::to_string(cr.first_collision->u) + " and " +
               std::to_string(cr.first_collision->v) + " share " + braces(cr.first_collision->shared) + ")";
    };
    os << "m-resolving: " << (r.multiset.resolving ? "yes" : "no") << collision(r.multiset) << '\n';
    os << "metric-resolving: " << (r.metric.resolving ? "yes" : "no") << collision(r.metric) << '\n';
    for (std::size_t v = 0; v < r.representations.size(); ++v)
        os << "  r(" << v << ") = " << braces(r.representations[v]) << '\n';
    return emit(opts, out, j, os.str());
}

int run_bounds(const Bounds& c, const Options& opts, std::ostream& out) {
    const Graph g = load(c.input);
    const DistanceMatrix d = all_pairs_distances(g);
    const TwinPartition tp = twin_partition(g);
    const MajorVertexReport mr = major_vertex_report(g, d);
    const LowerBound lb = md_lower_bound(g, d, tp, mr);
    const auto cert = detect_infinite(g, d, tp);

    json terms = json::object();
    for (const auto& t : lb.terms) terms[to_string(t.kind)] = t.value;
    json attained = json::array();
    for (auto k : lb.attained_by()) attained.push_back(to_string(k));
    json j{{"command", "bounds"}, {"n", g.order()}, {"diameter", diameter(d)}, {"path", is_path(g)},
           {"lower_bound", lb.value}, {"terms", terms}, {"attained_by", attained},
           {"sigma", mr.sigma}, {"ex", mr.ex}, {"twin_classes", tp.classes},
           {"certificate", cert ? json(to_string(cert->kind)) : json(nullptr)}};

    std::ostringstream os;
    os << "n = " << g.order() << ", diameter = " << diameter(d) << (is_path(g) ? " (path)" : "") << '\n';
    os << "md lower bound = " << lb.value << '\n';
    for (const auto& t : lb.terms) os << "  " << to_string(t.kind) << ": " << t.value << '\n';
    os << "sigma = " << mr.sigma << ", ex = " << mr.ex << '\n';
    os << "twin classes:";
    for (const auto& cls : tp.classes)
        if (cls.size() > 1) os << ' ' << braces(cls);
    os << '\n';
    os << "infinite md certificate: " << (cert ? certificate_text(*cert) : std::string("none")) << '\n';
    return emit(opts, out, j, os.str());
}

int run_family(const Family& c, const Options& opts, std::ostream& out) {
    const FamilySpec spec = parse_family(c.spec);
    const Graph g = generate(spec);
    if (c.action == "emit")
        return emit(opts, out, json{{"command", "family"}, {"spec", to_string(spec)}, {"n", g.order()}, {"edges", edges_json(g.edges())}},
                    format_edge_list(g));
    if (c.action == "witness") {
        const VertexSet w = require_witness(spec);
        const WitnessReport r = verify_witness(g, w);
        return emit(opts, out,
                    json{{"command", "family"}, {"spec", to_string(spec)}, {"witness", w}, {"m_resolving", r.multiset.resolving}},
                    "witness = " + braces(w) + ", m-resolving: " + (r.multiset.resolving ? "yes" : "no") + "\n");
    }
    if (c.action == "md") {
        const ResolveOutcome o = compute_md(g, opts.search);
        const ExpectedMd e = expected_md(spec);
        json j = outcome_json(o);
        j["command"] = "family";
        j["spec"] = to_string(spec);
        std::string expected;
        switch (e.kind) {
        case ExpectedMd::Kind::Finite: expected = std::to_string(e.value); j["expected"] = e.value; break;
        case ExpectedMd::Kind::Infinite: expected = "infinite"; j["expected"] = "infinite"; break;
        case ExpectedMd::Kind::Unspecified: expected = "unspecified"; j["expected"] = "unspecified"; break;
        }
        j["note"] = e.note;
        emit(opts, out, j, outcome_text(o) + "\nexpected: " + expected + " (" + e.note + ")\n");
        return o.aborted() ? SearchCapExceeded : Ok;
    }
    throw UsageError("family action must be emit, md or witness");
}

int run_tables(const Tables& c, const Options& opts, std::ostream& out) {
    std::vector<RepresentationTable> tables;
    if (c.selector == "all") {
        for (int n = 6; n <= 13; ++n) tables.push_back(cycle_table(n));
        for (int m = 3; m <= 5; ++m)
            for (int n = 2; n <= 5; ++n) tables.push_back(grid_table(m, n));
    } else {
        const FamilySpec spec = parse_family(c.selector);
        if (const auto* cy = std::get_if<family::Cycle>(&spec))
            tables.push_back(cycle_table(cy->n));
        else if (const auto* gr = std::get_if<family::Grid>(&spec))
            tables.push_back(grid_table(gr->m, gr->n));
        else
            throw UsageError("tables selector must be all, cycle:<n> or grid:<m>x<n>");
    }
    json j = json::array();
    std::string text;
    for (const auto& t : tables) {
        j.push_back(to_json(t));
        text += render_text(t);
    }
    return emit(opts, out, j, text);
}

int run_scan(const Scan& c, const Options& opts, std::ostream& out) {
    ScanOptions so;
    so.n = c.n;
    so.dedup = c.dedup;
    so.search = opts.search;
    ScanReport r;
    try {
        r = scan_small_graphs(so);
    } catch (const ScanRangeError& e) {
        throw UsageError(e.what());
    }
    emit(opts, out, to_json(r), render_text(r));
    return r.violations.empty() ? Ok : ClaimViolated;
}

int run_suite(const Suite& c, const Options& opts, std::ostream& out) {
    SuiteOptions so;
    so.scan_max_n = c.scan_n;
    const std::size_t suite_cap = so.search.max_vertices;
    so.search = opts.search;
    so.search.max_vertices = std::max(so.search.max_vertices, suite_cap);
    const SuiteReport r = run_paper_suite(so);
    emit(opts, out, to_json(r), render_text(r));
    return r.count(CheckStatus::Violation) == 0 ? Ok : ClaimViolated;
}

}  // namespace

int run(const Command& cmd, const Options& opts, std::ostream& out, std::ostream& err) {
    try {
        return std::visit(
            [&](const auto& c) -> int {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, Md>) return run_md(c, opts, out);
                else if constexpr (std::is_same_v<T, Dim>) return run_dim(c, opts, out);
                else if constexpr (std::is_same_v<T, Verify>) return run_verify(c, opts, out);
                else if constexpr (std::is_same_v<T, Bounds>) return run_bounds(c, opts, out);
                else if constexpr (std::is_same_v<T, Family>) return run_family(c, opts, out);
                else if constexpr (std::is_same_v<T, Tables>) return run_tables(c, opts, out);
                else if constexpr (std::is_same_v<T, Scan>) return run_scan(c, opts, out);
                else return run_suite(c, opts, out);
            },
            cmd);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return Usage;
    } catch (const InvalidParameter& e) {
        err << "error: " << e.what() << '\n';
        return Usage;
    } catch (const NoKnownWitness& e) {
        err << "error: " << e.what() << '\n';
        return Usage;
    } catch (const ParseError& e) {
        err << "invalid graph: " << e.what() << '\n';
        return InvalidGraph;
    } catch (const GraphError& e) {
        err << "invalid graph: " << e.what() << '\n';
        return InvalidGraph;
    } catch (const std::out_of_range& e) {
        err << "invalid vertex set: " << e.what() << '\n';
        return Usage;
    } catch (const SearchAborted& e) {
        err << "aborted: " << e.what() << '\n';
        return SearchCapExceeded;
    }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact multiset and metric dimension of small graphs", "mdim"};
    app.require_subcommand(1);
    Options opts;
    unsigned parallel = 0;
    app.add_flag("--json", opts.json, "structured output");
    app.add_option("--parallel", parallel, "worker threads for the search")->check(CLI::PositiveNumber);
    app.add_option("--max-vertices", opts.search.max_vertices, "exhaustive search cap")->check(CLI::Range(1, 64));

    Command cmd;
    Input input;
    std::string set_text;
    const auto graph_input = [&](CLI::App* sub) {
        sub->fallthrough();
        sub->add_option("file", input.path, "edge-list file");
        sub->add_option("--family", input.family, "family spec, e.g. cycle:9");
    };
    auto* md = app.add_subcommand("md", "multiset dimension");
    graph_input(md);
    auto* dim = app.add_subcommand("dim", "metric dimension");
    graph_input(dim);
    auto* verify = app.add_subcommand("verify", "check a vertex set and list representations");
    graph_input(verify);
    verify->add_option("--set", set_text, "comma-separated vertex ids")->required();
    auto* bounds = app.add_subcommand("bounds", "lower bounds and infiniteness detectors");
    graph_input(bounds);

    Family fam;
    auto* family = app.add_subcommand("family", "generate a named family");
    family->fallthrough();
    family->add_option("spec", fam.spec, "family spec")->required();
    family->add_option("action", fam.action, "emit | md | witness")->check(CLI::IsMember({"emit", "md", "witness"}));

    Tables tab;
    auto* tables = app.add_subcommand("tables", "closed-form representation tables against BFS");
    tables->fallthrough();
    tables->add_option("selector", tab.selector, "all | cycle:<n> | grid:<m>x<n>");

    Scan sc;
    auto* scan = app.add_subcommand("scan", "check every connected graph of order n");
    scan->fallthrough();
    scan->add_option("n", sc.n, "order (1..7)")->required();
    scan->add_flag("--dedup", sc.dedup, "one graph per isomorphism class");

    Suite su;
    auto* suite = app.add_subcommand("suite", "run every family, table, scan and probe check");
    suite->fallthrough();
    suite->add_option("--scan-n", su.scan_n, "largest scanned order")->check(CLI::Range(1, 7));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }
    if (parallel > 0) {
        opts.search.parallel = true;
        opts.search.workers = parallel;
    }

    if (verify->parsed()) {
        std::stringstream ss(set_text);
        std::string item;
        VertexSet set;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                set.push_back(std::stoi(item, &used));
                if (used != item.size()) throw std::invalid_argument(item);
            } catch (const std::exception&) {
                err << "error: bad vertex id '" << item << "' in --set\n";
                return Usage;
            }
        }
        std::sort(set.begin(), set.end());
        if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
            err << "error: repeated vertex in --set\n";
            return Usage;
        }
        cmd = Verify{input, set};
    }
    if (md->parsed()) cmd = Md{input};
    if (dim->parsed()) cmd = Dim{input};
    if (bounds->parsed()) cmd = Bounds{input};
    if (family->parsed()) cmd = fam;
    if (tables->parsed()) cmd = tab;
    if (scan->parsed()) cmd = sc;
    if (suite->parsed()) cmd = su;
    return run(cmd, opts, out, err);
}

}  // namespace mdim::cli
