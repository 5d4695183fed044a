#include <algorithm>
#include <atomic>
#include <thread>

#include "mdim/harness.hpp"
#include "mdim/structure.hpp"

namespace mdim {

namespace {

struct Partial {
    std::uint64_t analysed = 0;
    std::uint64_t diameter_two = 0;
    std::uint64_t detector_misses = 0;
    std::optional<EdgeCode> first_miss;
    std::uint64_t finite = 0;
    std::vector<EdgeCode> above_n_minus_1;
    std::map<std::string, std::uint64_t> histogram;
    std::map<int, EdgeCode> spectrum;
    std::map<EdgeCode, std::string> outcomes;
    std::vector<ScanViolation> violations;

    void merge(Partial&& o) {
        analysed += o.analysed;
        diameter_two += o.diameter_two;
        detector_misses += o.detector_misses;
        if (o.first_miss && (!first_miss || *o.first_miss < *first_miss)) first_miss = o.first_miss;
        finite += o.finite;
        above_n_minus_1.insert(above_n_minus_1.end(), o.above_n_minus_1.begin(), o.above_n_minus_1.end());
        for (auto& [k, c] : o.histogram) histogram[k] += c;
        for (auto& [v, code] : o.spectrum) {
            auto [it, inserted] = spectrum.emplace(v, code);
            if (!inserted) it->second = std::min(it->second, code);
        }
        outcomes.merge(o.outcomes);
        for (auto& v : o.violations) violations.push_back(std::move(v));
    }
};

void analyse(int n, EdgeCode code, const ScanOptions& options, Partial& out) {
    const Graph g = graph_from_code(n, code);
    const DistanceMatrix d = all_pairs_distances(g);
    const TwinPartition tp = twin_partition(g);
    const MajorVertexReport mr = major_vertex_report(g, d);
    const int diam = diameter(d);

    SearchConfig serial = options.search;
    serial.parallel = false;
    serial.progress_reporting = false;
    const ResolveOutcome md = compute_md(g, serial);
    const Finite dim = compute_dim(g, serial);
    const std::optional<Finite> brute = brute_force_md(d);
    const auto certificate = detect_infinite(g, d, tp);

    const auto violate = [&](std::string claim, std::string details) {
        out.violations.push_back({std::move(claim), code, g.edges(), std::move(details)});
    };

    ++out.analysed;
    if (diam <= 2) ++out.diameter_two;
    const std::string key = md_key(md);
    ++out.histogram[key];
    if (options.record_outcomes) out.outcomes.emplace(canonical_code(n, code), key);

    if (md.aborted()) {
        violate("search_aborted", md.as_aborted().reason);
        return;
    }

    // The pruned search and plain enumeration must agree.
    if (md.finite() != brute.has_value() || (brute && md.as_finite().value != brute->value))
        violate("search_matches_brute_force",
                "compute_md " + key + " vs brute force " + (brute ? std::to_string(brute->value) : "inf"));
    if (certificate && brute)
        violate("detector_sound", std::string(to_string(certificate->kind)) + " certified a graph with md " +
                                      std::to_string(brute->value));
    if (md.infinite() && !certificate) {
        ++out.detector_misses;
        if (!out.first_miss || code < *out.first_miss) out.first_miss = code;
    }
    if (dim.value < mr.sigma - mr.ex)
        violate("dim_ge_sigma_minus_ex", "dim " + std::to_string(dim.value) + " < sigma - ex " +
                                             std::to_string(mr.sigma - mr.ex));
    if (is_path(g) != (md.finite() && md.as_finite().value == 1))
        violate("md_one_iff_path", "md " + key + ", path: " + (is_path(g) ? "yes" : "no"));

    if (!md.finite()) return;
    const Finite& fin = md.as_finite();
    ++out.finite;
    auto [slot, fresh] = out.spectrum.emplace(fin.value, code);
    if (!fresh) slot->second = std::min(slot->second, code);
    if (fin.value > n - 1 && n > 1) out.above_n_minus_1.push_back(code);

    if (fin.value == 2) violate("no_md_two", "found an m-resolving set of size 2");
    if (fin.value < dim.value)
        violate("md_ge_dim", "md " + std::to_string(fin.value) + " < dim " + std::to_string(dim.value));
    if (diam >= 1 && fin.value < f_lower_bound(n, diam))
        violate("md_ge_f", "md " + std::to_string(fin.value) + " < f(n, d) " +
                               std::to_string(f_lower_bound(n, diam)));
    if (!is_m_resolving(d, fin.witness).resolving) violate("witness_resolves", "returned witness collides");

    for (const auto& cls : tp.classes) {
        if (cls.size() != 2) continue;
        for (const Finite* w : {&fin, brute ? &*brute : nullptr}) {
            if (!w) continue;
            const auto hits = std::count_if(cls.begin(), cls.end(), [&](Vertex v) {
                return std::binary_search(w->witness.begin(), w->witness.end(), v);
            });
            if (hits != 1)
                violate("twin_pair_exactly_one", "witness meets twin class {" + std::to_string(cls[0]) + "," +
                                                     std::to_string(cls[1]) + "} in " + std::to_string(hits) +
                                                     " vertices");
        }
    }
}

std::vector<Edge> edges_of(int n, EdgeCode code) { return graph_from_code(n, code).edges(); }

}  // namespace

ScanReport scan_small_graphs(const ScanOptions& options) {
    const int n = options.n;
    if (n < 1 || n > 7) throw ScanRangeError("scan supports orders 1..7, got " + std::to_string(n));
    const EdgeCode total = EdgeCode{1} << pair_count(n);

    unsigned workers = 1;
    if (options.search.parallel)
        workers = std::max(1U, options.search.workers ? options.search.workers : std::thread::hardware_concurrency());

    constexpr EdgeCode chunk = 4096;
    std::atomic<EdgeCode> next{0};
    std::vector<Partial> partials(workers);
    const auto work = [&](Partial& local) {
        for (;;) {
            const EdgeCode begin = next.fetch_add(chunk);
            if (begin >= total) return;
            const EdgeCode end = std::min(total, begin + chunk);
            for (EdgeCode code = begin; code < end; ++code) {
                if (!code_connected(n, code)) continue;
                if (options.dedup && !is_canonical(n, code)) continue;
                analyse(n, code, options, local);
            }
        }
    };
    if (workers == 1) {
        work(partials[0]);
    } else {
        std::vector<std::jthread> pool;
        for (auto& p : partials) pool.emplace_back(work, std::ref(p));
    }

    Partial all;
    for (auto& p : partials) all.merge(std::move(p));
    std::sort(all.violations.begin(), all.violations.end(), [](const ScanViolation& a, const ScanViolation& b) {
        return std::tie(a.code, a.claim, a.details) < std::tie(b.code, b.claim, b.details);
    });
    std::sort(all.above_n_minus_1.begin(), all.above_n_minus_1.end());

    ScanReport r;
    r.n = n;
    r.dedup = options.dedup;
    r.graphs_total = total;
    r.graphs_connected = all.analysed;
    r.md_histogram = std::move(all.histogram);
    r.violations = std::move(all.violations);
    r.diameter2_fraction = all.analysed ? static_cast<double>(all.diameter_two) / static_cast<double>(all.analysed) : 0.0;
    r.detector_misses = all.detector_misses;
    r.spectrum = std::move(all.spectrum);
    r.outcomes = std::move(all.outcomes);

    {
        ScanFinding f{"conjecture_md_le_n_minus_1", "", nlohmann::json::object()};
        f.data["finite_graphs"] = all.finite;
        f.data["counterexamples"] = nlohmann::json::array();
        for (EdgeCode c : all.above_n_minus_1) f.data["counterexamples"].push_back(edges_json(edges_of(n, c)));
        f.summary = all.above_n_minus_1.empty()
                        ? "holds at this scale: every finite md is at most n - 1"
                        : std::to_string(all.above_n_minus_1.size()) + " graphs with finite md > n - 1";
        r.conjecture_findings.push_back(std::move(f));
    }
    {
        ScanFinding f{"md_spectrum", "", nlohmann::json::object()};
        std::string values;
        for (const auto& [v, code] : r.spectrum) {
            f.data[std::to_string(v)] = edges_json(edges_of(n, code));
            values += (values.empty() ? "" : ", ") + std::to_string(v);
        }
        f.summary = "finite md values achieved: {" + values + "}";
        r.conjecture_findings.push_back(std::move(f));
    }
    {
        ScanFinding f{"diameter2_fraction", "", nlohmann::json::object()};
        f.data["fraction"] = r.diameter2_fraction;
        f.summary = "fraction of analysed graphs with diameter <= 2: " + std::to_string(r.diameter2_fraction);
        r.conjecture_findings.push_back(std::move(f));
    }
    {
        ScanFinding f{"detector_incompleteness", "", nlohmann::json::object()};
        f.data["count"] = r.detector_misses;
        if (all.first_miss) f.data["example"] = edges_json(edges_of(n, *all.first_miss));
        f.summary = std::to_string(r.detector_misses) + " graphs have infinite md that neither detector certifies";
        r.conjecture_findings.push_back(std::move(f));
    }
    return r;
}

}  // namespace mdim
