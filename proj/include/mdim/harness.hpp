#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdim/canonical.hpp"
#include "mdim/families.hpp"
#include "mdim/resolving.hpp"
#include "mdim/search.hpp"

namespace mdim {

// ---------------------------------------------------------------------------
// Closed-form representation tables

struct TableRow {
    Vertex vertex = 0;
    std::string label;  // table entry, e.g. "v_{t+2}" or "v_{i,j}"
    DistanceMultiset computed;
    DistanceMultiset closed_form;
    bool match() const { return computed == closed_form; }
};

struct RepresentationTable {
    std::string name;
    VertexSet witness;
    std::vector<TableRow> rows;
    /// Vertices no table entry covers.
    VertexSet uncovered;

    std::vector<TableRow> mismatches() const;
    bool agrees() const { return mismatches().empty() && uncovered.empty(); }
};

/// Cycle C_n, n >= 6, with W = {0, 1, 3}: every entry of the even (n = 2t) or
/// odd (n = 2t + 1) table that names an existing vertex, against BFS.
RepresentationTable cycle_table(int n);

/// Grid P_m x P_n, m >= 3, n >= 2, with W = {v_{1,1}, v_{1,2}, v_{3,1}}.
RepresentationTable grid_table(int m, int n);

// ---------------------------------------------------------------------------
// Small-graph scan

struct ScanOptions {
    int n = 6;
    bool dedup = false;
    /// Keep canonical code -> md outcome for every analysed graph (costly
    /// without dedup).
    bool record_outcomes = false;
    SearchConfig search;
};

struct ScanViolation {
    std::string claim;
    EdgeCode code = 0;
    std::vector<Edge> edges;
    std::string details;
};

struct ScanFinding {
    std::string id;
    std::string summary;
    nlohmann::json data;
};

struct ScanReport {
    int n = 0;
    bool dedup = false;
    std::uint64_t graphs_total = 0;
    /// Connected graphs analysed (one per isomorphism class with dedup).
    std::uint64_t graphs_connected = 0;
    /// Keyed by md value, or "inf".
    std::map<std::string, std::uint64_t> md_histogram;
    std::vector<ScanViolation> violations;
    std::vector<ScanFinding> conjecture_findings;
    double diameter2_fraction = 0.0;
    /// Infinite md found only by exhaustion (both detectors silent).
    std::uint64_t detector_misses = 0;
    /// Least code achieving each finite md value.
    std::map<int, EdgeCode> spectrum;
    /// Filled when ScanOptions::record_outcomes is set: canonical code -> md key.
    std::map<EdgeCode, std::string> outcomes;
};

class ScanRangeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Orders 1..7 are accepted; throws ScanRangeError otherwise.
ScanReport scan_small_graphs(const ScanOptions& options);

// ---------------------------------------------------------------------------
// Suite

enum class CheckStatus { Pass, Finding, Violation, Aborted };

const char* to_string(CheckStatus s);

struct Check {
    std::string check_id;
    CheckStatus status = CheckStatus::Pass;
    std::optional<std::vector<Edge>> graph;
    nlohmann::json details = nlohmann::json::object();
};

struct SuiteOptions {
    int scan_max_n = 6;
    bool dedup = true;
    int cycle_min = 6, cycle_max = 13;
    int grid_m_max = 5, grid_n_max = 5;
    SearchConfig search{.max_vertices = 32};
};

struct SuiteReport {
    std::vector<Check> checks;
    std::size_t count(CheckStatus s) const;
};

SuiteReport run_paper_suite(const SuiteOptions& options);

/// Instances the suite checks against expected_md and witness_for.
std::vector<FamilySpec> suite_families();

nlohmann::json to_json(const Check& c);
nlohmann::json to_json(const SuiteReport& r);
nlohmann::json to_json(const ScanReport& r);
nlohmann::json to_json(const RepresentationTable& t);
nlohmann::json edges_json(const std::vector<Edge>& edges);
std::string md_key(const ResolveOutcome& o);

std::string render_text(const SuiteReport& r);
std::string render_text(const ScanReport& r);
std::string render_text(const RepresentationTable& t);

}  // namespace mdim
