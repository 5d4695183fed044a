#include <doctest.h>

#include <sstream>

#include "mdim/canonical.hpp"
#include "mdim/families.hpp"
#include "mdim/search.hpp"
#include "oracle.hpp"

using namespace mdim;

namespace {

void check_against_oracle(const Graph& g, const SearchConfig& cfg = {}) {
    const ResolveOutcome got = compute_md(g, cfg);
    const auto want = oracle::md(g);
    INFO("graph " << g.order() << " vertices, " << g.size() << " edges");
    REQUIRE(got.finite() == want.has_value());
    if (!want) return;
    CHECK(got.as_finite().value == want->value);
    CHECK(got.as_finite().value != 2);
    // The witness is the least resolving set of minimum size, except that
    // the search only visits sets obeying the twin constraint, which every
    // m-resolving set obeys anyway.
    CHECK(got.as_finite().witness == want->witness);
}

}  // namespace

TEST_CASE("compute_md on paths returns the least pendant vertex") {
    CHECK(compute_md(generate(family::Path{5})).as_finite() == Finite{1, {0}});
    CHECK(compute_md(generate(family::Path{1})).as_finite() == Finite{1, {0}});
    CHECK(compute_md(build_graph(4, {{0, 1}, {1, 2}, {0, 3}})).as_finite() == Finite{1, {2}});
}

TEST_CASE("compute_md on the named families") {
    const ResolveOutcome c6 = compute_md(generate(family::Cycle{6}));
    REQUIRE(c6.finite());
    CHECK(c6.as_finite().value == 3);
    CHECK(c6.as_finite().witness == oracle::md(generate(family::Cycle{6}))->witness);

    const ResolveOutcome cex = compute_md(generate(family::CounterexampleTree{}));
    REQUIRE(cex.infinite());
    CHECK(cex.as_infinite().certificate.kind == InfiniteCertificate::Kind::ExhaustiveSearch);
    for (auto count : cex.candidates_per_size) CHECK(count <= 128);

    const ResolveOutcome tree = compute_md(generate(family::KAryTree{2, 2}));
    REQUIRE(tree.finite());
    CHECK(tree.as_finite().value == 3);

    const ResolveOutcome k4 = compute_md(generate(family::Complete{4}));
    REQUIRE(k4.infinite());
    CHECK(k4.as_infinite().certificate.kind == InfiniteCertificate::Kind::DiameterTwoNonPath);
}

TEST_CASE("m-resolvability is not monotone") {
    const DistanceMatrix d = all_pairs_distances(generate(family::Path{4}));
    CHECK(is_m_resolving(d, VertexSet{0}).resolving);
    CHECK_FALSE(is_m_resolving(d, VertexSet{0, 3}).resolving);
}

TEST_CASE("compute_dim") {
    for (int n = 1; n <= 8; ++n) CHECK(compute_dim(generate(family::Path{n})).value == 1);
    CHECK(compute_dim(generate(family::SubdividedStar{4, 2})).value == 3);
    const Finite c7 = compute_dim(generate(family::Cycle{7}));
    CHECK(c7 == Finite{2, {0, 1}});
}

TEST_CASE("compute_md and compute_dim agree with plain enumeration") {
    SUBCASE("every connected graph up to seven vertices") {
        int graphs = 0;
        for (int n = 1; n <= 7; ++n)
            for (EdgeCode code = 0; code < (EdgeCode{1} << pair_count(n)); ++code) {
                if (!code_connected(n, code) || !is_canonical(n, code)) continue;
                const Graph g = graph_from_code(n, code);
                check_against_oracle(g);
                CHECK(compute_dim(g).value == oracle::dim(g)->value);
                ++graphs;
            }
        CHECK(graphs == 1 + 1 + 2 + 6 + 21 + 112 + 853);
    }
    SUBCASE("random graphs on eight vertices") {
        std::mt19937 rng(2024);
        for (int trial = 0; trial < 600; ++trial) check_against_oracle(oracle::random_connected(rng, 8, trial % 3 * 0.1));
    }
    SUBCASE("random sparse trees with twin pairs") {
        std::mt19937 rng(77);
        for (int trial = 0; trial < 150; ++trial) check_against_oracle(oracle::random_with_twins(rng, 5, 2));
    }
}

TEST_CASE("brute_force_md matches the oracle") {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_connected(rng, std::uniform_int_distribution<int>(1, 9)(rng), 0.25);
        const auto got = brute_force_md(all_pairs_distances(g));
        const auto want = oracle::md(g);
        REQUIRE(got.has_value() == want.has_value());
        if (want) CHECK(*got == Finite{want->value, want->witness});
    }
}

TEST_CASE("parallel search returns the serial answer") {
    std::mt19937 rng(99);
    std::vector<Graph> graphs;
    for (int i = 0; i < 40; ++i) graphs.push_back(oracle::random_connected(rng, 12, 0.08));
    graphs.push_back(generate(family::KAryTree{2, 3}));
    graphs.push_back(generate(family::Grid{4, 5}));
    graphs.push_back(generate(family::Cycle{11}));
    graphs.push_back(generate(family::CounterexampleTree{}));
    for (const Graph& g : graphs) {
        const ResolveOutcome serial = compute_md(g);
        const Finite dim_serial = compute_dim(g);
        for (unsigned workers : {2U, 3U, 8U}) {
            SearchConfig cfg;
            cfg.parallel = true;
            cfg.workers = workers;
            const ResolveOutcome par = compute_md(g, cfg);
            REQUIRE(par.finite() == serial.finite());
            if (serial.finite()) CHECK(par.as_finite() == serial.as_finite());
            CHECK(compute_dim(g, cfg) == dim_serial);
        }
    }
}

TEST_CASE("search limits and errors") {
    const Graph big = generate(family::Path{25});
    const ResolveOutcome o = compute_md(big);
    REQUIRE(o.aborted());
    CHECK(o.as_aborted().reason.find("25") != std::string::npos);
    CHECK_THROWS_AS(compute_dim(big), SearchAborted);

    SearchConfig wide;
    wide.max_vertices = 30;
    CHECK(compute_md(big, wide).finite());

    const Graph split = build_graph(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(compute_md(split), GraphError);
    CHECK_THROWS_AS(compute_dim(split), GraphError);
}

TEST_CASE("progress reporting goes to the configured stream") {
    std::ostringstream log;
    SearchConfig cfg;
    cfg.progress_reporting = true;
    cfg.progress = &log;
    compute_md(generate(family::KAryTree{2, 2}), cfg);
    CHECK(log.str().find("md search: size 3") != std::string::npos);
}

TEST_CASE("verify_witness") {
    const WitnessReport c9 = verify_witness(generate(family::Cycle{9}), VertexSet{0, 1, 3});
    CHECK(c9.multiset.resolving);
    CHECK(c9.metric.resolving);
    REQUIRE(c9.representations.size() == 9);
    CHECK(c9.representations[5] == DistanceMultiset{2, 4, 4});

    const WitnessReport grid = verify_witness(generate(family::Grid{4, 5}), VertexSet{0, 1, 10});
    CHECK_FALSE(grid.multiset.resolving);
    REQUIRE(grid.multiset.first_collision);
    CHECK(grid.multiset.first_collision->shared == DistanceMultiset{2, 3, 4});
    CHECK(grid.representations[12] == grid.representations[16]);

    const WitnessReport k4 = verify_witness(generate(family::Complete{4}), VertexSet{0, 1, 2});
    CHECK_FALSE(k4.multiset.resolving);
    CHECK(k4.metric.resolving);
}
