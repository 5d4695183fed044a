#include <doctest.h>

#include "mdim/distance.hpp"
#include "mdim/families.hpp"
#include "mdim/graph.hpp"
#include "mdim/structure.hpp"
#include "oracle.hpp"

using namespace mdim;

namespace {

Graph path(int n) { return generate(family::Path{n}); }

}  // namespace

TEST_CASE("build_graph sorts adjacency and validates edges") {
    const Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.order() == 3);
    CHECK(k3.size() == 3);
    for (Vertex v = 0; v < 3; ++v) CHECK(k3.degree(v) == 2);

    const Graph g = build_graph(4, {{3, 0}, {2, 0}, {1, 0}});
    CHECK(std::vector<Vertex>(g.neighbors(0).begin(), g.neighbors(0).end()) == std::vector<Vertex>{1, 2, 3});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});

    SUBCASE("loop") {
        try {
            build_graph(2, {{0, 0}});
            FAIL("expected LoopEdge");
        } catch (const GraphError& e) {
            CHECK(e.kind() == GraphError::Kind::LoopEdge);
            CHECK(e.edge() == Edge{0, 0});
        }
    }
    SUBCASE("duplicate, in either orientation") {
        try {
            build_graph(3, {{0, 1}, {1, 2}, {1, 0}});
            FAIL("expected DuplicateEdge");
        } catch (const GraphError& e) {
            CHECK(e.kind() == GraphError::Kind::DuplicateEdge);
            CHECK(e.edge() == Edge{0, 1});
        }
    }
    SUBCASE("out of range") {
        try {
            build_graph(3, {{0, 3}});
            FAIL("expected VertexOutOfRange");
        } catch (const GraphError& e) {
            CHECK(e.kind() == GraphError::Kind::VertexOutOfRange);
            CHECK(e.edge() == Edge{0, 3});
        }
        CHECK_THROWS_AS(build_graph(3, {{-1, 0}}), GraphError);
    }
}

TEST_CASE("Petersen graph is 3-regular on 10 vertices") {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
        edges.emplace_back(i, i + 5);
    }
    const Graph g = build_graph(10, edges);
    CHECK(g.size() == 15);
    for (Vertex v = 0; v < 10; ++v) CHECK(g.degree(v) == 3);
    CHECK(g == generate(family::Petersen{}));
}

TEST_CASE("all_pairs_distances") {
    const DistanceMatrix p4 = all_pairs_distances(path(4));
    CHECK(p4(0, 3) == 3);
    CHECK(p4(1, 2) == 1);

    const DistanceMatrix pet = all_pairs_distances(generate(family::Petersen{}));
    CHECK(diameter(pet) == 2);

    try {
        all_pairs_distances(build_graph(4, {{0, 1}, {2, 3}}));
        FAIL("expected Disconnected");
    } catch (const GraphError& e) {
        CHECK(e.kind() == GraphError::Kind::Disconnected);
        CHECK(e.edge() == Edge{0, 2});
    }
}

TEST_CASE("diameter") {
    for (int n = 1; n <= 9; ++n) CHECK(diameter(all_pairs_distances(path(n))) == n - 1);
    CHECK(diameter(all_pairs_distances(generate(family::Complete{4}))) == 1);
    CHECK(diameter(all_pairs_distances(generate(family::Cycle{6}))) == 3);
}

TEST_CASE("distance matrix properties on random connected graphs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 14)(rng);
        const Graph g = oracle::random_connected(rng, n, 0.15);
        const DistanceMatrix d = all_pairs_distances(g);
        const auto fw = oracle::floyd_warshall(g);
        for (Vertex u = 0; u < n; ++u) {
            CHECK(d(u, u) == 0);
            for (Vertex v = 0; v < n; ++v) {
                REQUIRE(d(u, v) == fw[u][v]);
                CHECK(d(u, v) == d(v, u));
                CHECK((d(u, v) == 1) == g.adjacent(u, v));
                for (Vertex w = 0; w < n; ++w) CHECK(d(u, w) <= d(u, v) + d(v, w));
            }
        }
    }
}

TEST_CASE("is_path") {
    CHECK(is_path(path(1)));
    CHECK(is_path(path(2)));
    CHECK(is_path(path(6)));
    CHECK(is_path(build_graph(4, {{2, 0}, {0, 3}, {3, 1}})));
    CHECK_FALSE(is_path(generate(family::Cycle{5})));
    CHECK_FALSE(is_path(generate(family::Star{3})));
    CHECK_FALSE(is_path(build_graph(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("major_vertex_report") {
    SUBCASE("star K_{1,3}") {
        const Graph g = generate(family::Star{3});
        const auto r = major_vertex_report(g, all_pairs_distances(g));
        CHECK(r.majors == VertexSet{0});
        CHECK(r.terminals.at(0) == VertexSet{1, 2, 3});
        CHECK(r.sigma == 3);
        CHECK(r.ex == 1);
    }
    SUBCASE("P5 has no major vertex") {
        const Graph g = path(5);
        const auto r = major_vertex_report(g, all_pairs_distances(g));
        CHECK(r.majors.empty());
        CHECK(r.sigma == 0);
        CHECK(r.ex == 0);
    }
    SUBCASE("complete binary tree of height 3") {
        const Graph g = generate(family::KAryTree{2, 3});
        const auto r = major_vertex_report(g, all_pairs_distances(g));
        CHECK(r.majors == VertexSet{1, 2, 3, 4, 5, 6});
        CHECK(r.sigma == 8);
        CHECK(r.ex == 4);
        CHECK(r.terminals.at(3) == VertexSet{7, 8});
        CHECK(r.terminals.at(1).empty());
    }
    SUBCASE("two claws joined through a major midpoint") {
        // 0 and 1 each carry two leaves; their common neighbour 6 carries leaf 7.
        const Graph g = build_graph(8, {{0, 2}, {0, 3}, {0, 6}, {1, 4}, {1, 5}, {1, 6}, {6, 7}});
        const auto r = major_vertex_report(g, all_pairs_distances(g));
        CHECK(r.majors == VertexSet{0, 1, 6});
        CHECK(r.terminals.at(6) == VertexSet{7});
        CHECK(r.sigma == 5);
        CHECK(r.ex == 3);
    }
}

TEST_CASE("twin_partition") {
    SUBCASE("star leaves form one class") {
        const auto tp = twin_partition(generate(family::Star{3}));
        CHECK(tp.classes == std::vector<VertexSet>{{0}, {1, 2, 3}});
    }
    SUBCASE("P4 has singleton classes") {
        const auto tp = twin_partition(path(4));
        CHECK(tp.classes.size() == 4);
        CHECK(tp.pair_count() == 0);
    }
    SUBCASE("counterexample tree") {
        const auto tp = twin_partition(generate(family::CounterexampleTree{}));
        CHECK(tp.classes == std::vector<VertexSet>{{0}, {1}, {2}, {3}, {4, 5}, {6, 7}, {8, 9}});
        CHECK(tp.pair_count() == 3);
    }
    SUBCASE("adjacent twins in a complete graph") {
        const auto tp = twin_partition(generate(family::Complete{4}));
        CHECK(tp.classes == std::vector<VertexSet>{{0, 1, 2, 3}});
    }
}

TEST_CASE("twins are equidistant from every other vertex") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = trial % 2 ? oracle::random_connected(rng, std::uniform_int_distribution<int>(2, 12)(rng), 0.3)
                                  : oracle::random_with_twins(rng, 5, 3);
        const DistanceMatrix d = all_pairs_distances(g);
        const auto tp = twin_partition(g);
        std::size_t covered = 0;
        for (const auto& cls : tp.classes) {
            covered += cls.size();
            for (Vertex u : cls)
                for (Vertex v : cls) {
                    if (u == v) continue;
                    CHECK(are_twins(g, u, v));
                    for (Vertex x = 0; x < static_cast<Vertex>(g.order()); ++x)
                        if (x != u && x != v) CHECK(d(u, x) == d(v, x));
                }
        }
        CHECK(covered == g.order());
    }
}

TEST_CASE("cartesian_product") {
    const Graph c4 = cartesian_product(path(2), path(2));
    CHECK(c4.order() == 4);
    CHECK(c4.size() == 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

    const Graph p3p2 = cartesian_product(path(3), path(2));
    CHECK(p3p2.order() == 6);
    CHECK(p3p2.size() == 3 * (2 - 1) + 2 * (3 - 1));

    const Graph g = path(3), h = path(4);
    const DistanceMatrix dg = all_pairs_distances(g), dh = all_pairs_distances(h);
    const DistanceMatrix dp = all_pairs_distances(cartesian_product(g, h));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 4; ++b)
            for (int a2 = 0; a2 < 3; ++a2)
                for (int b2 = 0; b2 < 4; ++b2) CHECK(dp(a * 4 + b, a2 * 4 + b2) == dg(a, a2) + dh(b, b2));
}
