#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "mdim/families.hpp"
#include "mdim/resolving.hpp"
#include "oracle.hpp"

using namespace mdim;

namespace {

DistanceMatrix dist(const FamilySpec& spec) { return all_pairs_distances(generate(spec)); }

VertexSet random_subset(std::mt19937& rng, int n, double p) {
    VertexSet w;
    std::bernoulli_distribution coin(p);
    for (int v = 0; v < n; ++v)
        if (coin(rng)) w.push_back(v);
    return w;
}

// Least k with (k+d-1)! / (k! (d-1)!) + k >= n, evaluated with exact factorials.
int f_by_factorials(long long n, int d) {
    using boost::multiprecision::cpp_int;
    const auto fact = [](int m) {
        cpp_int r = 1;
        for (int i = 2; i <= m; ++i) r *= i;
        return r;
    };
    for (int k = 1;; ++k)
        if (fact(k + d - 1) / (fact(k) * fact(d - 1)) + k >= n) return k;
}

}  // namespace

TEST_CASE("representation") {
    CHECK(representation(dist(family::Cycle{8}), 2, VertexSet{0, 1, 3}) == DistanceMultiset{1, 1, 2});
    // v_{2,1} in P3 x P3 has id 3; W = {v_{1,1}, v_{1,2}, v_{3,1}} = {0, 1, 6}.
    CHECK(representation(dist(family::Grid{3, 3}), 3, VertexSet{0, 1, 6}) == DistanceMultiset{1, 1, 2});
    CHECK_THROWS_AS(representation(dist(family::Cycle{8}), 8, VertexSet{0}), std::out_of_range);
}

TEST_CASE("representation length and zero entries") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 12)(rng);
        const DistanceMatrix d = all_pairs_distances(oracle::random_connected(rng, n, 0.2));
        const VertexSet w = random_subset(rng, n, 0.4);
        for (Vertex v = 0; v < n; ++v) {
            const auto r = representation(d, v, w);
            CHECK(r.size() == w.size());
            CHECK(std::is_sorted(r.begin(), r.end()));
            const bool member = std::binary_search(w.begin(), w.end(), v);
            CHECK(std::count(r.begin(), r.end(), 0) == (member ? 1 : 0));
        }
    }
}

TEST_CASE("is_m_resolving") {
    CHECK(is_m_resolving(dist(family::Cycle{6}), VertexSet{0, 1, 3}).resolving);

    const DistanceMatrix k4 = dist(family::Complete{4});
    for (Vertex a = 0; a < 4; ++a)
        for (Vertex b = a + 1; b < 4; ++b) {
            const auto r = is_m_resolving(k4, VertexSet{a, b});
            REQUIRE_FALSE(r.resolving);
            // a and b share {0,1}; the two outside vertices share {1,1}. The least pair wins.
            Vertex c = 0;
            while (c == a || c == b) ++c;
            Vertex e = c + 1;
            while (e == a || e == b) ++e;
            const bool outside_first = c < a;
            CHECK(r.first_collision->u == (outside_first ? c : a));
            CHECK(r.first_collision->v == (outside_first ? e : b));
            CHECK(r.first_collision->shared == (outside_first ? std::vector<int>{1, 1} : std::vector<int>{0, 1}));
        }

    const auto p4 = is_m_resolving(dist(family::Path{4}), VertexSet{0, 3});
    REQUIRE_FALSE(p4.resolving);
    CHECK(p4.first_collision->u == 0);
    CHECK(p4.first_collision->v == 3);
    CHECK(p4.first_collision->shared == std::vector<int>{0, 3});

    SUBCASE("empty set resolves only K1") {
        CHECK(is_m_resolving(dist(family::Path{1}), VertexSet{}).resolving);
        CHECK_FALSE(is_m_resolving(dist(family::Path{2}), VertexSet{}).resolving);
    }
}

TEST_CASE("is_metric_resolving") {
    CHECK(is_metric_resolving(dist(family::Path{5}), VertexSet{0}).resolving);
    CHECK(is_metric_resolving(dist(family::Cycle{6}), VertexSet{0, 1}).resolving);
    const auto antipodal = is_metric_resolving(dist(family::Cycle{6}), VertexSet{0, 3});
    REQUIRE_FALSE(antipodal.resolving);
    CHECK(antipodal.first_collision->u == 1);
    CHECK(antipodal.first_collision->v == 5);
}

TEST_CASE("f_lower_bound") {
    for (int n = 2; n <= 40; ++n) CHECK(f_lower_bound(n, n - 1) == 1);
    CHECK(f_lower_bound(13, 2) == 6);
    for (int d = 1; d <= 30; ++d) CHECK(f_lower_bound(1, d) == 1);
    CHECK(f_lower_bound(15, 6) == 2);
    CHECK(f_lower_bound(9, 4) == 2);
    CHECK_THROWS_AS(f_lower_bound(5, 0), std::invalid_argument);

    SUBCASE("agrees with factorial evaluation") {
        for (int n = 1; n <= 100; ++n)
            for (int d = 1; d <= 20; ++d) REQUIRE_MESSAGE(f_lower_bound(n, d) == f_by_factorials(n, d), "n=" << n << " d=" << d);
    }
    SUBCASE("no overflow for large inputs") {
        CHECK(f_lower_bound(2'000'001, 2) == 1'000'000);
        for (long long n : {1'000'000'000LL, 1'000'000'000'000LL, 4'000'000'000'000'000'000LL})
            for (int d : {8, 20, 60}) CHECK(f_lower_bound(n, d) == f_by_factorials(n, d));
    }
}

TEST_CASE("md_lower_bound") {
    const auto lb_of = [](const FamilySpec& spec) {
        const Graph g = generate(spec);
        const DistanceMatrix d = all_pairs_distances(g);
        return md_lower_bound(g, d, twin_partition(g), major_vertex_report(g, d));
    };
    CHECK(lb_of(family::Path{7}).value == 1);

    const LowerBound tree = lb_of(family::KAryTree{2, 3});
    CHECK(tree.value == 4);
    const auto term = [&](BoundKind k) {
        for (const auto& t : tree.terms)
            if (t.kind == k) return t.value;
        return -1;
    };
    CHECK(term(BoundKind::NonPath) == 3);
    CHECK(term(BoundKind::SigmaMinusEx) == 4);
    CHECK(term(BoundKind::Diameter) == 2);
    CHECK(term(BoundKind::TwinPairs) == 4);
    CHECK(tree.attained_by() == std::vector<BoundKind>{BoundKind::SigmaMinusEx, BoundKind::TwinPairs});

    CHECK(lb_of(family::Cycle{9}).value == 3);
}

TEST_CASE("detect_infinite") {
    const auto detect = [](const FamilySpec& spec) {
        const Graph g = generate(spec);
        const DistanceMatrix d = all_pairs_distances(g);
        return detect_infinite(g, d, twin_partition(g));
    };
    for (int n = 3; n <= 5; ++n) {
        const auto c = detect(family::Cycle{n});
        REQUIRE(c);
        CHECK(c->kind == InfiniteCertificate::Kind::DiameterTwoNonPath);
    }
    CHECK_FALSE(detect(family::Cycle{6}));
    CHECK_FALSE(detect(family::Path{3}));

    SUBCASE("K_{1,4}: diameter two and a twin class of four leaves") {
        const Graph g = generate(family::Star{4});
        const auto c = detect(family::Star{4});
        REQUIRE(c);
        CHECK(c->kind == InfiniteCertificate::Kind::DiameterTwoNonPath);
        CHECK(*twin_partition(g).largest() == VertexSet{1, 2, 3, 4});
    }
    SUBCASE("large twin class at diameter above two") {
        const auto c = detect(family::KAryTree{3, 2});
        REQUIRE(c);
        CHECK(c->kind == InfiniteCertificate::Kind::LargeTwinClass);
        CHECK(c->twin_class == VertexSet{4, 5, 6});
    }
    SUBCASE("counterexample tree passes both detectors") { CHECK_FALSE(detect(family::CounterexampleTree{})); }
}

TEST_CASE("violates_dist2_lemma") {
    const DistanceMatrix c8 = dist(family::Cycle{8});
    CHECK(violates_dist2_lemma(c8, VertexSet{0, 1}));
    CHECK_FALSE(violates_dist2_lemma(c8, VertexSet{0, 1, 3}));
    CHECK_FALSE(violates_dist2_lemma(c8, VertexSet{4}));
    CHECK_FALSE(violates_dist2_lemma(c8, VertexSet{}));
    CHECK(violates_dist2_lemma(c8, VertexSet{0, 1, 2}));
}

TEST_CASE("resolving-set properties on random graphs") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 11)(rng);
        const Graph g = oracle::random_connected(rng, n, 0.2);
        const DistanceMatrix d = all_pairs_distances(g);
        const auto fw = oracle::floyd_warshall(g);
        const MaskResolver resolver(d);
        for (int s = 0; s < 10; ++s) {
            const VertexSet w = random_subset(rng, n, std::uniform_real_distribution<double>(0.1, 0.7)(rng));
            const bool m_res = is_m_resolving(d, w).resolving;
            REQUIRE(m_res == oracle::m_resolving(fw, w));
            REQUIRE(resolver.multiset_resolves(to_mask(w)) == m_res);
            REQUIRE(resolver.metric_resolves(to_mask(w)) == oracle::metric_resolving(fw, w));
            REQUIRE(resolver.pairwise_within_two(to_mask(w)) == violates_dist2_lemma(d, w));
            if (violates_dist2_lemma(d, w)) CHECK_FALSE(m_res);
            if (m_res) {
                CHECK(is_metric_resolving(d, w).resolving);
                VertexSet reversed(w.rbegin(), w.rend());
                CHECK(is_metric_resolving(d, reversed).resolving);
            }
        }
    }
}

TEST_CASE("m-resolving sets hold exactly one vertex of each twin pair") {
    std::mt19937 rng(9);
    int resolving_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = oracle::random_with_twins(rng, std::uniform_int_distribution<int>(3, 6)(rng), 2);
        const DistanceMatrix d = all_pairs_distances(g);
        const auto tp = twin_partition(g);
        const int n = static_cast<int>(g.order());
        for (unsigned mask = 1; mask < (1U << n); mask += 1 + (mask % 5)) {
            const VertexSet w = from_mask(mask);
            if (!is_m_resolving(d, w).resolving) continue;
            ++resolving_seen;
            for (const auto& cls : tp.classes) {
                if (cls.size() != 2) continue;
                const int hits = std::binary_search(w.begin(), w.end(), cls[0]) + std::binary_search(w.begin(), w.end(), cls[1]);
                CHECK(hits == 1);
            }
        }
    }
    CHECK(resolving_seen > 0);
}

TEST_CASE("mask helpers") {
    CHECK(from_mask(to_mask(VertexSet{0, 5, 63})) == VertexSet{0, 5, 63});
    CHECK(from_mask(0).empty());
    CHECK_THROWS_AS(to_mask(VertexSet{64}), std::out_of_range);
    SUBCASE("wide sets take the unpacked path") {
        const DistanceMatrix d = dist(family::Path{30});
        VertexSet w;
        for (int v = 0; v < 25; ++v) w.push_back(v);
        const MaskResolver r(d);
        CHECK(r.multiset_resolves(to_mask(w)) == is_m_resolving(d, w).resolving);
        CHECK(r.metric_resolves(to_mask(w)));
    }
}
