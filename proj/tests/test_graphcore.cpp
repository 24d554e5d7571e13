#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "qsr/catalog.hpp"
#include "qsr/graph.hpp"

using namespace qsr;

TEST_CASE("VertexSet basics") {
    VertexSet s;
    CHECK(s.empty());
    CHECK(s.count() == 0);
    s.add(3);
    s.add(0);
    s.add(63);
    CHECK(s.count() == 3);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(4));
    CHECK(s.min() == 0);
    s.remove(0);
    CHECK(s.min() == 3);
    CHECK(VertexSet::single(5).bits() == 0x20);
    CHECK(VertexSet::first_n(4).bits() == 0xf);
    CHECK(VertexSet::first_n(64).count() == 64);
    CHECK(VertexSet::first_n(0).empty());
}

TEST_CASE("VertexSet algebra and iteration") {
    const VertexSet a = VertexSet::first_n(6);        // {0..5}
    const VertexSet b(0b111000);                      // {3,4,5}
    CHECK((a & b) == b);
    CHECK((a | b) == a);
    CHECK((a - b) == VertexSet::first_n(3));
    CHECK(b.subset_of(a));
    CHECK_FALSE(a.subset_of(b));
    CHECK(a.intersects(b));
    CHECK_FALSE(VertexSet::first_n(3).intersects(b));
    std::vector<int> seen;
    for (int v : b) seen.push_back(v);
    CHECK(seen == std::vector<int>{3, 4, 5});
}

TEST_CASE("from_edges builds and validates") {
    const Graph k4 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(k4.order() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4.adjacent(0, 3));
    CHECK(k4.adjacent(3, 0));
    CHECK(k4.degree(2) == 3);
    CHECK(k4.neighbours(1) == (VertexSet::first_n(4) - VertexSet::single(1)));

    // duplicate edges collapse
    const Graph dup = make_graph(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(make_graph(0, {}), CapacityExceeded);
    CHECK_THROWS_AS(make_graph(65, {}), CapacityExceeded);
    CHECK_THROWS_AS(make_graph(3, {{0, 3}}), VertexOutOfRange);
    CHECK_THROWS_AS(make_graph(3, {{-1, 0}}), VertexOutOfRange);
    CHECK_THROWS_AS(make_graph(3, {{1, 1}}), SelfLoop);
}

TEST_CASE("from_adjacency validates shape") {
    std::vector<VertexSet> rows(3);
    rows[0].add(1);
    rows[1].add(0);
    const Graph p2 = Graph::from_adjacency(rows);
    CHECK(p2.edge_count() == 1);

    std::vector<VertexSet> loop(2);
    loop[0].add(0);
    CHECK_THROWS_AS(Graph::from_adjacency(loop), SelfLoop);

    std::vector<VertexSet> asym(2);
    asym[0].add(1);
    CHECK_THROWS_AS(Graph::from_adjacency(asym), VertexOutOfRange);

    std::vector<VertexSet> oob(2);
    oob[0].add(5);
    CHECK_THROWS_AS(Graph::from_adjacency(oob), VertexOutOfRange);
}

TEST_CASE("edges round trip and equality") {
    const std::vector<Edge> edges = {{0, 2}, {1, 3}, {2, 3}};
    const Graph g = make_graph(5, edges);
    CHECK(g.edges() == edges);
    CHECK(g == make_graph(5, {{2, 0}, {3, 1}, {3, 2}}));
    CHECK_FALSE(g == make_graph(5, {{0, 2}}));
    CHECK_FALSE(g == make_graph(4, {{0, 2}, {1, 3}, {2, 3}}));
}

TEST_CASE("vertex access is range checked") {
    const Graph g = make_graph(3, {{0, 1}});
    CHECK_THROWS_AS(g.degree(3), VertexOutOfRange);
    CHECK_THROWS_AS(g.neighbours(-1), VertexOutOfRange);
    CHECK_THROWS_AS(g.adjacent(0, 3), VertexOutOfRange);
}

TEST_CASE("common_neighbours") {
    const Graph c5 = build_named("c5");
    CHECK(common_neighbours(c5, 0, 2) == 1);
    CHECK(common_neighbours(c5, 0, 1) == 0);
    CHECK_THROWS_AS(common_neighbours(c5, 2, 2), SameVertex);
}

TEST_CASE("is_regular and is_triangle_free") {
    CHECK(is_regular(build_named("c5")) == 2);
    CHECK(is_regular(build_named("g1")) == 4);
    CHECK_FALSE(is_regular(make_graph(3, {{0, 1}})).has_value());
    CHECK(is_regular(make_graph(4, {})) == 0);
    CHECK(is_triangle_free(build_named("g2")));
    CHECK(is_triangle_free(build_named("k44")));
    CHECK_FALSE(is_triangle_free(make_graph(3, {{0, 1}, {1, 2}, {0, 2}})));
}

TEST_CASE("independence_number on known graphs") {
    CHECK(independence_number(build_named("c5")) == 2);
    CHECK(independence_number(build_named("h8")) == 5);
    CHECK(independence_number(build_named("k44")) == 4);
    CHECK(independence_number(make_graph(6, {})) == 6);
    CHECK(independence_number(make_graph(1, {})) == 1);
    // path on 5 vertices: alternate ends
    CHECK(independence_number(make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})) == 3);
    CHECK(independence_number(build_named("g1")) == 4);

    std::vector<Edge> none;
    CHECK_THROWS_AS(independence_number(make_graph(41, none)), TooLarge);
}

TEST_CASE("independence_number agrees with subset scan") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Graph g = test_oracles::random_graph(rng, n, 0.4);
        int best = 0;
        for (int mask = 0; mask < (1 << n); ++mask) {
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                for (int v = u + 1; v < n && ok; ++v)
                    if ((mask >> u & 1) && (mask >> v & 1) && g.adjacent(u, v)) ok = false;
            if (ok) best = std::max(best, __builtin_popcount(static_cast<unsigned>(mask)));
        }
        CHECK(independence_number(g) == best);
    }
}

TEST_CASE("cut_size") {
    const Graph g1 = build_named("g1");
    const VertexSet nu = g1.neighbours(0);
    VertexSet rest;
    for (int v = 1; v < g1.order(); ++v)
        if (!nu.contains(v)) rest.add(v);
    CHECK(cut_size(g1, nu, rest) == 12);
    CHECK(cut_size(g1, nu, VertexSet()) == 0);
    CHECK_THROWS_AS(cut_size(g1, nu, nu), OverlappingSets);
    VertexSet outside;
    outside.add(12);
    CHECK_THROWS_AS(cut_size(g1, nu, outside), VertexOutOfRange);
}

TEST_CASE("apply_permutation") {
    const Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    const Graph rotated = apply_permutation(p3, {1, 2, 0});
    CHECK(rotated.adjacent(1, 2));
    CHECK(rotated.adjacent(2, 0));
    CHECK_FALSE(rotated.adjacent(0, 1));

    CHECK_THROWS_AS(apply_permutation(p3, {0, 1}), VertexOutOfRange);
    CHECK_THROWS_AS(apply_permutation(p3, {0, 1, 3}), VertexOutOfRange);

    // permutation preserves degree multisets
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = test_oracles::random_graph(rng, 9, 0.5);
        const Graph h = apply_permutation(g, test_oracles::random_permutation(rng, 9));
        CHECK(g.edge_count() == h.edge_count());
        CHECK(test_oracles::perm_isomorphic(g, h));
    }
}
