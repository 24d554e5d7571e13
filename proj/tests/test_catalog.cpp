#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qsr/catalog.hpp"
#include "qsr/errors.hpp"
#include "qsr/graph.hpp"

using namespace qsr;

TEST_CASE("g1 shape") {
    const Graph g = build_g1();
    CHECK(g.order() == 11);
    CHECK(g.edge_count() == 22);
    CHECK(is_regular(g) == 4);
    CHECK(is_triangle_free(g));
}

TEST_CASE("g2 shape") {
    const Graph g = build_g2();
    CHECK(g.order() == 12);
    CHECK(g.edge_count() == 24);
    CHECK(is_regular(g) == 4);
    CHECK(is_triangle_free(g));
}

TEST_CASE("h8 shape") {
    const Graph g = build_h8();
    CHECK(g.order() == 7);
    CHECK(g.edge_count() == 6);
    // two degree-3 centres joined through a degree-2 middle vertex
    std::vector<int> degrees;
    for (int v = 0; v < 7; ++v) degrees.push_back(g.degree(v));
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<int>{1, 1, 1, 1, 2, 3, 3});
    CHECK(g.adjacent(0, 3));
    CHECK(g.adjacent(3, 4));
}

TEST_CASE("named dispatch") {
    CHECK(build_named("g1") == build_g1());
    CHECK(build_named("g2") == build_g2());
    CHECK(build_named("h8") == build_h8());
    CHECK(build_named("c5").order() == 5);
    CHECK(build_named("c5").edge_count() == 5);
    CHECK(build_named("k44").order() == 8);
    CHECK(build_named("k44").edge_count() == 16);
    CHECK_THROWS_AS(build_named("nosuch"), UnknownName);
    CHECK_THROWS_AS(build_named(""), UnknownName);
    CHECK_THROWS_AS(build_named("G1"), UnknownName);  // names are lower case
}

TEST_CASE("catalog_names lists every builder") {
    const auto names = catalog_names();
    CHECK(names == std::vector<std::string>{"c5", "g1", "g2", "h8", "k44"});
    for (const auto& name : names) CHECK_NOTHROW(build_named(name));
}
