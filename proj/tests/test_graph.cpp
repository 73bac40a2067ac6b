#include <doctest.h>

#include "nfc/graph.hpp"

using namespace nfc;

TEST_CASE("parse accepts the documented format") {
    Graph g = parse_graph("2 1\n0 1\n");
    CHECK(g.order() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}});

    Graph c3 = parse_graph("3 3\n0 1\n1 2\n0 2\n");
    CHECK(c3.order() == 3);
    CHECK(c3.size() == 3);

    Graph commented = parse_graph("# triangle\n3 3\n0 1\n1 2\n# middle\n0 2\n");
    CHECK(serialize_graph(commented) == serialize_graph(c3));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_graph("2 1\n0 0\n"), ParseError);        // self-loop
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n0 1\n"), ParseError);   // duplicate
    CHECK_THROWS_AS(parse_graph("2 1\n0 5\n"), ParseError);        // range
    CHECK_THROWS_AS(parse_graph("2 2\n0 1\n"), ParseError);        // truncated
    CHECK_THROWS_AS(parse_graph("2 1\n0 1\n1 0\n"), ParseError);   // trailing
    CHECK_THROWS_AS(parse_graph("x 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph(""), ParseError);

    try {
        parse_graph("3 3\n0 1\n1 2\nbad 2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(e.column() == 1);
    }
}

TEST_CASE("graph invariants are enforced at construction") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), GraphError);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), GraphError);
    CHECK(Graph(0, {}).order() == 0);
    // endpoints normalized to u < v
    CHECK(Graph(3, {{2, 0}}).edges() == std::vector<Edge>{{0, 2}});
}

TEST_CASE("components") {
    Graph two_triangles = disjoint_union(cycle_graph(3), cycle_graph(3));
    auto dec = components(two_triangles);
    REQUIRE(dec.count() == 2);
    CHECK(dec.components[0] == std::vector<Vertex>{0, 1, 2});
    CHECK(dec.components[1] == std::vector<Vertex>{3, 4, 5});
    CHECK(dec.odd_count() == 2);

    CHECK(components(cycle_graph(4)).count() == 1);
    CHECK(components(cycle_graph(4)).odd_count() == 0);
    CHECK(components(empty_graph(0)).count() == 0);
}

TEST_CASE("delete_vertices compacts ids and keeps the mapping") {
    auto del = delete_vertices(path_graph(3), {1});
    CHECK(del.graph.order() == 2);
    CHECK(del.graph.size() == 0);
    CHECK(del.old_to_new == std::vector<int>{0, -1, 1});

    auto same = delete_vertices(cycle_graph(4), {});
    CHECK(serialize_graph(same.graph) == serialize_graph(cycle_graph(4)));

    auto k4 = delete_vertices(complete_graph(4), {0});
    CHECK(serialize_graph(k4.graph) == serialize_graph(complete_graph(3)));

    CHECK_THROWS_AS(delete_vertices(path_graph(3), {7}), GraphError);
}

TEST_CASE("count_odd_components") {
    Graph two_triangles = disjoint_union(cycle_graph(3), cycle_graph(3));
    CHECK(count_odd_components(two_triangles, {}) == 2);
    CHECK(count_odd_components(star_graph(4), {0}) == 3);
    CHECK(count_odd_components(complete_graph(4), {}) == 0);
}

TEST_CASE("generators") {
    CHECK(cycle_graph(4).order() == 4);
    CHECK(cycle_graph(4).size() == 4);
    CHECK(star_graph(4).size() == 3);
    CHECK(path_graph(1).size() == 0);
    CHECK(complete_graph(5).size() == 10);
    CHECK(empty_graph(3).size() == 0);

    Graph two_triangles = disjoint_union(cycle_graph(3), cycle_graph(3));
    CHECK(two_triangles.order() == 6);
    CHECK(two_triangles.size() == 6);
    CHECK(two_triangles.has_edge(3, 4));
    CHECK_FALSE(two_triangles.has_edge(2, 3));
}

TEST_CASE("random_graph is deterministic per seed") {
    Graph a = random_graph(10, 0.5, 42);
    Graph b = random_graph(10, 0.5, 42);
    CHECK(serialize_graph(a) == serialize_graph(b));
    Graph c = random_graph(10, 0.5, 43);
    CHECK(serialize_graph(a) != serialize_graph(c));
    CHECK_THROWS_AS(random_graph(3, 1.5, 1), GraphError);
}

TEST_CASE("parse is a left inverse of serialize") {
    Xorshift64Star rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = static_cast<int>(rng.next() % 12);
        Graph g = random_graph(n, rng.next_double(), rng.next());
        CHECK(serialize_graph(parse_graph(serialize_graph(g))) ==
              serialize_graph(g));
    }
}

TEST_CASE("component bookkeeping properties") {
    Xorshift64Star rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        int n = static_cast<int>(rng.next() % 10);
        Graph g = random_graph(n, rng.next_double(), rng.next());
        auto dec = components(g);
        std::size_t covered = 0;
        for (const auto& comp : dec.components) covered += comp.size();
        CHECK(covered == static_cast<std::size_t>(n));
        CHECK(dec.odd_count() % 2 == n % 2);

        // independent route: count odd components of the decomposition
        int odd = 0;
        for (const auto& comp : dec.components)
            if (comp.size() % 2) ++odd;
        CHECK(count_odd_components(g, {}) == odd);
    }
}
