#include <doctest.h>

#include "nfc/matching.hpp"
#include "nfc/oracle.hpp"

using namespace nfc;

namespace {

Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);      // outer cycle
        edges.emplace_back(i, i + 5);            // spokes
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return Graph(10, std::move(edges));
}

}  // namespace

TEST_CASE("max_matching on fixtures") {
    CHECK(max_matching(path_graph(4)).size() == 2);
    CHECK(max_matching(cycle_graph(5)).size() == 2);
    CHECK(max_matching(petersen()).size() == 5);
    CHECK(oracle::max_matching_size_brute(petersen()) == 5);
    CHECK(max_matching(empty_graph(0)).size() == 0);
}

TEST_CASE("max_matching is deterministic") {
    Graph g = random_graph(12, 0.4, 99);
    CHECK(serialize_matching(max_matching(g)) ==
          serialize_matching(max_matching(g)));
}

TEST_CASE("has_perfect_matching") {
    CHECK(has_perfect_matching(complete_graph(2)));
    CHECK_FALSE(has_perfect_matching(disjoint_union(cycle_graph(3),
                                                    cycle_graph(3))));
    CHECK(has_perfect_matching(empty_graph(0)));
    CHECK_FALSE(has_perfect_matching(path_graph(3)));
}

TEST_CASE("find_near_factor") {
    auto k1 = find_near_factor(empty_graph(1));
    REQUIRE(k1.has_value());
    CHECK(k1->matching.size() == 0);
    CHECK(k1->unsaturated == 0);

    auto p3 = find_near_factor(path_graph(3));
    REQUIRE(p3.has_value());
    CHECK(p3->matching.size() == 1);

    CHECK_FALSE(find_near_factor(cycle_graph(4)).has_value());
    CHECK_FALSE(find_near_factor(empty_graph(0)).has_value());
    CHECK_FALSE(find_near_factor(empty_graph(3)).has_value());
}

TEST_CASE("unsaturated_vertices") {
    Graph c4 = cycle_graph(4);
    CHECK(unsaturated_vertices(c4, Matching{{{0, 1}}}) ==
          std::vector<Vertex>{2, 3});
    CHECK(unsaturated_vertices(complete_graph(2), Matching{{{0, 1}}}).empty());
    CHECK(unsaturated_vertices(c4, Matching{}) ==
          std::vector<Vertex>{0, 1, 2, 3});

    CHECK_THROWS_AS(unsaturated_vertices(c4, Matching{{{0, 2}}}), GraphError);
    CHECK_THROWS_AS(
        unsaturated_vertices(c4, Matching{{{0, 1}, {1, 2}}}), GraphError);
}

TEST_CASE("engine agrees with the oracle exhaustively for n <= 6") {
    for (int n = 0; n <= 6; ++n) {
        std::vector<Edge> universe;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) universe.emplace_back(u, v);
        for (std::uint64_t mask = 0; mask < (1ULL << universe.size());
             ++mask) {
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < universe.size(); ++i)
                if (mask & (1ULL << i)) edges.push_back(universe[i]);
            Graph g(n, std::move(edges));
            Matching m = max_matching(g);
            validate_matching(g, m);
            REQUIRE(m.size() == oracle::max_matching_size_brute(g));
        }
    }
}

TEST_CASE("matching bounds and maximality certificate on random graphs") {
    Xorshift64Star rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        int n = static_cast<int>(rng.next() % 14);
        Graph g = random_graph(n, rng.next_double(), rng.next());
        Matching m = max_matching(g);
        validate_matching(g, m);
        CHECK(m.size() <= n / 2);
        CHECK_FALSE(has_augmenting_path(g, m));

        // greedy maximal matching is a lower bound
        std::vector<char> used(n, 0);
        int greedy = 0;
        for (const auto& [u, v] : g.edges())
            if (!used[u] && !used[v]) {
                used[u] = used[v] = 1;
                ++greedy;
            }
        CHECK(m.size() >= greedy);
    }
}

TEST_CASE("serialization formats") {
    Matching m{{{2, 3}, {0, 1}}};
    CHECK(serialize_matching(m) == "0 1\n2 3\n");
    NearFactor nf{Matching{{{1, 2}}}, 0};
    CHECK(serialize_near_factor(nf) == "1 2\nunsaturated: 0\n");
}
