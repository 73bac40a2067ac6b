#include <doctest.h>

#include "nfc/oracle.hpp"

using namespace nfc;

TEST_CASE("enumerate_matchings on fixtures") {
    CHECK(oracle::all_matchings(complete_graph(2)).size() == 2);
    CHECK(oracle::all_matchings(path_graph(3)).size() == 3);
    CHECK(oracle::all_matchings(cycle_graph(4)).size() == 7);
    CHECK(oracle::all_matchings(empty_graph(0)).size() == 1);  // empty only
}

TEST_CASE("enumeration yields distinct valid matchings") {
    Graph g = random_graph(8, 0.5, 3);
    auto matchings = oracle::all_matchings(g);
    std::vector<std::string> keys;
    for (const auto& m : matchings) {
        validate_matching(g, m);
        keys.push_back(serialize_matching(m));
    }
    std::sort(keys.begin(), keys.end());
    CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("path graphs have Fibonacci many matchings") {
    // matchings(P_n) = F(n+1) with F(1) = F(2) = 1
    std::vector<std::size_t> fib{1, 1};
    for (int i = 2; i < 12; ++i) fib.push_back(fib[i - 1] + fib[i - 2]);
    for (int n = 1; n <= 10; ++n)
        CHECK(oracle::all_matchings(path_graph(n)).size() == fib[n]);  // F(n+1)
}

TEST_CASE("derived predicates") {
    Graph c5 = cycle_graph(5);
    CHECK(oracle::max_matching_size_brute(c5) == 2);
    CHECK_FALSE(oracle::has_perfect_brute(c5));
    CHECK(oracle::has_near_factor_brute(c5));

    CHECK_FALSE(oracle::has_perfect_brute(
        disjoint_union(cycle_graph(3), cycle_graph(3))));
    CHECK(oracle::has_perfect_brute(complete_graph(4)));
    CHECK(oracle::has_perfect_brute(empty_graph(0)));
}

TEST_CASE("all_near_factors") {
    auto nfs = oracle::all_near_factors(path_graph(3));
    REQUIRE(nfs.size() == 2);
    for (const auto& nf : nfs) CHECK(nf.matching.size() == 1);

    CHECK(oracle::all_near_factors(cycle_graph(4)).empty());
    auto k1 = oracle::all_near_factors(empty_graph(1));
    REQUIRE(k1.size() == 1);
    CHECK(k1[0].unsaturated == 0);
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(oracle::max_matching_size_brute(empty_graph(17)),
                    GraphError);
}
