#include "doctest.h"

#include "listec/oracle.hpp"
#include "listec/solver.hpp"
#include "test_helpers.hpp"

using namespace listec;
using namespace listec::testing;

TEST_CASE("exists_colouring on triangles") {
    Graph c3 = cycle(3);
    CHECK(!exists_colouring(c3, uniform_lists(c3, {1, 2})).colourable);

    ListAssignment mixed{{Edge(1, 2), {1, 2}}, {Edge(2, 3), {1, 2}}, {Edge(1, 3), {1, 3}}};
    OracleResult r = exists_colouring(c3, mixed);
    CHECK(r.colourable);
    CHECK(proper_and_listed(c3, mixed, *r.witness));
}

TEST_CASE("exists_colouring matches the catalogue-b bound") {
    // the five-vertex graph of chromatic index 5 is not 4-colourable
    Graph g = make_graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5},
                             {3, 4}, {3, 5}});
    CHECK(!exists_colouring(g, uniform_lists(g, {1, 2, 3, 4})).colourable);
    CHECK(exists_colouring(g, uniform_lists(g, {1, 2, 3, 4, 5})).colourable);
}

TEST_CASE("exists_colouring oracle guard") {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= 41; ++i) pairs.emplace_back(i, i + 1);
    Graph longpath = make_graph(42, pairs);
    CHECK_THROWS_AS(exists_colouring(longpath, uniform_lists(longpath, {1, 2})), CapacityError);
}

TEST_CASE("exists_colouring invariant under colour relabelling") {
    Rng rng(3);
    Graph g = k4();
    for (int trial = 0; trial < 30; ++trial) {
        ListAssignment l = random_lists(g, 2 + rng.below(2), 6, rng);
        bool plain = exists_colouring(g, l).colourable;
        // permute colours 1..6
        std::vector<int> perm{1, 2, 3, 4, 5, 6};
        for (int i = 0; i < 5; ++i) std::swap(perm[i], perm[i + rng.below(6 - i)]);
        ListAssignment relabelled;
        for (auto& [e, s] : l) {
            ColourSet ns;
            for (int c : s) insert_colour(ns, perm[c - 1]);
            relabelled[e] = ns;
        }
        CHECK(exists_colouring(g, relabelled).colourable == plain);
    }
}

TEST_CASE("is_k_choosable exposes the odd cycle exception") {
    Graph c3 = cycle(3);
    ChoosabilityResult r = is_k_choosable(c3, 2, 4);
    CHECK(!r.choosable);
    REQUIRE(r.counterexample.has_value());
    // lexicographically first failure: the identical pair {1,2} three times
    for (const auto& [e, s] : *r.counterexample) CHECK(s == ColourSet{1, 2});
    CHECK(!exists_colouring(c3, *r.counterexample).colourable);

    CHECK(is_k_choosable(cycle(4), 2, 4).choosable);
}

TEST_CASE("K4 is 3-choosable over a bounded universe") {
    ChoosabilityResult r = is_k_choosable(k4(), 3, 6);
    CHECK(r.choosable);
    CHECK(r.assignments_checked > 0);
}

TEST_CASE("verify_colouring reports problems") {
    Graph p = path(3);
    ListAssignment l = uniform_lists(p, {1, 2});
    EdgeColouring good{{Edge(1, 2), 1}, {Edge(2, 3), 2}};
    CHECK(verify_colouring(p, l, good).ok());

    EdgeColouring clash{{Edge(1, 2), 1}, {Edge(2, 3), 1}};
    CHECK(!verify_colouring(p, l, clash).ok());

    EdgeColouring offlist{{Edge(1, 2), 9}, {Edge(2, 3), 2}};
    CHECK(!verify_colouring(p, l, offlist).ok());

    EdgeColouring partial{{Edge(1, 2), 1}};
    CHECK(!verify_colouring(p, l, partial).ok());
}

TEST_CASE("chromatic_index basics") {
    CHECK(chromatic_index(k4()) == 3);
    CHECK(chromatic_index(cycle(5)) == 3);
    CHECK(chromatic_index(cycle(6)) == 2);
    Graph fig1 = make_graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5},
                                {3, 4}, {3, 5}});
    CHECK(chromatic_index(fig1) == 5);
}
