#include "doctest.h"

#include "listec/catalogue.hpp"
#include "listec/oracle.hpp"
#include "listec/solver.hpp"
#include "listec/substructure.hpp"
#include "test_helpers.hpp"

using namespace listec;
using namespace listec::testing;

TEST_CASE("catalogue counts and chromatic indices") {
    const std::map<char, std::pair<int, int>> counts{
        {'a', {4, 6}},  {'b', {5, 9}},  {'c', {6, 12}}, {'d', {6, 12}}, {'e', {7, 15}},
        {'f', {7, 15}}, {'g', {7, 15}}, {'h', {8, 18}}, {'i', {8, 18}}};
    const std::map<char, int> chi{{'a', 3}, {'b', 5}, {'c', 5}, {'d', 5}, {'e', 6},
                                  {'f', 6}, {'g', 6}, {'h', 6}, {'i', 6}};
    for (char id : catalogue_ids()) {
        const Graph& g = catalogue_graph(id);
        CHECK(g.vertex_count() == static_cast<std::size_t>(counts.at(id).first));
        CHECK(g.edge_count() == static_cast<std::size_t>(counts.at(id).second));
        CHECK(is_three_tree(g));
        CHECK(g.max_degree() <= 6);
        CHECK(catalogue_chromatic_index(id) == chi.at(id));
        CHECK(chromatic_index(g) == chi.at(id));
    }
}

TEST_CASE("catalogue graphs are pairwise non-isomorphic") {
    for (char a : catalogue_ids())
        for (char b : catalogue_ids()) {
            if (a >= b) continue;
            const Graph& ga = catalogue_graph(a);
            const Graph& gb = catalogue_graph(b);
            if (ga.vertex_count() != gb.vertex_count() || ga.edge_count() != gb.edge_count())
                continue;
            CHECK(!find_isomorphism(ga, gb).has_value());
        }
}

TEST_CASE("colour_catalogue succeeds on random lists at chi'") {
    Rng rng(101);
    for (char id : catalogue_ids()) {
        const Graph& g = catalogue_graph(id);
        int chi = catalogue_chromatic_index(id);
        for (int trial = 0; trial < 100; ++trial) {
            ListAssignment l = random_lists(g, chi, 3 * chi, rng);
            EdgeColouring c = colour_catalogue(g, id, l);
            CHECK(proper_and_listed(g, l, c));
        }
    }
}

TEST_CASE("colour_catalogue works through relabelling") {
    Rng rng(107);
    const Graph& cat = catalogue_graph('d');
    std::vector<int> nv;
    std::vector<Edge> ne;
    for (int v : cat.vertices()) nv.push_back(v * 10 + 3);
    for (const Edge& e : cat.edges()) ne.emplace_back(e.u * 10 + 3, e.v * 10 + 3);
    Graph g(nv, ne);
    for (int trial = 0; trial < 50; ++trial) {
        ListAssignment l = random_lists(g, 5, 15, rng);
        EdgeColouring c = colour_catalogue(g, 'd', l);
        CHECK(proper_and_listed(g, l, c));
    }
}

TEST_CASE("colour_catalogue rejects short lists and wrong graphs") {
    const Graph& a = catalogue_graph('a');
    ListAssignment small = uniform_lists(a, {1, 2});
    CHECK_THROWS_AS(colour_catalogue(a, 'a', small), ContractError);
    ListAssignment ok = uniform_lists(a, {1, 2, 3});
    CHECK_THROWS_AS(colour_catalogue(a, 'b', ok), ContractError);
}
