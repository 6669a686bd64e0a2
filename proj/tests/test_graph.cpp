#include "doctest.h"

#include <algorithm>

#include "listec/catalogue.hpp"
#include "listec/generate.hpp"
#include "listec/graph.hpp"
#include "test_helpers.hpp"

using namespace listec;
using namespace listec::testing;

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(Graph({1, 2}, {Edge(1, 1)}), InputError);
    CHECK_THROWS_AS(Graph({1, 2}, {Edge(1, 2), Edge(2, 1)}), InputError);
    CHECK_THROWS_AS(Graph({1, 2}, {Edge(1, 3)}), InputError);
}

TEST_CASE("induced_delete") {
    Graph g = k4();
    Graph h = induced_delete(g, {4});
    CHECK(h.vertex_count() == 3);
    CHECK(h.edge_count() == 3);

    Graph same = induced_delete(g, {});
    CHECK(same.edges() == g.edges());

    Graph p = path(3);
    Graph two = induced_delete(p, {2});
    CHECK(two.vertex_count() == 2);
    CHECK(two.edge_count() == 0);

    CHECK_THROWS_AS(induced_delete(g, {99}), InputError);
}

TEST_CASE("boundary_graph") {
    // star centred at 1 with leaves 2,3: removing the centre keeps the star
    Graph star = make_graph(3, {{1, 2}, {1, 3}});
    Graph b = boundary_graph(star, {1});
    CHECK(b.edge_count() == 2);
    CHECK(b.vertex_count() == 3);

    Graph g = k4();
    Graph claw = boundary_graph(g, {4});
    CHECK(claw.vertex_count() == 4);
    CHECK(claw.edge_count() == 3);
    for (const Edge& e : claw.edges()) CHECK(e.touches(4));

    Graph c4 = cycle(4);
    Graph whole = boundary_graph(c4, {1, 3});
    CHECK(whole.edge_count() == 4);
}

TEST_CASE("boundary and deletion partition the edge set") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto inst = generate_instance(InstanceKind::SubTw3, 14, rng.next());
        const Graph& g = inst.graph;
        VertexSet w;
        for (int v : g.vertices())
            if (rng.chance(1, 3)) w.insert(v);
        Graph del = induced_delete(g, w);
        Graph bnd = boundary_graph(g, w);
        std::vector<Edge> unioned = del.edges();
        unioned.insert(unioned.end(), bnd.edges().begin(), bnd.edges().end());
        std::sort(unioned.begin(), unioned.end());
        CHECK(unioned == g.edges());
    }
}

TEST_CASE("remaining_lists") {
    Graph p = path(3);
    ListAssignment l{{Edge(1, 2), {1}}, {Edge(2, 3), {1, 2}}};
    EdgeColouring c{{Edge(1, 2), 1}};
    ListAssignment rem = remaining_lists(p, l, c, {Edge(2, 3)});
    CHECK(rem.at(Edge(2, 3)) == ColourSet{2});

    // no coloured neighbours: unchanged
    ListAssignment rem2 = remaining_lists(p, l, {}, {Edge(2, 3)});
    CHECK(rem2.at(Edge(2, 3)) == ColourSet{1, 2});

    // K4 with one perfect matching coloured 1: remaining lists drop to {2,3}
    Graph g = k4();
    ListAssignment lk = uniform_lists(g, {1, 2, 3});
    EdgeColouring matching{{Edge(1, 2), 1}, {Edge(3, 4), 1}};
    std::vector<Edge> rest{Edge(1, 3), Edge(1, 4), Edge(2, 3), Edge(2, 4)};
    ListAssignment rem3 = remaining_lists(g, lk, matching, rest);
    for (const Edge& e : rest) CHECK(rem3.at(e) == ColourSet{2, 3});

    // improper colouring rejected
    EdgeColouring bad{{Edge(1, 2), 1}, {Edge(1, 3), 1}};
    CHECK_THROWS_AS(remaining_lists(g, lk, bad, {Edge(2, 4)}), ContractError);
}

TEST_CASE("find_isomorphism") {
    Graph a = k4();
    Graph b = make_graph(8, {{5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}});
    Graph b2({5, 6, 7, 8}, b.edges());
    auto iso = find_isomorphism(a, b2);
    REQUIRE(iso.has_value());
    // the bijection maps edges onto edges exactly
    std::vector<Edge> mapped;
    for (const Edge& e : a.edges()) mapped.emplace_back(iso->at(e.u), iso->at(e.v));
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == b2.edges());

    CHECK(!find_isomorphism(k4(), cycle(4)).has_value());

    // catalogue c and d: same counts, different graphs
    CHECK(catalogue_graph('c').vertex_count() == 6);
    CHECK(catalogue_graph('d').vertex_count() == 6);
    CHECK(catalogue_graph('c').edge_count() == 12);
    CHECK(catalogue_graph('d').edge_count() == 12);
    CHECK(!find_isomorphism(catalogue_graph('c'), catalogue_graph('d')).has_value());

    Graph big(std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13}, {});
    CHECK_THROWS_AS(find_isomorphism(big, big), CapacityError);
}

TEST_CASE("isomorphism found on random relabellings") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto inst = generate_instance(InstanceKind::Pw3, 9, rng.next());
        const Graph& g = inst.graph;
        // relabel by a random permutation into 100+
        std::vector<int> ids = g.vertices();
        std::vector<int> perm = ids;
        for (std::size_t i = 0; i + 1 < perm.size(); ++i)
            std::swap(perm[i], perm[i + rng.below(static_cast<int>(perm.size() - i))]);
        std::map<int, int> relabel;
        for (std::size_t i = 0; i < ids.size(); ++i) relabel[ids[i]] = 100 + perm[i];
        std::vector<int> nv;
        std::vector<Edge> ne;
        for (int v : ids) nv.push_back(relabel[v]);
        for (const Edge& e : g.edges()) ne.emplace_back(relabel[e.u], relabel[e.v]);
        Graph h(nv, ne);
        auto iso = find_isomorphism(g, h);
        REQUIRE(iso.has_value());
        std::vector<Edge> mapped;
        for (const Edge& e : g.edges()) mapped.emplace_back(iso->at(e.u), iso->at(e.v));
        std::sort(mapped.begin(), mapped.end());
        CHECK(mapped == h.edges());
    }
}
