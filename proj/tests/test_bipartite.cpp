#include "doctest.h"

#include "listec/bipartite.hpp"
#include "listec/oracle.hpp"
#include "test_helpers.hpp"

using namespace listec;
using namespace listec::testing;

namespace {

// random bipartite graph with sides {1..nv} x {101..100+nw}
Graph random_bipartite(int nv, int nw, int percent, Rng& rng, Bipartition* b) {
    std::vector<int> verts;
    for (int v = 1; v <= nv; ++v) verts.push_back(v);
    for (int w = 101; w < 101 + nw; ++w) verts.push_back(w);
    std::vector<Edge> edges;
    for (int v = 1; v <= nv; ++v)
        for (int w = 101; w < 101 + nw; ++w)
            if (rng.chance(percent, 100)) edges.emplace_back(v, w);
    if (b) {
        b->side_v.clear();
        b->side_w.clear();
        for (int v = 1; v <= nv; ++v) b->side_v.insert(v);
        for (int w = 101; w < 101 + nw; ++w) b->side_w.insert(w);
    }
    return Graph(verts, edges);
}

Graph complete_bipartite(int nv, int nw, Bipartition* b) {
    Rng dummy(0);
    Bipartition bb;
    Graph g = random_bipartite(nv, nw, 100, dummy, &bb);
    if (b) *b = bb;
    return g;
}

}  // namespace

TEST_CASE("fig8 self-test passes") { CHECK_NOTHROW(fig8_selftest()); }

TEST_CASE("galvin on the even cycle") {
    Graph c4({1, 2, 101, 102}, {Edge(1, 101), Edge(1, 102), Edge(2, 101), Edge(2, 102)});
    Bipartition b{{1, 2}, {101, 102}};
    ListAssignment l = uniform_lists(c4, {1, 2});
    EdgeColouring ref{{Edge(1, 101), 1}, {Edge(2, 101), 2}, {Edge(2, 102), 1}, {Edge(1, 102), 2}};
    EdgeColouring c = galvin_colour(c4, b, l, ref);
    CHECK(proper_and_listed(c4, l, c));
}

TEST_CASE("galvin on K33 with arbitrary 3-lists") {
    Bipartition b;
    Graph g = complete_bipartite(3, 3, &b);
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        ListAssignment l = random_lists(g, 3, 6, rng);
        EdgeColouring ref = bipartite_delta_colouring(g);
        EdgeColouring c = galvin_colour(g, b, l, ref);
        CHECK(proper_and_listed(g, l, c));
    }
}

TEST_CASE("galvin succeeds against oracle references on random bipartite graphs") {
    Rng rng(41);
    int done = 0;
    while (done < 300) {
        Bipartition b;
        Graph g = random_bipartite(1 + rng.below(4), 1 + rng.below(4), 60, rng, &b);
        if (g.edge_count() == 0 || g.edge_count() > 12) continue;
        ++done;
        int delta = g.max_degree();
        OracleResult base = exists_colouring(g, uniform_lists(g, iota_set(1, delta)));
        REQUIRE(base.colourable);  // bipartite graphs are Delta-edge-colourable
        ListAssignment l = random_lists(g, delta, 2 * delta, rng);
        EdgeColouring c = galvin_colour(g, b, l, *base.witness);
        CHECK(proper_and_listed(g, l, c));
    }
}

TEST_CASE("galvin rejects a violated bound naming the edge") {
    Graph c4({1, 2, 101, 102}, {Edge(1, 101), Edge(1, 102), Edge(2, 101), Edge(2, 102)});
    Bipartition b{{1, 2}, {101, 102}};
    ListAssignment l = uniform_lists(c4, {1, 2});
    l[Edge(1, 101)] = {1};
    EdgeColouring ref{{Edge(1, 101), 1}, {Edge(2, 101), 2}, {Edge(2, 102), 1}, {Edge(1, 102), 2}};
    CHECK_THROWS_WITH_AS(galvin_colour(c4, b, l, ref),
                         doctest::Contains("slivnik bound violated"), ContractError);
}

TEST_CASE("the fixed cherry-bipartite instance colours at minimum sizes") {
    std::map<std::string, int> roles{{"u", 10}, {"v1", 11}, {"v2", 12}, {"v3", 13},
                                     {"w1", 20}, {"w2", 21}, {"w3", 22}};
    std::vector<Edge> edges{Edge(10, 20), Edge(10, 21), Edge(10, 22), Edge(11, 20), Edge(11, 22),
                            Edge(12, 20), Edge(12, 21), Edge(13, 21), Edge(13, 22)};
    Graph g({10, 11, 12, 13, 20, 21, 22}, edges);
    Rng rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        ListAssignment l;
        for (const auto& [pair, m] : cherry_bipartite_minima()) {
            Edge e(roles.at(pair.first), roles.at(pair.second));
            l[e] = rng.sample(m, 12);
        }
        EdgeColouring c = colour_cherry_bipartite(g, roles, l);
        CHECK(proper_and_listed(g, l, c));
    }
    // a list below the printed minimum is rejected
    ListAssignment bad;
    for (const auto& [pair, m] : cherry_bipartite_minima())
        bad[Edge(roles.at(pair.first), roles.at(pair.second))] = iota_set(1, m);
    bad[Edge(10, 20)] = iota_set(1, 3);  // needs 4
    CHECK_THROWS_AS(colour_cherry_bipartite(g, roles, bad), ContractError);
}

TEST_CASE("find_2regular_spanning") {
    // C6 is its own 2-factor
    Graph c6({1, 2, 3, 101, 102, 103},
             {Edge(1, 101), Edge(101, 2), Edge(2, 102), Edge(102, 3), Edge(3, 103),
              Edge(103, 1)});
    Bipartition b{{1, 2, 3}, {101, 102, 103}};
    auto h = find_2regular_spanning(c6, b);
    REQUIRE(h.has_value());
    CHECK(h->size() == 6);

    // the exceptional graph has no 2-factor
    const Graph& f11 = fig11_graph();
    Bipartition fb{{0, 1, 2, 3}, {4, 5, 6, 7}};
    CHECK(!find_2regular_spanning(f11, fb).has_value());

    // K44 minus a perfect matching is 3-regular and has one
    Bipartition kb;
    Graph k44 = complete_bipartite(4, 4, &kb);
    Graph km = k44;
    for (int i = 1; i <= 4; ++i) km = km.without_edge(Edge(i, 100 + i));
    auto h2 = find_2regular_spanning(km, kb);
    REQUIRE(h2.has_value());
    std::map<int, int> deg;
    for (const Edge& e : *h2) {
        deg[e.u]++;
        deg[e.v]++;
    }
    for (auto [v, d] : deg) CHECK(d == 2);
    CHECK(deg.size() == 8);
}

TEST_CASE("colour_via_2regular") {
    Graph c6({1, 2, 3, 101, 102, 103},
             {Edge(1, 101), Edge(101, 2), Edge(2, 102), Edge(102, 3), Edge(3, 103),
              Edge(103, 1)});
    Bipartition b{{1, 2, 3}, {101, 102, 103}};
    Rng rng(71);
    for (int trial = 0; trial < 50; ++trial) {
        ListAssignment l = random_lists(c6, 2, 6, rng);
        auto h = find_2regular_spanning(c6, b);
        EdgeColouring c = colour_via_2regular(c6, b, l, *h);
        CHECK(proper_and_listed(c6, l, c));
    }
    // cycle plus one pendant at a V-vertex with a 3-list
    Graph plus({1, 2, 3, 101, 102, 103, 104},
               {Edge(1, 101), Edge(101, 2), Edge(2, 102), Edge(102, 3), Edge(3, 103),
                Edge(103, 1), Edge(1, 104)});
    Bipartition pb{{1, 2, 3}, {101, 102, 103, 104}};
    ListAssignment pl = uniform_lists(plus, {1, 2});
    pl[Edge(1, 101)] = {1, 2, 3};
    pl[Edge(103, 1)] = {1, 2, 3};
    pl[Edge(1, 104)] = {1, 2, 3};
    auto h = find_2regular_spanning(induced_delete(plus, {104}), b);
    REQUIRE(h.has_value());
    EdgeColouring c = colour_via_2regular(plus, pb, pl, *h);
    CHECK(proper_and_listed(plus, pl, c));
}

TEST_CASE("choose_subset_k33 cases") {
    // a degree-1 w goes alone
    Graph g1({1, 2, 3, 101, 102, 103},
             {Edge(1, 101), Edge(1, 102), Edge(2, 101), Edge(2, 102), Edge(3, 103)});
    Bipartition b1{{1, 2, 3}, {101, 102, 103}};
    SubsetChoice c1 = choose_subset_k33(g1, b1);
    CHECK(c1.w_subset == VertexSet{103});

    // six edges: the cycle keeps all of W
    Graph c6({1, 2, 3, 101, 102, 103},
             {Edge(1, 101), Edge(101, 2), Edge(2, 102), Edge(102, 3), Edge(3, 103),
              Edge(103, 1)});
    SubsetChoice c2 = choose_subset_k33(c6, b1);
    CHECK(c2.w_subset.size() == 3);
    CHECK(c2.route == "6-edge cycle");

    Bipartition kb;
    Graph k33 = complete_bipartite(3, 3, &kb);
    SubsetChoice c3 = choose_subset_k33(k33, kb);
    CHECK(c3.w_subset.size() == 3);
    CHECK(c3.route == "K33");
}

TEST_CASE("choose_subset_k44 cases and the exception") {
    // a degree-1 v drops its neighbour
    std::vector<Edge> edges{Edge(1, 101), Edge(1, 102), Edge(2, 101), Edge(2, 102),
                            Edge(3, 103), Edge(3, 104), Edge(4, 103), Edge(4, 104),
                            Edge(1, 103)};
    Graph g({1, 2, 3, 4, 101, 102, 103, 104}, edges);
    Bipartition b{{1, 2, 3, 4}, {101, 102, 103, 104}};
    auto c = choose_subset_k44(g, b);
    REQUIRE(c.has_value());

    // minimum degree 2 and not exceptional: the whole of W via a 2-factor
    Bipartition kb;
    Graph k44 = complete_bipartite(4, 4, &kb);
    Graph km = k44;
    for (int i = 1; i <= 4; ++i) km = km.without_edge(Edge(i, 100 + i));
    auto c2 = choose_subset_k44(km, kb);
    REQUIRE(c2.has_value());
    CHECK(c2->w_subset.size() == 4);
    CHECK(c2->route == "2-factor");

    // the exceptional graph certifies instead of choosing
    Bipartition fb{{0, 1, 2, 3}, {4, 5, 6, 7}};
    CHECK(!choose_subset_k44(fig11_graph(), fb).has_value());
}

TEST_CASE("colour_k44_mindeg3") {
    Rng rng(83);
    Bipartition kb;
    Graph k44 = complete_bipartite(4, 4, &kb);

    // all of W degree 3: drop a perfect matching, X is empty
    Graph km = k44;
    for (int i = 1; i <= 4; ++i) km = km.without_edge(Edge(i, 100 + i));
    for (int trial = 0; trial < 50; ++trial) {
        ListAssignment l;
        for (const Edge& e : km.edges()) l[e] = rng.sample(3, 9);
        EdgeColouring c = colour_k44_mindeg3(km, kb, 1, l);
        CHECK(proper_and_listed(km, l, c));
    }

    // one 4-vertex in V
    Graph one = k44;
    for (int i = 2; i <= 4; ++i) one = one.without_edge(Edge(i, 100 + i));
    for (int trial = 0; trial < 50; ++trial) {
        ListAssignment l;
        for (const Edge& e : one.edges()) {
            int v = e.u <= 4 ? e.u : e.v;
            l[e] = rng.sample(one.degree(v), 9);
        }
        EdgeColouring c = colour_k44_mindeg3(one, kb, 1, l);
        CHECK(proper_and_listed(one, l, c));
    }

    // K44 itself: matching of size 4 then the 3-regular residue
    for (int trial = 0; trial < 50; ++trial) {
        ListAssignment l;
        for (const Edge& e : k44.edges()) l[e] = rng.sample(4, 10);
        EdgeColouring c = colour_k44_mindeg3(k44, kb, 1, l);
        CHECK(proper_and_listed(k44, l, c));
    }
}

TEST_CASE("v_choosable_colour routes") {
    Rng rng(97);
    // star centred in V
    Graph star({1, 101, 102, 103}, {Edge(1, 101), Edge(1, 102), Edge(1, 103)});
    Bipartition sb{{1}, {101, 102, 103}};
    for (int trial = 0; trial < 30; ++trial) {
        ListAssignment l = random_lists(star, 3, 8, rng);
        auto res = v_choosable_colour(star, sb, l);
        REQUIRE(res.colouring.has_value());
        CHECK(proper_and_listed(star, l, *res.colouring));
    }

    // C8 with 2-lists
    Graph c8({1, 2, 3, 4, 101, 102, 103, 104},
             {Edge(1, 101), Edge(101, 2), Edge(2, 102), Edge(102, 3), Edge(3, 103),
              Edge(103, 4), Edge(4, 104), Edge(104, 1)});
    Bipartition cb{{1, 2, 3, 4}, {101, 102, 103, 104}};
    for (int trial = 0; trial < 30; ++trial) {
        ListAssignment l = random_lists(c8, 2, 6, rng);
        auto res = v_choosable_colour(c8, cb, l);
        REQUIRE(res.colouring.has_value());
        CHECK(proper_and_listed(c8, l, *res.colouring));
    }

    // the exceptional graph with canonical lists reports the exception
    const Graph& f11 = fig11_graph();
    Bipartition fb{{0, 1, 2, 3}, {4, 5, 6, 7}};
    ListAssignment canon;
    for (const Edge& e : f11.edges()) {
        int v = e.u <= 3 ? e.u : e.v;
        canon[e] = iota_set(1, f11.degree(v));
    }
    auto res = v_choosable_colour(f11, fb, canon);
    CHECK(res.exceptional);
    CHECK(!res.colouring.has_value());
    CHECK(!res.exception_isomorphism.empty());
}

TEST_CASE("fig6 transfer against the oracle") {
    // shape: u=9, v_i in {1,2,3}, w_j in {101..104}
    std::map<std::string, int> roles{{"u", 9},    {"v1", 1},   {"v2", 2},   {"v3", 3},
                                     {"w1", 101}, {"w2", 102}, {"w3", 103}, {"w4", 104}};
    std::vector<Edge> edges;
    for (int i : {1, 2, 3, 9}) edges.emplace_back(i, 101);
    edges.emplace_back(1, 102);
    edges.emplace_back(2, 103);
    edges.emplace_back(3, 104);
    for (int w : {102, 103, 104}) edges.emplace_back(9, w);
    Graph g({1, 2, 3, 9, 101, 102, 103, 104}, edges);

    Rng rng(113);
    int done = 0;
    while (done < 200) {
        ListAssignment l;
        for (const Edge& e : g.edges()) {
            int v = e.touches(9) ? 9 : (e.u <= 3 ? e.u : e.v);
            l[e] = rng.sample(v == 9 ? 4 : 2, 8);
        }
        // the auxiliary K24 colouring must exist for the lemma to apply
        std::vector<Edge> k24_edges;
        std::vector<int> qs{1, 2, 3, 9};
        Graph k24({1, 2, 3, 9, 201, 202},
                  {Edge(1, 201), Edge(2, 201), Edge(3, 201), Edge(9, 201), Edge(1, 202),
                   Edge(2, 202), Edge(3, 202), Edge(9, 202)});
        ListAssignment l1;
        for (int j : {201, 202})
            for (int q : qs) l1[Edge(q, j)] = l.at(Edge(q, 101));
        OracleResult aux = exists_colouring(k24, l1);
        if (!aux.colourable) continue;
        ++done;
        std::map<std::pair<int, int>, int> auxmap;
        for (int j = 1; j <= 2; ++j)
            for (int i = 1; i <= 4; ++i)
                auxmap[{j, i}] = aux.witness->at(Edge(qs[i - 1], 200 + j));
        EdgeColouring c = colour_fig6_transfer(g, roles, l, auxmap);
        CHECK(proper_and_listed(g, l, c));
    }
}
