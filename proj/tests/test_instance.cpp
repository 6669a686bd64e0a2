#include "doctest.h"

#include <sstream>

#include "listec/generate.hpp"
#include "listec/decomposition.hpp"
#include "listec/instance.hpp"
#include "test_helpers.hpp"

using namespace listec;
using namespace listec::testing;

TEST_CASE("instance round trip") {
    Rng rng(401);
    for (int trial = 0; trial < 30; ++trial) {
        auto kind = static_cast<InstanceKind>(trial % 4);
        int n = kind == InstanceKind::KTree3 || kind == InstanceKind::SubTw3 ? 14 : 12;
        auto gen = generate_instance(kind, n, rng.next());
        InstanceFile inst;
        inst.graph = gen.graph;
        inst.lists = gen.lists;
        inst.regime = to_string(gen.regime);
        inst.decomposition = gen.decomposition;
        std::string text = emit_instance(inst);
        std::istringstream in(text);
        InstanceFile back = parse_instance(in);
        CHECK(back == inst);
        // and emitting again is byte-identical
        CHECK(emit_instance(back) == text);
    }
}

TEST_CASE("instance parser rejects malformed input") {
    auto parse = [](const std::string& s) {
        std::istringstream in(s);
        return parse_instance(in);
    };
    CHECK_THROWS_AS(parse("nope\n"), InputError);
    CHECK_THROWS_AS(parse("listec v1\nunknown-field 3\n"), InputError);
    CHECK_THROWS_AS(parse("listec v1\nvertices 1 2\nedge 2-1 : 1\n"), InputError);   // not min-max
    CHECK_THROWS_AS(parse("listec v1\nvertices 1 2\nedge 1-2 :\n"), InputError);     // empty list
    CHECK_THROWS_AS(parse("listec v1\nvertices 1\nedge 1-2 : 1\n"), InputError);     // unknown vertex
    CHECK_THROWS_AS(parse("listec v1\nvertices 1 2\nedge 1-2 : 1\nedge 1-2 : 2\n"), InputError);
    CHECK_NOTHROW(parse("listec v1\n# comment\nvertices 1 2\nedge 1-2 : 1 2\n"));
}

TEST_CASE("colouring round trip") {
    EdgeColouring c{{Edge(1, 2), 3}, {Edge(2, 5), 1}};
    std::string text = emit_colouring(c);
    std::istringstream in(text);
    CHECK(parse_colouring(in) == c);
}

TEST_CASE("dot export") {
    Graph g = make_graph(3, {{1, 2}, {2, 3}});
    EdgeColouring c{{Edge(1, 2), 4}};
    std::string dot = export_dot(g, &c);
    CHECK(dot.find("graph listec {") == 0);
    CHECK(dot.find("1 -- 2 [label=\"4\"]") != std::string::npos);
    CHECK(dot.find("2 -- 3 [style=dashed]") != std::string::npos);

    Graph empty;
    std::string edot = export_dot(empty, nullptr);
    CHECK(edot == "graph listec {\n}\n");
}

TEST_CASE("generator shapes") {
    // a 3-tree on n vertices has 3n-6 edges
    auto small = generate_instance(InstanceKind::KTree3, 4, 1);
    CHECK(small.graph.edge_count() == 6);
    auto forty = generate_instance(InstanceKind::KTree3, 40, 1);
    CHECK(forty.graph.edge_count() == 114);
    CHECK(forty.decomposition.has_value());
    CHECK(validate(forty.graph, *forty.decomposition).ok());

    auto sub = generate_instance(InstanceKind::SubTw3, 30, 5);
    CHECK(sub.graph.max_degree() >= 7);
    auto d = decompose_tw3(sub.graph);
    REQUIRE(d.has_value());
    CHECK(validate(sub.graph, *d).ok());

    auto pw = generate_instance(InstanceKind::Pw3, 16, 5);
    CHECK(pw.decomposition.has_value());
    CHECK(pw.decomposition->shape == TreeDecomposition::Shape::path);
    CHECK(validate(pw.graph, *pw.decomposition).ok());
    CHECK(pw.decomposition->width() <= 3);

    // list sizes follow max(l, deg, deg) for the regime
    for (const Edge& e : sub.graph.edges()) {
        int need = std::max({7, sub.graph.degree(e.u), sub.graph.degree(e.v)});
        CHECK(static_cast<int>(sub.lists.at(e).size()) == need);
    }
    CHECK_THROWS_AS(generate_instance(InstanceKind::Pw3, 40, 1), ContractError);
}

TEST_CASE("negative colours are rejected") {
    std::istringstream in("listec v1\nvertices 1 2\nedge 1-2 : -1 2\n");
    CHECK_THROWS_AS(parse_instance(in), InputError);
}
