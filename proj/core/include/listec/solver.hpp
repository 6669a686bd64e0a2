#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "listec/decomposition.hpp"
#include "listec/graph.hpp"
#include "listec/substructure.hpp"

namespace listec {

enum class Regime { Tw3L7, Pw3L6, Pw4L10, ThreeTree };

std::string to_string(Regime r);
std::optional<Regime> regime_from_string(const std::string& s);

struct SolveRequest {
    Graph graph;
    ListAssignment lists;
    Regime regime = Regime::Tw3L7;
    std::optional<TreeDecomposition> decomposition;
    std::uint64_t seed = 0;  // test-harness knob; the solver is deterministic
};

enum class StepKind { EdgeReduction, Substructure, AuxGraph, Catalogue, Gadget };

struct SolveStep {
    StepKind kind;
    std::string detail;
    std::vector<int> removed_vertices;
    std::vector<Edge> removed_edges;
    int depth = 0;
};

struct SolveTrace {
    std::vector<SolveStep> steps;
};

struct SolveResult {
    EdgeColouring colouring;
    SolveTrace trace;
};

SolveResult solve(const SolveRequest& req);

// First edge (in key order) violating deg(v)+deg(w) >=
// max(l,deg(v),deg(w))+2, or nullopt.
std::optional<Edge> check_degree_sum(const Graph& g, int l_bound);

// G* for the fig6 case: g1 plus two new vertices joined to u,v1,v2,v3,
// with lists transferred from the w1-edges of the original graph.
std::pair<Graph, ListAssignment> build_aux_graph(const Graph& g1, const RoleMap& roles,
                                                 const ListAssignment& lists, int p1, int p2);

// Exact chromatic index via the oracle (chi' is Delta or Delta+1).
int chromatic_index(const Graph& g);

}  // namespace listec
