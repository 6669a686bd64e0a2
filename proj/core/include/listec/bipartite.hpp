#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "listec/graph.hpp"

namespace listec {

struct Bipartition {
    VertexSet side_v;  // the dominating side in V-dominated instances
    VertexSet side_w;
};

// Derive the bipartition with the given W side; everything else goes to V.
Bipartition bipartition_with_w(const Graph& g, const VertexSet& w);

// Checks that the sides are disjoint, cover the graph and every edge crosses.
void check_bipartition(const Graph& g, const Bipartition& b);

// |L(wv)| >= deg_g(v) for every edge wv with v on side V.
bool is_v_dominated(const Graph& g, const Bipartition& b, const ListAssignment& l);

// Slivnik's refinement of Galvin's theorem, run as an algorithm: colours are
// processed in ascending order; for each colour the kernel of the reference
// orientation is computed as a stable matching (W proposes, V holds the
// highest reference colour) and coloured. `ref` must be a proper total
// edge-colouring of g and every list must satisfy
//   |L(wv)| >= #{f at v : ref(f) > ref(wv)} + #{f at w : ref(f) < ref(wv)} + 1.
EdgeColouring galvin_colour(const Graph& g, const Bipartition& b,
                            const ListAssignment& l, const EdgeColouring& ref);

// Proper edge colouring of a bipartite graph with colours {1..max_degree}
// via alternating-path recolouring. Used to build reference colourings.
EdgeColouring bipartite_delta_colouring(const Graph& g);

// Spanning 2-regular subgraph, or nullopt. Exhaustive; guarded to 10
// vertices per side.
std::optional<std::vector<Edge>> find_2regular_spanning(const Graph& g, const Bipartition& b);

// V-choosable colouring through a 2-regular spanning subgraph h: colour h
// with {1,2} on canonical lists, finish the V-centred stars greedily, then
// transfer to the true lists with galvin_colour.
EdgeColouring colour_via_2regular(const Graph& g, const Bipartition& b,
                                  const ListAssignment& l, const std::vector<Edge>& h);

struct SubsetChoice {
    VertexSet w_subset;
    std::string route;  // which case of the lemma fired
};

// |W| = 3, |N(W)| <= 3: a subset W' whose incident subgraph is
// N(W')-choosable, with the case route.
SubsetChoice choose_subset_k33(const Graph& g, const Bipartition& b);

// |W| = 4, deg(w) <= 3, |N(W)| <= 4: as above, or nullopt when g is
// isomorphic to the exceptional graph (fig11_graph).
std::optional<SubsetChoice> choose_subset_k44(const Graph& g, const Bipartition& b);

// |W| = 4, deg(w) >= 3, hub adjacent to every w: whole-graph colouring via
// the matching-then-minimum-degree-2 construction.
EdgeColouring colour_k44_mindeg3(const Graph& g, const Bipartition& b, int hub,
                                 const ListAssignment& l);

struct VChoosableResult {
    std::optional<EdgeColouring> colouring;
    bool exceptional = false;                   // graph is the fig11 exception
    std::map<int, int> exception_isomorphism;   // g -> fig11 when exceptional
};

// Whole-graph colouring from V-dominated lists, dispatching between the
// star, 2-regular, and matching routes; certifies the fig11 exception.
VChoosableResult v_choosable_colour(const Graph& g, const Bipartition& b,
                                    const ListAssignment& l);

// The 10-edge path-width-4 boundary shape: w1 adjacent to v1,v2,v3,u; each
// w_{i+1} adjacent to v_i and u. Coloured from an auxiliary K_{2,4}
// colouring with lists L1(p_j q_i) = L(v_i w1), L1(p_j q_4) = L(u w1).
// Roles: "u", "v1".."v3", "w1".."w4". aux maps (j, i) with j in {1,2},
// i in {1..4} to a colour; aux[j][i] for i<=3 covers v_i, i=4 covers u.
EdgeColouring colour_fig6_transfer(const Graph& g, const std::map<std::string, int>& roles,
                                   const ListAssignment& l,
                                   const std::map<std::pair<int, int>, int>& aux);

// The 9-edge bipartite cherry shape, coloured by galvin_colour against the
// fixed reference colouring. Roles: "u","v1","v2","v3","w1","w2","w3".
EdgeColouring colour_cherry_bipartite(const Graph& g, const std::map<std::string, int>& roles,
                                      const ListAssignment& l);

// Minimum list sizes of the bipartite cherry shape keyed by role pairs.
const std::map<std::pair<std::string, std::string>, int>& cherry_bipartite_minima();

const Graph& fig11_graph();

// Reference colouring self-test: proper and within the Slivnik bound for
// the printed minimum sizes. Runs once; throws InvariantError on failure.
void fig8_selftest();

}  // namespace listec
