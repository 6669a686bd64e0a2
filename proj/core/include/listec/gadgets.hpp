#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "listec/graph.hpp"

namespace listec {

struct GreedyFailure : InvariantError {
    Edge edge;
    explicit GreedyFailure(const Edge& e)
        : InvariantError("semi-greedy stuck at edge " + to_string(e)), edge(e) {}
};

// Extends c by repeatedly colouring an uncoloured edge with a smallest list
// of remaining colours with the smallest available colour. Ties break on
// the smaller edge key. Throws GreedyFailure when a remaining list empties.
EdgeColouring semi_greedy(const Graph& g, const ListAssignment& l, EdgeColouring c);

// Compatible colours c1 in L(e), c2 in L(f): equal, or no blocking edge's
// list contains both. Blockers default to the edges adjacent to both e and
// f in g. Shared colours are preferred; pairs scan lexicographically.
std::optional<std::pair<int, int>> compatible_pair(const Graph& g, const ListAssignment& l,
                                                   const Edge& e, const Edge& f);
std::optional<std::pair<int, int>> compatible_pair_against(const ListAssignment& l, const Edge& e,
                                                           const Edge& f,
                                                           std::span<const Edge> blockers);

struct CycleResult {
    std::optional<EdgeColouring> colouring;
    bool impossible = false;  // odd cycle, identical lists of size two
};

// g must be a single cycle with lists of size >= 2.
CycleResult colour_cycle(const Graph& g, const ListAssignment& l);

// Three pairwise-distinct representatives, or nullopt (then the lists are
// identical of size two).
std::optional<std::array<int, 3>> colour_trident(const ColourSet& l1, const ColourSet& l2,
                                                 const ColourSet& l3);

// Cycle e1..en plus a pendant edge attached at the vertex shared by e1 and
// en. Lists >= 2 and |L(e1)| >= 3.
EdgeColouring colour_balloon(const std::vector<Edge>& cycle, const Edge& pendant,
                             const ListAssignment& l);

// Two cycles sharing exactly the vertex `shared`; the last edge of each
// (the one closing at `shared`) needs a list of size >= 4, the rest >= 2.
EdgeColouring colour_eight(const std::vector<Edge>& cycle_a, const std::vector<Edge>& cycle_b,
                           int shared, const ListAssignment& l);

// Roles "u","v1","v2","w1","w2"; u joined to everything, v's joined to
// w's. Minimum list sizes 2 (uv), 5 (uw), 3 (vw).
EdgeColouring colour_4pyramid(const Graph& g, const std::map<std::string, int>& roles,
                              const ListAssignment& l);

// Roles "u","v1".."v3","w1".."w3" for the two 12-edge cherry shapes.
EdgeColouring colour_cherry_one(const Graph& g, const std::map<std::string, int>& roles,
                                const ListAssignment& l);
EdgeColouring colour_cherry_two(const Graph& g, const std::map<std::string, int>& roles,
                                const ListAssignment& l);

// Keep only the `keep` smallest colours of each list. Colouring from a
// trimmed assignment is a colouring from the original.
ListAssignment trim_lists(const ListAssignment& l, const std::map<Edge, int>& keep);

}  // namespace listec
