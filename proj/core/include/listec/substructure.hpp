#pragma once

#include <map>
#include <optional>
#include <string>

#include "listec/decomposition.hpp"
#include "listec/graph.hpp"

namespace listec {

enum class CaseTag {
    BigW,
    Fig4A,
    Fig4B,
    Fig4C,
    Fig5,
    Pw4MinDeg3,
    Pw4MaxDeg3,
    Pw4Twins,
    Fig6,
};

std::string to_string(CaseTag tag);

using RoleMap = std::map<std::string, int>;

// The triplet (V, W, u) with its witnessing decomposition of G - W.
struct Substructure {
    VertexSet v_set;
    VertexSet w_set;
    int hub = -1;  // u
    TreeDecomposition witness;
    int witness_node = -1;  // the node whose bag contains V
};

// Conditions (a)-(h), each with a witness on failure.
ValidationReport validate_substructure(const Graph& g, const Substructure& s, int k, int l);

// Requires l >= 2k-1, every edge vw with deg(v)+deg(w) >=
// max(l,deg(v),deg(w))+2, and a valid width-<=k decomposition. For path
// decompositions the witness is a path, |N(W)| <= k, and the designated
// node is a leaf whenever the construction admits one.
Substructure find_substructure(const Graph& g, const TreeDecomposition& d, int k, int l);

// (3,7): BigW when |W| >= 4, else one of the three 12-edge shapes with a
// role map (u, v1..v3 or v1,v2,x, w1..w3).
CaseTag classify_tw3(const Graph& g, const Substructure& s, RoleMap* roles);

// (3,6) with path witness: BigW when |W| >= 3, else the Fig-5 shape.
CaseTag classify_pw3(const Graph& g, const Substructure& s, RoleMap* roles);

// (4,10) with path witness: a 4-subset W' with |N(W')| <= 4 and its case.
std::pair<CaseTag, VertexSet> classify_pw4(const Graph& g, const Substructure& s, RoleMap* roles);

bool is_three_tree(const Graph& g);

// Which catalogue 3-tree (if any) g is isomorphic to. Requires a 3-tree
// with maximum degree <= 6; nullopt means g has path-width 3.
std::optional<char> match_small_3tree(const Graph& g);

}  // namespace listec
