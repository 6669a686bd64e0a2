#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "listec/graph.hpp"
#include "listec/oracle.hpp"

namespace listec {

// Tree of bags; nodes are dense 0..n-1, bags are sorted vertex lists.
struct TreeDecomposition {
    enum class Shape { tree, path };

    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> tree_edges;
    std::optional<int> root;
    Shape shape = Shape::tree;

    int node_count() const { return static_cast<int>(bags.size()); }
    int width() const;
    std::vector<std::vector<int>> adjacency() const;
    bool tree_is_path() const;
    // for shape=path: nodes in path order (an end first)
    std::vector<int> path_order() const;
};

// Checks the three decomposition axioms plus tree-ness; violations carry a
// witness. Empty report <=> valid.
ValidationReport validate(const Graph& g, const TreeDecomposition& d);

// Merge adjacent bags where one contains the other. Keeps shape.
TreeDecomposition normalize(const TreeDecomposition& d);

// Width <= 3 decomposition via reduction-rule elimination, with an
// exhaustive elimination-order fallback for graphs of <= 14 vertices.
std::optional<TreeDecomposition> decompose_tw3(const Graph& g);

// Width <= k path decomposition (k in {3,4}) by branch and bound over
// vertex layouts with memoized frontier states. Guarded to 24 vertices.
std::optional<TreeDecomposition> decompose_pw(const Graph& g, int k);

struct RootedHeights {
    std::vector<int> height;      // per node
    std::map<int, int> top_node;  // graph vertex -> node t_v of minimum height
};

RootedHeights root_and_measure(const TreeDecomposition& d, const Graph& g, int root);

// True iff V_{t1} n V_{t2} separates the two sides' bag unions (or one
// side's vertices all lie in the separator).
bool check_cutset(const Graph& g, const TreeDecomposition& d, std::pair<int, int> tree_edge);

}  // namespace listec
