#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "listec/errors.hpp"

namespace listec {

// Undirected edge, stored with min endpoint first.
struct Edge {
    int u = -1;
    int v = -1;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;

    bool touches(int x) const { return u == x || v == x; }
    int other(int x) const { return x == u ? v : u; }
    bool adjacent_to(const Edge& o) const {
        return u == o.u || u == o.v || v == o.u || v == o.v;
    }
};

std::string to_string(const Edge& e);

using VertexSet = std::set<int>;
using ColourSet = std::vector<int>;  // sorted, unique
using EdgeColouring = std::map<Edge, int>;
using ListAssignment = std::map<Edge, ColourSet>;

// --- small sorted-vector set helpers -----------------------------------

bool contains(const ColourSet& s, int c);
ColourSet set_minus(const ColourSet& a, const ColourSet& b);
ColourSet set_intersect(const ColourSet& a, const ColourSet& b);
ColourSet set_union(const ColourSet& a, const ColourSet& b);
void erase_colour(ColourSet& s, int c);
void insert_colour(ColourSet& s, int c);
ColourSet iota_set(int lo, int hi);  // {lo..hi}

// --- graph ---------------------------------------------------------------

// Simple undirected graph over arbitrary non-negative integer vertex ids.
// Immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(const std::vector<int>& vertices, const std::vector<Edge>& edges);

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t size() const { return vertices_.size() + edges_.size(); }

    bool has_vertex(int v) const { return adj_.count(v) != 0; }
    bool has_edge(const Edge& e) const;
    const std::vector<int>& neighbours(int v) const;
    int degree(int v) const { return static_cast<int>(neighbours(v).size()); }
    int max_degree() const;
    std::vector<Edge> incident_edges(int v) const;

    Graph without_edge(const Edge& e) const;
    Graph without_vertices(const VertexSet& w) const;
    Graph with_added(const std::vector<int>& vertices, const std::vector<Edge>& edges) const;

private:
    std::vector<int> vertices_;              // sorted unique
    std::vector<Edge> edges_;                // sorted unique
    std::map<int, std::vector<int>> adj_;    // sorted neighbour lists
};

// N(w) over a set: all neighbours of w-vertices that are outside w.
VertexSet neighbourhood(const Graph& g, const VertexSet& w);

bool is_connected(const Graph& g);
std::vector<Graph> connected_components(const Graph& g);

// G - W (spec: induced_delete)
Graph induced_delete(const Graph& g, const VertexSet& w);

// G<W>: vertex set W u N(W), edge set E(G) \ E(G-W)
Graph boundary_graph(const Graph& g, const VertexSet& w);

// Lists of remaining colours L^C on the uncoloured edges f, given a partial
// colouring c that is proper on the rest of g.
ListAssignment remaining_lists(const Graph& g, const ListAssignment& l,
                               const EdgeColouring& c, const std::vector<Edge>& f);

// Backtracking isomorphism with degree-sequence pruning; guarded to <= 12
// vertices per side. Returns a vertex bijection g -> h, or nullopt.
std::optional<std::map<int, int>> find_isomorphism(const Graph& g, const Graph& h);

}  // namespace listec
