#pragma once

#include <vector>

#include "listec/graph.hpp"
#include "listec/oracle.hpp"
#include "listec/rng.hpp"

namespace listec::testing {

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> verts;
    for (int v = 1; v <= n; ++v) verts.push_back(v);
    std::vector<Edge> edges;
    for (auto [a, b] : pairs) edges.emplace_back(a, b);
    return Graph(verts, edges);
}

inline Graph k4() { return make_graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i) pairs.emplace_back(i, i % n + 1);
    return make_graph(n, pairs);
}

inline Graph path(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i < n; ++i) pairs.emplace_back(i, i + 1);
    return make_graph(n, pairs);
}

inline ListAssignment uniform_lists(const Graph& g, const ColourSet& s) {
    ListAssignment out;
    for (const Edge& e : g.edges()) out[e] = s;
    return out;
}

inline ListAssignment random_lists(const Graph& g, int size, int universe, Rng& rng) {
    ListAssignment out;
    for (const Edge& e : g.edges()) out[e] = rng.sample(size, universe);
    return out;
}

// random lists at exactly the given per-edge minimum sizes
inline ListAssignment random_min_lists(const Graph& g, const std::map<Edge, int>& mins,
                                       int universe, Rng& rng) {
    ListAssignment out;
    for (const Edge& e : g.edges()) out[e] = rng.sample(mins.at(e), universe);
    return out;
}

inline bool proper_and_listed(const Graph& g, const ListAssignment& l, const EdgeColouring& c) {
    return verify_colouring(g, l, c).ok();
}

}  // namespace listec::testing
