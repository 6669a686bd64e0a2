#include "listec/generate.hpp"

#include <algorithm>

#include "listec/catalogue.hpp"
#include "listec/rng.hpp"
#include "listec/substructure.hpp"

namespace listec {

std::optional<InstanceKind> instance_kind_from_string(const std::string& s) {
    if (s == "ktree3") return InstanceKind::KTree3;
    if (s == "sub-tw3") return InstanceKind::SubTw3;
    if (s == "pw3") return InstanceKind::Pw3;
    if (s == "pw4-ish") return InstanceKind::Pw4ish;
    return std::nullopt;
}

std::string to_string(InstanceKind k) {
    switch (k) {
        case InstanceKind::KTree3: return "ktree3";
        case InstanceKind::SubTw3: return "sub-tw3";
        case InstanceKind::Pw3: return "pw3";
        case InstanceKind::Pw4ish: return "pw4-ish";
    }
    return "?";
}

namespace {

struct Built {
    Graph graph;
    TreeDecomposition decomposition;
};

// 3-tree: K4 plus vertices joined to random triangles of the current graph.
Built build_ktree3(int n, Rng& rng) {
    require(n >= 4, "3-trees need at least 4 vertices");
    std::vector<Edge> edges{Edge(1, 2), Edge(1, 3), Edge(1, 4),
                            Edge(2, 3), Edge(2, 4), Edge(3, 4)};
    std::vector<std::array<int, 3>> triangles{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
    std::vector<int> tri_node{0, 0, 0, 0};

    TreeDecomposition d;
    d.bags.push_back({1, 2, 3, 4});
    for (int v = 5; v <= n; ++v) {
        int pick = rng.below(static_cast<int>(triangles.size()));
        auto [a, b, c] = triangles[pick];
        edges.emplace_back(v, a);
        edges.emplace_back(v, b);
        edges.emplace_back(v, c);
        std::vector<int> bag{a, b, c, v};
        std::sort(bag.begin(), bag.end());
        int node = d.node_count();
        d.bags.push_back(bag);
        d.tree_edges.emplace_back(tri_node[pick], node);
        for (auto pair : {std::array<int, 2>{a, b}, {a, c}, {b, c}}) {
            triangles.push_back({pair[0], pair[1], v});
            tri_node.push_back(node);
        }
    }
    std::vector<int> verts;
    for (int v = 1; v <= n; ++v) verts.push_back(v);
    return {Graph(verts, edges), d};
}

// Interval construction of width k: K_{k+1}, then fresh vertices joined to
// a sliding window clique of size k. Yields a path decomposition.
Built build_window(int n, int k, Rng& rng) {
    require(n >= k + 1, "window construction needs at least k+1 vertices");
    std::vector<Edge> edges;
    for (int a = 1; a <= k + 1; ++a)
        for (int b = a + 1; b <= k + 1; ++b) edges.emplace_back(a, b);
    std::vector<int> window;
    for (int a = 2; a <= k + 1; ++a) window.push_back(a);

    TreeDecomposition d;
    d.shape = TreeDecomposition::Shape::path;
    std::vector<int> first_bag;
    for (int a = 1; a <= k + 1; ++a) first_bag.push_back(a);
    d.bags.push_back(first_bag);

    for (int v = k + 2; v <= n; ++v) {
        for (int x : window) edges.emplace_back(v, x);
        std::vector<int> bag = window;
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        int node = d.node_count();
        d.bags.push_back(bag);
        d.tree_edges.emplace_back(node - 1, node);
        window[rng.below(k)] = v;
        std::sort(window.begin(), window.end());
    }
    std::vector<int> verts;
    for (int v = 1; v <= n; ++v) verts.push_back(v);
    return {Graph(verts, edges), d};
}

Graph drop_edges(const Graph& g, Rng& rng, int percent) {
    std::vector<Edge> kept;
    for (const Edge& e : g.edges())
        if (!rng.chance(percent, 100)) kept.push_back(e);
    return Graph(g.vertices(), kept);
}

ListAssignment regime_lists(const Graph& g, int l, Rng& rng) {
    int delta = std::max(1, g.max_degree());
    int universe = std::max(2 * delta, std::max(l, delta) + 1);
    ListAssignment out;
    for (const Edge& e : g.edges()) {
        int size = std::max({l, g.degree(e.u), g.degree(e.v)});
        out[e] = rng.sample(size, universe);
    }
    return out;
}

}  // namespace

GeneratedInstance generate_instance(InstanceKind kind, int n, std::uint64_t seed) {
    require(n <= 10000, "generator capped at 10^4 vertices");
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + 17);
    GeneratedInstance out;
    switch (kind) {
        case InstanceKind::KTree3: {
            Built b = build_ktree3(n, rng);
            out.graph = b.graph;
            out.decomposition = b.decomposition;
            out.regime = Regime::ThreeTree;
            int delta = b.graph.max_degree();
            int chi = delta >= 6 ? delta : catalogue_chromatic_index(*match_small_3tree(b.graph));
            int universe = 2 * std::max(delta, chi);
            for (const Edge& e : b.graph.edges()) out.lists[e] = rng.sample(chi, universe);
            return out;
        }
        case InstanceKind::SubTw3: {
            for (int tries = 0; tries < 64; ++tries) {
                Built b = build_ktree3(n, rng);
                Graph g = drop_edges(b.graph, rng, 25);
                if (g.max_degree() < 7) continue;
                out.graph = g;
                out.decomposition = b.decomposition;  // still valid for the subgraph
                out.regime = Regime::Tw3L7;
                out.lists = regime_lists(g, 7, rng);
                return out;
            }
            throw InputError("could not reach maximum degree 7; increase n");
        }
        case InstanceKind::Pw3: {
            require(n <= 24, "pw3 instances capped at 24 vertices by the decomposer guard");
            Built b = build_window(n, 3, rng);
            Graph g = drop_edges(b.graph, rng, 20);
            out.graph = g;
            out.decomposition = b.decomposition;
            out.regime = Regime::Pw3L6;
            out.lists = regime_lists(g, 6, rng);
            return out;
        }
        case InstanceKind::Pw4ish: {
            require(n <= 24, "pw4 instances capped at 24 vertices by the decomposer guard");
            Built b = build_window(n, 4, rng);
            Graph g = drop_edges(b.graph, rng, 20);
            out.graph = g;
            out.decomposition = b.decomposition;
            out.regime = Regime::Pw4L10;
            out.lists = regime_lists(g, 10, rng);
            return out;
        }
    }
    throw InputError("unknown instance kind");
}

GeneratedInstance generate_pruned(InstanceKind kind, int n, int l, std::uint64_t seed) {
    Rng rng(seed * 0x6a09e667f3bcc909ULL + 29);
    for (int tries = 0; tries < 256; ++tries) {
        Built b = kind == InstanceKind::KTree3 || kind == InstanceKind::SubTw3
                      ? build_ktree3(n, rng)
                      : build_window(n, kind == InstanceKind::Pw3 ? 3 : 4, rng);
        Graph g = drop_edges(b.graph, rng, 15);
        // peel edges violating the degree-sum condition until a fixpoint
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Edge& e : g.edges()) {
                int need = std::max({l, g.degree(e.u), g.degree(e.v)}) + 2;
                if (g.degree(e.u) + g.degree(e.v) < need) {
                    g = g.without_edge(e);
                    changed = true;
                    break;
                }
            }
        }
        if (g.edge_count() < 6) continue;
        GeneratedInstance out;
        out.graph = g;
        out.decomposition = b.decomposition;
        out.regime = kind == InstanceKind::Pw3 ? Regime::Pw3L6
                     : kind == InstanceKind::Pw4ish ? Regime::Pw4L10
                                                    : Regime::Tw3L7;
        out.lists = regime_lists(g, l, rng);
        return out;
    }
    throw InputError("pruning emptied every candidate; increase n");
}

}  // namespace listec
