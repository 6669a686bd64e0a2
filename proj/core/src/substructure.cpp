#include "listec/substructure.hpp"

#include <algorithm>
#include <deque>

#include "listec/catalogue.hpp"

namespace listec {

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::BigW: return "BIG_W";
        case CaseTag::Fig4A: return "FIG4A";
        case CaseTag::Fig4B: return "FIG4B";
        case CaseTag::Fig4C: return "FIG4C";
        case CaseTag::Fig5: return "FIG5";
        case CaseTag::Pw4MinDeg3: return "PW4_MINDEG3";
        case CaseTag::Pw4MaxDeg3: return "PW4_MAXDEG3";
        case CaseTag::Pw4Twins: return "PW4_TWINS";
        case CaseTag::Fig6: return "FIG6";
    }
    return "?";
}

ValidationReport validate_substructure(const Graph& g, const Substructure& s, int k, int l) {
    ValidationReport rep;
    auto bad = [&](const std::string& m) { rep.violations.push_back(m); };

    if (s.v_set.empty() || s.w_set.empty()) bad("V and W must be non-empty");
    if (!s.v_set.count(s.hub)) bad("u must lie in V");
    for (int v : s.v_set)
        if (s.w_set.count(v)) bad("V and W intersect at " + std::to_string(v));
    for (int v : s.v_set)
        if (!g.has_vertex(v)) bad("V contains unknown vertex " + std::to_string(v));
    for (int w : s.w_set)
        if (!g.has_vertex(w)) bad("W contains unknown vertex " + std::to_string(w));
    if (!rep.ok()) return rep;

    // (a) W stable with N(W) inside V
    for (int w1 : s.w_set)
        for (int w2 : g.neighbours(w1))
            if (s.w_set.count(w2)) bad("(a) W not stable: edge " + to_string(Edge(w1, w2)));
    for (int x : neighbourhood(g, s.w_set))
        if (!s.v_set.count(x)) bad("(a) N(W) leaves V at " + std::to_string(x));
    // (b)
    for (int w : s.w_set)
        if (!g.has_edge(Edge(w, s.hub))) bad("(b) w " + std::to_string(w) + " not adjacent to u");
    // (c)
    for (int w : s.w_set)
        if (g.degree(w) > k) bad("(c) deg(w) > k at " + std::to_string(w));
    // (d)
    if (static_cast<int>(s.v_set.size()) > k + 1) bad("(d) |V| > k+1");
    // (e)
    for (int x : g.neighbours(s.hub))
        if (!s.v_set.count(x) && !s.w_set.count(x))
            bad("(e) N(u) leaves V u W at " + std::to_string(x));
    // (f)
    if (g.degree(s.hub) < l + 2 - k) bad("(f) deg(u) < l+2-k");
    // (g)
    if (static_cast<int>(s.w_set.size()) < l + 2 - 2 * k) bad("(g) |W| < l+2-2k");
    // (h)
    Graph reduced = g.without_vertices(s.w_set);
    ValidationReport wit = validate(reduced, s.witness);
    if (!wit.ok()) bad("(h) witness invalid: " + wit.joined());
    if (s.witness.width() > k) bad("(h) witness width > k");
    if (s.witness_node < 0 || s.witness_node >= s.witness.node_count()) {
        bad("(h) designated node out of range");
    } else {
        const auto& bag = s.witness.bags[s.witness_node];
        for (int v : s.v_set)
            if (!std::binary_search(bag.begin(), bag.end(), v))
                bad("(h) V not inside the designated bag, missing " + std::to_string(v));
    }
    return rep;
}

namespace {

struct RootedView {
    std::vector<int> parent;      // per node, -1 at root
    std::vector<int> height;
    std::map<int, int> top_node;  // vertex -> t_v
};

RootedView rooted_view(const TreeDecomposition& d, const Graph& g, int root) {
    RootedView rv;
    RootedHeights rh = root_and_measure(d, g, root);
    rv.height = rh.height;
    rv.top_node = rh.top_node;
    rv.parent.assign(d.node_count(), -1);
    auto adj = d.adjacency();
    std::deque<int> queue{root};
    std::vector<bool> seen(d.node_count(), false);
    seen[root] = true;
    while (!queue.empty()) {
        int t = queue.front();
        queue.pop_front();
        for (int u : adj[t])
            if (!seen[u]) {
                seen[u] = true;
                rv.parent[u] = t;
                queue.push_back(u);
            }
    }
    return rv;
}

std::vector<int> subtree_nodes(const TreeDecomposition& d, const RootedView& rv, int t) {
    std::vector<int> out;
    auto adj = d.adjacency();
    std::deque<int> queue{t};
    std::set<int> seen{t};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        out.push_back(x);
        for (int y : adj[x])
            if (y != rv.parent[x] && !seen.count(y)) {
                seen.insert(y);
                queue.push_back(y);
            }
    }
    return out;
}

struct Construction {
    Substructure s;
    bool strict_path = false;  // |V| <= k and leaf-designated witness
};

// Shared analysis around the hub: B-vertex of maximum top-node height.
struct HubData {
    int hub = -1;
    int t_u = -1;
    VertexSet v0;         // bag of t_u
    VertexSet w;          // N(u) \ V0
    std::vector<int> leftovers;  // X \ V0 \ W, sorted
};

// vertices of degree >= k+1 ranked by top-node height (descending), ties by
// id; the first entry is the construction the proof uses, but any candidate
// producing a valid substructure is acceptable
std::vector<int> hub_candidates(const Graph& g, const RootedView& rv, int k) {
    std::vector<int> cands;
    for (int v : g.vertices())
        if (g.degree(v) >= k + 1) cands.push_back(v);
    ensure(!cands.empty(), "no vertex of degree >= k+1");
    std::stable_sort(cands.begin(), cands.end(), [&](int a, int b) {
        int ha = rv.height[rv.top_node.at(a)];
        int hb = rv.height[rv.top_node.at(b)];
        if (ha != hb) return ha > hb;
        return a < b;
    });
    return cands;
}

HubData hub_data(const Graph& g, const TreeDecomposition& d, const RootedView& rv, int hub) {
    HubData h;
    h.hub = hub;
    h.t_u = rv.top_node.at(h.hub);
    for (int x : d.bags[h.t_u]) h.v0.insert(x);
    for (int y : g.neighbours(h.hub))
        if (!h.v0.count(y)) h.w.insert(y);
    ensure(!h.w.empty(), "hub has no neighbour outside its top bag");
    VertexSet xset;
    for (int t : subtree_nodes(d, rv, h.t_u))
        for (int v : d.bags[t]) xset.insert(v);
    for (int x : xset)
        if (!h.v0.count(x) && !h.w.count(x)) h.leftovers.push_back(x);
    return h;
}

Construction build_tree(const Graph& g, const TreeDecomposition& d, const RootedView& rv,
                        int root, int hub) {
    HubData h = hub_data(g, d, rv, hub);
    // keep everything outside the open subtree below t_u
    std::set<int> dropped;
    for (int t : subtree_nodes(d, rv, h.t_u))
        if (t != h.t_u) dropped.insert(t);
    std::vector<int> remap(d.node_count(), -1);
    TreeDecomposition wit;
    for (int t = 0; t < d.node_count(); ++t) {
        if (dropped.count(t)) continue;
        remap[t] = wit.node_count();
        wit.bags.push_back(d.bags[t]);
    }
    for (auto [a, b] : d.tree_edges)
        if (remap[a] >= 0 && remap[b] >= 0) wit.tree_edges.emplace_back(remap[a], remap[b]);
    int t_u_new = remap[h.t_u];
    for (int x : h.leftovers) {
        std::vector<int> bag{x};
        for (int y : g.neighbours(x))
            if (!h.w.count(y)) bag.push_back(y);
        std::sort(bag.begin(), bag.end());
        int node = wit.node_count();
        wit.bags.push_back(bag);
        wit.tree_edges.emplace_back(t_u_new, node);
    }
    (void)root;
    Construction c;
    c.s.v_set = h.v0;
    c.s.w_set = h.w;
    c.s.hub = h.hub;
    c.s.witness = wit;
    c.s.witness_node = t_u_new;
    return c;
}

Construction build_path(const Graph& g, const TreeDecomposition& d, const RootedView& rv,
                        int root, int k, int hub) {
    HubData h = hub_data(g, d, rv, hub);
    // the path from root to t_u, then the part below
    std::vector<int> order = d.path_order();
    if (order.front() != root) std::reverse(order.begin(), order.end());
    ensure(order.front() == root, "root must be an end of the path");
    std::size_t pos = 0;
    while (order[pos] != h.t_u) ++pos;
    ensure(pos + 1 < order.size(), "hub top bag cannot be the far end");
    int t_next = order[pos + 1];

    VertexSet sep;
    for (int x : d.bags[h.t_u])
        if (std::binary_search(d.bags[t_next].begin(), d.bags[t_next].end(), x)) sep.insert(x);
    ensure(static_cast<int>(sep.size()) <= k, "separator larger than k after normalization");
    ensure(sep.count(h.hub) != 0, "hub must lie in the separator");
    for (int x : neighbourhood(g, h.w))
        ensure(sep.count(x) != 0, "N(W) must lie in the separator");

    Construction c;
    c.s.hub = h.hub;
    c.s.w_set = h.w;

    // hub neighbours inside the top bag but outside the separator bloat V
    // past k; such a vertex can instead join W when its degree is at most k
    // and its remaining neighbours already sit in the separator (its bag
    // interval ends here, so it cannot touch any W-vertex below)
    VertexSet moved;
    for (int y : g.neighbours(h.hub)) {
        if (!h.v0.count(y) || sep.count(y)) continue;
        if (g.degree(y) > k) continue;
        bool fits = true;
        for (int z : g.neighbours(y))
            if (z != h.hub && !sep.count(z)) fits = false;
        for (int z : g.neighbours(y))
            if (moved.count(z)) fits = false;
        if (fits) moved.insert(y);
    }
    for (int y : moved) c.s.w_set.insert(y);

    c.s.v_set = sep;
    for (int y : g.neighbours(h.hub))
        if (h.v0.count(y) && !moved.count(y)) c.s.v_set.insert(y);
    c.s.v_set.insert(h.hub);

    TreeDecomposition wit;
    wit.shape = TreeDecomposition::Shape::path;
    for (std::size_t i = 0; i <= pos; ++i) {
        std::vector<int> bag;
        for (int v : d.bags[order[i]])
            if (!moved.count(v)) bag.push_back(v);
        wit.bags.push_back(bag);
        if (i > 0) wit.tree_edges.emplace_back(static_cast<int>(i) - 1, static_cast<int>(i));
    }
    auto chain_bag = [&](std::vector<int> bag) {
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        int node = wit.node_count();
        wit.bags.push_back(bag);
        wit.tree_edges.emplace_back(node - 1, node);
        return node;
    };

    if (static_cast<int>(c.s.v_set.size()) <= k) {
        // V fits beside any leftover, so the tail keeps V alive all the way
        // to a dedicated leaf bag
        for (int x : h.leftovers) {
            std::vector<int> bag{x};
            bag.insert(bag.end(), c.s.v_set.begin(), c.s.v_set.end());
            chain_bag(bag);
        }
        c.s.witness_node = chain_bag(std::vector<int>(c.s.v_set.begin(), c.s.v_set.end()));
    } else if (h.leftovers.empty()) {
        c.s.witness_node = static_cast<int>(pos);  // a leaf
    } else {
        for (int x : h.leftovers) {
            std::vector<int> bag{x};
            bag.insert(bag.end(), sep.begin(), sep.end());
            chain_bag(bag);
        }
        chain_bag(std::vector<int>(sep.begin(), sep.end()));
        c.s.witness_node = static_cast<int>(pos);  // internal
    }
    c.s.witness = wit;
    auto adj = wit.adjacency();
    c.strict_path = static_cast<int>(c.s.v_set.size()) <= k &&
                    adj[c.s.witness_node].size() <= 1;
    return c;
}

}  // namespace

Substructure find_substructure(const Graph& g, const TreeDecomposition& d0, int k, int l) {
    require(l >= 2 * k - 1, "find_substructure needs l >= 2k-1");
    for (const Edge& e : g.edges()) {
        int need = std::max({l, g.degree(e.u), g.degree(e.v)}) + 2;
        if (g.degree(e.u) + g.degree(e.v) < need)
            throw ContractError("degree-sum condition fails at edge " + to_string(e));
    }
    ValidationReport rep = validate(g, d0);
    require(rep.ok(), "find_substructure needs a valid decomposition: " + rep.joined());
    require(d0.width() <= k, "decomposition width exceeds k");

    TreeDecomposition d = normalize(d0);
    bool path_mode = d.shape == TreeDecomposition::Shape::path;

    if (!path_mode) {
        RootedView rv = rooted_view(d, g, 0);
        Construction c = build_tree(g, d, rv, 0, hub_candidates(g, rv, k).front());
        ValidationReport check = validate_substructure(g, c.s, k, l);
        ensure(check.ok(), "tree substructure invalid: " + check.joined());
        return c.s;
    }

    std::vector<int> order = d.path_order();
    std::vector<int> roots{order.front(), order.back()};
    if (roots[0] > roots[1]) std::swap(roots[0], roots[1]);
    if (roots[0] == roots[1]) roots.pop_back();

    // the deepest hub with either root realizes the lemma's construction;
    // other hub candidates may still yield valid substructures, and any
    // valid one with |V| <= k and a leaf witness node is preferred
    std::optional<Construction> fallback;
    for (int root : roots) {
        RootedView rv = rooted_view(d, g, root);
        bool first_candidate = true;
        for (int hub : hub_candidates(g, rv, k)) {
            Construction c;
            try {
                c = build_path(g, d, rv, root, k, hub);
            } catch (const InvariantError&) {
                ensure(!first_candidate, "the deepest hub must yield a substructure");
                first_candidate = false;
                continue;
            }
            ValidationReport check = validate_substructure(g, c.s, k, l);
            if (first_candidate)
                ensure(check.ok(), "path substructure invalid: " + check.joined());
            first_candidate = false;
            if (!check.ok()) continue;
            if (c.strict_path) return c.s;
            if (!fallback) fallback = c;
        }
    }
    return fallback->s;
}

// ---------------------------------------------------------------------------
// classification

CaseTag classify_tw3(const Graph& g, const Substructure& s, RoleMap* roles) {
    ValidationReport rep = validate_substructure(g, s, 3, 7);
    require(rep.ok(), "classify_tw3 needs a valid (3,7)-substructure: " + rep.joined());
    if (s.w_set.size() >= 4) return CaseTag::BigW;
    ensure(s.w_set.size() == 3, "(g) guarantees |W| >= 3");
    int u = s.hub;
    ensure(g.degree(u) == 6, "|W| = 3 forces deg(u) = 6");
    std::vector<int> ws(s.w_set.begin(), s.w_set.end());
    std::vector<VertexSet> nb;
    for (int w : ws) {
        ensure(g.degree(w) == 3, "|W| = 3 forces deg(w) = 3");
        VertexSet n;
        for (int y : g.neighbours(w)) n.insert(y);
        ensure(n.count(u) != 0, "w adjacent to u");
        nb.push_back(n);
    }
    bool e01 = nb[0] == nb[1], e02 = nb[0] == nb[2], e12 = nb[1] == nb[2];

    if (e01 && e02) {
        if (roles) {
            std::vector<int> vs;
            for (int y : nb[0])
                if (y != u) vs.push_back(y);
            ensure(vs.size() == 2, "shared neighbourhood has u and two v's");
            VertexSet known(s.w_set);
            known.insert(vs[0]);
            known.insert(vs[1]);
            int extra = -1;
            for (int y : g.neighbours(u))
                if (!known.count(y)) extra = y;
            ensure(extra >= 0, "deg(u)=6 leaves one private neighbour");
            *roles = {{"u", u},     {"v1", vs[0]}, {"v2", vs[1]}, {"x", extra},
                      {"w1", ws[0]}, {"w2", ws[1]}, {"w3", ws[2]}};
        }
        return CaseTag::Fig4A;
    }
    if (e01 || e02 || e12) {
        // exactly two share a neighbourhood
        int odd = e01 ? 2 : (e02 ? 1 : 0);
        int ta = (odd == 0) ? 1 : 0;
        int tb = (odd == 2) ? 1 : 2;
        const VertexSet& shared = nb[ta];
        const VertexSet& other = nb[odd];
        int v2 = -1;
        for (int y : shared)
            if (y != u && other.count(y)) v2 = y;
        ensure(v2 >= 0, "twin and odd neighbourhoods overlap in one v");
        int v1 = -1, v3 = -1;
        for (int y : shared)
            if (y != u && y != v2) v1 = y;
        for (int y : other)
            if (y != u && y != v2) v3 = y;
        ensure(v1 >= 0 && v3 >= 0, "fig4b roles incomplete");
        if (roles)
            *roles = {{"u", u},      {"v1", v1},    {"v2", v2},    {"v3", v3},
                      {"w1", ws[ta]}, {"w2", ws[odd]}, {"w3", ws[tb]}};
        return CaseTag::Fig4B;
    }
    // pairwise distinct: the three neighbourhoods trace a 6-cycle
    {
        int w1 = ws[0];
        std::vector<int> cand;
        for (int y : nb[0])
            if (y != u) cand.push_back(y);
        ensure(cand.size() == 2, "w1 has two v-neighbours");
        for (int flip = 0; flip < 2; ++flip) {
            int v1 = flip ? cand[1] : cand[0];
            int v2 = flip ? cand[0] : cand[1];
            for (int i : {1, 2}) {
                const VertexSet& n2 = nb[i];
                const VertexSet& n3 = nb[3 - i];
                if (!n2.count(v2)) continue;
                if (!n3.count(v1)) continue;
                int v3 = -1;
                for (int y : n2)
                    if (y != u && y != v2) v3 = y;
                if (v3 < 0 || !n3.count(v3)) continue;
                if (roles)
                    *roles = {{"u", u},      {"v1", v1},   {"v2", v2},     {"v3", v3},
                              {"w1", w1},    {"w2", ws[i]}, {"w3", ws[3 - i]}};
                return CaseTag::Fig4C;
            }
        }
        throw InvariantError("pairwise distinct neighbourhoods do not form the fig4c cycle");
    }
}

CaseTag classify_pw3(const Graph& g, const Substructure& s, RoleMap* roles) {
    ValidationReport rep = validate_substructure(g, s, 3, 6);
    require(rep.ok(), "classify_pw3 needs a valid (3,6)-substructure: " + rep.joined());
    require(s.witness.shape == TreeDecomposition::Shape::path, "classify_pw3 needs a path witness");
    if (s.w_set.size() >= 3) return CaseTag::BigW;
    ensure(s.w_set.size() == 2, "(g) guarantees |W| >= 2");
    int u = s.hub;
    ensure(g.degree(u) == 5, "|W| = 2 forces deg(u) = 5");
    std::vector<int> ws(s.w_set.begin(), s.w_set.end());
    VertexSet n0, n1;
    for (int y : g.neighbours(ws[0])) n0.insert(y);
    for (int y : g.neighbours(ws[1])) n1.insert(y);
    ensure(g.degree(ws[0]) == 3 && g.degree(ws[1]) == 3, "|W| = 2 forces deg(w) = 3");
    ensure(n0 == n1, "the two w's share their neighbourhood");
    std::vector<int> vs;
    for (int y : n0)
        if (y != u) vs.push_back(y);
    ensure(vs.size() == 2, "shared neighbourhood is {v1, v2, u}");
    VertexSet known(s.w_set);
    known.insert(vs[0]);
    known.insert(vs[1]);
    int vprime = -1;
    for (int y : g.neighbours(u))
        if (!known.count(y)) vprime = y;
    ensure(vprime >= 0, "deg(u)=5 leaves one private neighbour");
    if (roles)
        *roles = {{"u", u},      {"v1", vs[0]}, {"v2", vs[1]},
                  {"vp", vprime}, {"w1", ws[0]}, {"w2", ws[1]}};
    return CaseTag::Fig5;
}

std::pair<CaseTag, VertexSet> classify_pw4(const Graph& g, const Substructure& s, RoleMap* roles) {
    ValidationReport rep = validate_substructure(g, s, 4, 10);
    require(rep.ok(), "classify_pw4 needs a valid (4,10)-substructure: " + rep.joined());
    require(s.witness.shape == TreeDecomposition::Shape::path, "classify_pw4 needs a path witness");
    ensure(neighbourhood(g, s.w_set).size() <= 4, "path construction bounds |N(W)| by 4");

    std::vector<int> ws(s.w_set.begin(), s.w_set.end());
    auto take4 = [&](auto pred) {
        VertexSet out;
        for (int w : ws) {
            if (!pred(w)) continue;
            out.insert(w);
            if (out.size() == 4) break;
        }
        return out;
    };
    VertexSet high = take4([&](int w) { return g.degree(w) >= 3; });
    if (high.size() == 4) return {CaseTag::Pw4MinDeg3, high};
    VertexSet low = take4([&](int w) { return g.degree(w) <= 3; });
    if (low.size() == 4) return {CaseTag::Pw4MaxDeg3, low};
    // two degree-2 twins
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j) {
            if (g.degree(ws[i]) != 2 || g.degree(ws[j]) != 2) continue;
            if (g.neighbours(ws[i]) != g.neighbours(ws[j])) continue;
            VertexSet out{ws[i], ws[j]};
            for (int w : ws) {
                if (out.size() == 4) break;
                out.insert(w);
            }
            if (roles) *roles = {{"twin1", ws[i]}, {"twin2", ws[j]}};
            return {CaseTag::Pw4Twins, out};
        }
    // forced: three degree-2 w's with distinct partner vertices, plus a
    // degree-4 w adjacent to all of them and to u
    int u = s.hub;
    std::vector<int> deg2, deg4;
    for (int w : ws) {
        if (g.degree(w) == 2) deg2.push_back(w);
        if (g.degree(w) == 4) deg4.push_back(w);
    }
    ensure(deg2.size() == 3 && deg4.size() == 3 && ws.size() == 6,
           "fig6 case needs the 3+3 degree profile");
    VertexSet partners;
    for (int w : deg2) {
        ensure(g.has_edge(Edge(w, u)), "degree-2 w adjacent to u");
        int other = g.neighbours(w)[0] == u ? g.neighbours(w)[1] : g.neighbours(w)[0];
        ensure(!partners.count(other), "twins were excluded");
        partners.insert(other);
    }
    int w1 = -1;
    for (int w : deg4) {
        bool full = g.has_edge(Edge(w, u));
        for (int p : partners) full = full && g.has_edge(Edge(w, p));
        if (full) { w1 = w; break; }
    }
    ensure(w1 >= 0, "fig6 case needs a degree-4 w seeing u and all partners");
    VertexSet out{w1, deg2[0], deg2[1], deg2[2]};
    if (roles) {
        std::vector<int> sorted2 = deg2;
        std::sort(sorted2.begin(), sorted2.end());
        RoleMap r{{"u", u}, {"w1", w1}};
        for (int i = 0; i < 3; ++i) {
            r["w" + std::to_string(i + 2)] = sorted2[i];
            int other = g.neighbours(sorted2[i])[0] == u ? g.neighbours(sorted2[i])[1]
                                                         : g.neighbours(sorted2[i])[0];
            r["v" + std::to_string(i + 1)] = other;
        }
        *roles = r;
    }
    return {CaseTag::Fig6, out};
}

// ---------------------------------------------------------------------------
// 3-trees

bool is_three_tree(const Graph& g) {
    if (g.vertex_count() < 4) return false;
    std::map<int, std::set<int>> adj;
    for (int v : g.vertices()) adj[v] = {};
    for (const Edge& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    while (adj.size() > 4) {
        int pick = -1;
        for (const auto& [v, nb] : adj) {
            if (nb.size() != 3) continue;
            std::vector<int> ns(nb.begin(), nb.end());
            if (adj[ns[0]].count(ns[1]) && adj[ns[0]].count(ns[2]) && adj[ns[1]].count(ns[2])) {
                pick = v;
                break;
            }
        }
        if (pick < 0) return false;
        for (int x : adj[pick]) adj[x].erase(pick);
        adj.erase(pick);
    }
    for (const auto& [v, nb] : adj)
        if (nb.size() != 3) return false;
    return true;
}

std::optional<char> match_small_3tree(const Graph& g) {
    require(is_three_tree(g), "match_small_3tree needs a 3-tree");
    require(g.max_degree() <= 6, "match_small_3tree needs maximum degree <= 6");
    for (char id : catalogue_ids()) {
        const Graph& cat = catalogue_graph(id);
        if (cat.vertex_count() != g.vertex_count() || cat.edge_count() != g.edge_count()) continue;
        if (find_isomorphism(cat, g)) return id;
    }
    return std::nullopt;
}

}  // namespace listec
