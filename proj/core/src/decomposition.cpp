#include "listec/decomposition.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <unordered_set>

namespace listec {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

std::vector<std::vector<int>> TreeDecomposition::adjacency() const {
    std::vector<std::vector<int>> adj(bags.size());
    for (auto [a, b] : tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());
    return adj;
}

bool TreeDecomposition::tree_is_path() const {
    auto adj = adjacency();
    for (const auto& nb : adj)
        if (nb.size() > 2) return false;
    return true;
}

std::vector<int> TreeDecomposition::path_order() const {
    if (bags.empty()) return {};
    auto adj = adjacency();
    int start = 0;
    for (int i = 0; i < node_count(); ++i)
        if (adj[i].size() <= 1) { start = i; break; }
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (true) {
        int next = -1;
        for (int nb : adj[cur])
            if (nb != prev) { next = nb; break; }
        if (next < 0) break;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

ValidationReport validate(const Graph& g, const TreeDecomposition& d) {
    ValidationReport rep;
    int n = d.node_count();
    if (n == 0) {
        if (g.vertex_count() > 0) rep.violations.push_back("no bags but graph has vertices");
        return rep;
    }
    // tree-ness
    if (static_cast<int>(d.tree_edges.size()) != n - 1) {
        rep.violations.push_back("tree has " + std::to_string(d.tree_edges.size()) +
                                 " edges for " + std::to_string(n) + " nodes");
        return rep;
    }
    for (auto [a, b] : d.tree_edges)
        if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
            rep.violations.push_back("bad tree edge " + std::to_string(a) + "-" + std::to_string(b));
            return rep;
        }
    {
        auto adj = d.adjacency();
        std::vector<bool> seen(n, false);
        std::deque<int> queue{0};
        seen[0] = true;
        int count = 1;
        while (!queue.empty()) {
            int t = queue.front();
            queue.pop_front();
            for (int u : adj[t])
                if (!seen[u]) {
                    seen[u] = true;
                    ++count;
                    queue.push_back(u);
                }
        }
        if (count != n) {
            rep.violations.push_back("tree is disconnected");
            return rep;
        }
    }
    if (d.shape == TreeDecomposition::Shape::path && !d.tree_is_path())
        rep.violations.push_back("shape=path but tree is not a path");

    // vertex -> host nodes index
    std::map<int, std::vector<int>> hosts;
    for (int t = 0; t < n; ++t)
        for (int v : d.bags[t]) {
            if (!g.has_vertex(v)) {
                rep.violations.push_back("bag contains unknown vertex " + std::to_string(v));
                continue;
            }
            hosts[v].push_back(t);
        }
    for (int v : g.vertices())
        if (!hosts.count(v))
            rep.violations.push_back("vertex " + std::to_string(v) + " missing from all bags");

    // edge coverage via host intersection
    for (const Edge& e : g.edges()) {
        auto hu = hosts.find(e.u);
        auto hv = hosts.find(e.v);
        bool found = false;
        if (hu != hosts.end() && hv != hosts.end()) {
            std::vector<int> common;
            std::set_intersection(hu->second.begin(), hu->second.end(), hv->second.begin(),
                                  hv->second.end(), std::back_inserter(common));
            found = !common.empty();
        }
        if (!found) rep.violations.push_back("edge " + to_string(e) + " uncovered");
    }

    // connectivity of each vertex's trace
    auto adj = d.adjacency();
    for (const auto& [v, hv] : hosts) {
        if (hv.size() <= 1) continue;
        std::set<int> hostset(hv.begin(), hv.end());
        std::set<int> reached{hv[0]};
        std::deque<int> queue{hv[0]};
        while (!queue.empty()) {
            int t = queue.front();
            queue.pop_front();
            for (int u : adj[t])
                if (hostset.count(u) && !reached.count(u)) {
                    reached.insert(u);
                    queue.push_back(u);
                }
        }
        if (reached.size() != hostset.size())
            rep.violations.push_back("trace of vertex " + std::to_string(v) + " is disconnected");
    }
    return rep;
}

TreeDecomposition normalize(const TreeDecomposition& d) {
    std::vector<std::vector<int>> bags = d.bags;
    std::vector<std::pair<int, int>> edges = d.tree_edges;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [a, b] = edges[i];
            const auto& ba = bags[a];
            const auto& bb = bags[b];
            bool a_in_b = std::includes(bb.begin(), bb.end(), ba.begin(), ba.end());
            bool b_in_a = std::includes(ba.begin(), ba.end(), bb.begin(), bb.end());
            if (!a_in_b && !b_in_a) continue;
            int gone = a_in_b ? a : b;  // drop the smaller bag
            int keep = a_in_b ? b : a;
            std::vector<std::pair<int, int>> next;
            for (std::size_t j = 0; j < edges.size(); ++j) {
                if (j == i) continue;
                auto [x, y] = edges[j];
                if (x == gone) x = keep;
                if (y == gone) y = keep;
                next.emplace_back(x, y);
            }
            // reindex: remove node `gone`
            std::vector<std::vector<int>> nbags;
            std::vector<int> remap(bags.size());
            for (std::size_t t = 0; t < bags.size(); ++t) {
                if (static_cast<int>(t) == gone) continue;
                remap[t] = static_cast<int>(nbags.size());
                nbags.push_back(bags[t]);
            }
            for (auto& [x, y] : next) {
                x = remap[x];
                y = remap[y];
            }
            bags = std::move(nbags);
            edges = std::move(next);
            changed = true;
            break;
        }
    }
    TreeDecomposition out;
    out.bags = bags;
    out.tree_edges = edges;
    out.shape = d.shape;
    return out;
}

// ---------------------------------------------------------------------------
// decompose_tw3

namespace {

struct Elimination {
    int vertex;
    std::vector<int> bag;  // vertex + its neighbours at elimination time
};

// Reduction-rule elimination. Returns eliminations in order, or nullopt if
// stuck with minimum degree >= 4.
std::optional<std::vector<Elimination>> eliminate_tw3(const Graph& g) {
    std::map<int, std::set<int>> adj;
    for (int v : g.vertices()) adj[v] = {};
    for (const Edge& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    // degree buckets keep the pick cheap: degrees 0,1,2 first (smallest
    // id), then a degree-3 vertex with an edge inside its neighbourhood,
    // then any degree-3
    std::array<std::set<int>, 4> bucket;
    auto bucket_of = [&](int v) -> std::set<int>* {
        std::size_t deg = adj.at(v).size();
        return deg <= 3 ? &bucket[deg] : nullptr;
    };
    for (const auto& [v, nb] : adj)
        if (auto* b = bucket_of(v)) b->insert(v);
    auto rebucket = [&](int v, std::size_t old_deg) {
        if (old_deg <= 3) bucket[old_deg].erase(v);
        if (auto* b = bucket_of(v)) b->insert(v);
    };

    std::vector<Elimination> order;
    while (!adj.empty()) {
        int pick = -1;
        for (int want = 0; want <= 2 && pick < 0; ++want)
            if (!bucket[want].empty()) pick = *bucket[want].begin();
        if (pick < 0) {
            int plain = -1;
            for (int v : bucket[3]) {
                const auto& nb = adj.at(v);
                if (plain < 0) plain = v;
                std::vector<int> ns(nb.begin(), nb.end());
                if (adj.at(ns[0]).count(ns[1]) || adj.at(ns[0]).count(ns[2]) ||
                    adj.at(ns[1]).count(ns[2])) {
                    pick = v;
                    break;
                }
            }
            if (pick < 0) pick = plain;
        }
        if (pick < 0) return std::nullopt;
        std::vector<int> nb(adj[pick].begin(), adj[pick].end());
        Elimination el;
        el.vertex = pick;
        el.bag = nb;
        el.bag.push_back(pick);
        std::sort(el.bag.begin(), el.bag.end());
        order.push_back(el);
        if (auto* b = bucket_of(pick)) b->erase(pick);
        for (int x : nb) {
            std::size_t old_deg = adj[x].size();
            adj[x].erase(pick);
            rebucket(x, old_deg);
        }
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                std::size_t di = adj[nb[i]].size(), dj = adj[nb[j]].size();
                if (adj[nb[i]].insert(nb[j]).second) rebucket(nb[i], di);
                if (adj[nb[j]].insert(nb[i]).second) rebucket(nb[j], dj);
            }
        adj.erase(pick);
    }
    return order;
}

// Exact treewidth <= k test via DP over eliminated subsets (n <= 14).
// Returns an elimination order or nullopt.
std::optional<std::vector<int>> exact_elimination(const Graph& g, int k) {
    int n = static_cast<int>(g.vertex_count());
    std::vector<int> verts = g.vertices();
    std::map<int, int> idx;
    for (int i = 0; i < n; ++i) idx[verts[i]] = i;
    std::vector<std::uint32_t> nbmask(n, 0);
    for (const Edge& e : g.edges()) {
        nbmask[idx[e.u]] |= 1u << idx[e.v];
        nbmask[idx[e.v]] |= 1u << idx[e.u];
    }
    // degree of v after eliminating set S: neighbours of the component of
    // G[S u {v}] containing v, minus S
    auto elim_degree = [&](int v, std::uint32_t s) {
        std::uint32_t comp = 1u << v;
        std::uint32_t frontier = comp;
        while (frontier) {
            std::uint32_t grow = 0;
            for (int i = 0; i < n; ++i)
                if (frontier & (1u << i)) grow |= nbmask[i];
            std::uint32_t inside = (grow & s) & ~comp;
            comp |= inside | (1u << v);
            frontier = inside;
        }
        std::uint32_t reach = 0;
        for (int i = 0; i < n; ++i)
            if (comp & (1u << i)) reach |= nbmask[i];
        reach &= ~s;
        reach &= ~(1u << v);
        return std::popcount(reach);
    };
    std::unordered_set<std::uint32_t> dead;
    std::vector<int> order;
    struct Rec {
        int n, k;
        std::vector<int>& order;
        std::unordered_set<std::uint32_t>& dead;
        const std::function<int(int, std::uint32_t)>& degf;
        bool go(std::uint32_t s) {
            if (std::popcount(s) == n) return true;
            if (dead.count(s)) return false;
            for (int v = 0; v < n; ++v) {
                if (s & (1u << v)) continue;
                if (degf(v, s) <= k) {
                    order.push_back(v);
                    if (go(s | (1u << v))) return true;
                    order.pop_back();
                }
            }
            dead.insert(s);
            return false;
        }
    };
    std::function<int(int, std::uint32_t)> degf = elim_degree;
    Rec rec{n, k, order, dead, degf};
    if (!rec.go(0)) return std::nullopt;
    std::vector<int> named;
    for (int i : order) named.push_back(verts[i]);
    return named;
}

TreeDecomposition decomposition_from_eliminations(const std::vector<Elimination>& order) {
    TreeDecomposition d;
    if (order.empty()) {
        d.bags.push_back({});
        return d;
    }
    std::map<int, int> elim_pos;
    for (std::size_t i = 0; i < order.size(); ++i) elim_pos[order[i].vertex] = static_cast<int>(i);
    for (const auto& el : order) d.bags.push_back(el.bag);
    for (std::size_t i = 0; i < order.size(); ++i) {
        // attach to the bag of the earliest-eliminated later neighbour
        int best = -1;
        for (int x : order[i].bag) {
            if (x == order[i].vertex) continue;
            int p = elim_pos[x];
            if (p > static_cast<int>(i) && (best < 0 || p < best)) best = p;
        }
        if (best < 0) {
            if (i + 1 < order.size()) best = static_cast<int>(i) + 1;  // isolated: chain on
        }
        if (best >= 0) d.tree_edges.emplace_back(static_cast<int>(i), best);
    }
    return d;
}

}  // namespace

std::optional<TreeDecomposition> decompose_tw3(const Graph& g) {
    if (g.vertex_count() == 0) {
        TreeDecomposition d;
        d.bags.push_back({});
        return d;
    }
    auto order = eliminate_tw3(g);
    if (order) {
        TreeDecomposition d = decomposition_from_eliminations(*order);
        if (d.width() <= 3) return d;
        return std::nullopt;  // elimination exceeded width 3 somewhere
    }
    // stuck with minimum degree >= 4; since treewidth >= degeneracy,
    // this residue proves nothing was missed only when the whole graph
    // resisted, so fall back to exact search on small graphs
    if (g.vertex_count() <= 14) {
        auto exact = exact_elimination(g, 3);
        if (!exact) return std::nullopt;
        // replay the exact order through the fill procedure
        std::map<int, std::set<int>> adj;
        for (int v : g.vertices()) adj[v] = {};
        for (const Edge& e : g.edges()) {
            adj[e.u].insert(e.v);
            adj[e.v].insert(e.u);
        }
        std::vector<Elimination> els;
        for (int v : *exact) {
            std::vector<int> nb(adj[v].begin(), adj[v].end());
            Elimination el;
            el.vertex = v;
            el.bag = nb;
            el.bag.push_back(v);
            std::sort(el.bag.begin(), el.bag.end());
            els.push_back(el);
            for (int x : nb) adj[x].erase(v);
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j) {
                    adj[nb[i]].insert(nb[j]);
                    adj[nb[j]].insert(nb[i]);
                }
            adj.erase(v);
        }
        TreeDecomposition d = decomposition_from_eliminations(els);
        return d.width() <= 3 ? std::optional<TreeDecomposition>(d) : std::nullopt;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// decompose_pw: branch and bound over vertex layouts

namespace {

struct PwSearch {
    int n, k;
    std::vector<int> verts;
    std::vector<std::uint32_t> nbmask;
    std::unordered_set<std::uint32_t> dead;
    std::vector<int> order;  // indices

    int boundary(std::uint32_t s) const {
        int b = 0;
        for (int i = 0; i < n; ++i)
            if ((s & (1u << i)) && (nbmask[i] & ~s)) ++b;
        return b;
    }

    bool go(std::uint32_t s) {
        if (std::popcount(s) == n) return true;
        if (dead.count(s)) return false;
        // forced move: a vertex with all neighbours placed never hurts
        for (int v = 0; v < n; ++v)
            if (!(s & (1u << v)) && (nbmask[v] & ~s) == 0) {
                order.push_back(v);
                if (go(s | (1u << v))) return true;
                order.pop_back();
                dead.insert(s);
                return false;
            }
        // candidates ranked by resulting boundary
        std::vector<std::pair<int, int>> cand;
        for (int v = 0; v < n; ++v) {
            if (s & (1u << v)) continue;
            std::uint32_t t = s | (1u << v);
            int b = boundary(t);
            if (b <= k) cand.emplace_back(b, v);
        }
        std::sort(cand.begin(), cand.end());
        for (auto [b, v] : cand) {
            order.push_back(v);
            if (go(s | (1u << v))) return true;
            order.pop_back();
        }
        dead.insert(s);
        return false;
    }
};

}  // namespace

std::optional<TreeDecomposition> decompose_pw(const Graph& g, int k) {
    require(k == 3 || k == 4, "decompose_pw supports k in {3,4}");
    if (g.vertex_count() == 0) {
        TreeDecomposition d;
        d.bags.push_back({});
        d.shape = TreeDecomposition::Shape::path;
        return d;
    }
    if (g.vertex_count() > 24 && !guard_override())
        throw CapacityError("decompose_pw guarded to 24 vertices");
    int n = static_cast<int>(g.vertex_count());
    PwSearch s;
    s.n = n;
    s.k = k;
    s.verts = g.vertices();
    std::map<int, int> idx;
    for (int i = 0; i < n; ++i) idx[s.verts[i]] = i;
    s.nbmask.assign(n, 0);
    for (const Edge& e : g.edges()) {
        s.nbmask[idx[e.u]] |= 1u << idx[e.v];
        s.nbmask[idx[e.v]] |= 1u << idx[e.u];
    }
    if (!s.go(0)) return std::nullopt;

    TreeDecomposition d;
    d.shape = TreeDecomposition::Shape::path;
    std::uint32_t placed = 0;
    for (int i = 0; i < n; ++i) {
        int v = s.order[i];
        std::vector<int> bag;
        for (int j = 0; j < n; ++j)
            if ((placed & (1u << j)) && (s.nbmask[j] & ~placed)) bag.push_back(s.verts[j]);
        bag.push_back(s.verts[v]);
        std::sort(bag.begin(), bag.end());
        d.bags.push_back(bag);
        if (i > 0) d.tree_edges.emplace_back(i - 1, i);
        placed |= 1u << v;
    }
    return d;
}

RootedHeights root_and_measure(const TreeDecomposition& d, const Graph& g, int root) {
    require(root >= 0 && root < d.node_count(), "root node out of range");
    ValidationReport rep = validate(g, d);
    require(rep.ok(), "root_and_measure needs a valid decomposition: " + rep.joined());
    RootedHeights rh;
    rh.height.assign(d.node_count(), -1);
    auto adj = d.adjacency();
    std::deque<int> queue{root};
    rh.height[root] = 0;
    while (!queue.empty()) {
        int t = queue.front();
        queue.pop_front();
        for (int u : adj[t])
            if (rh.height[u] < 0) {
                rh.height[u] = rh.height[t] + 1;
                queue.push_back(u);
            }
    }
    for (int t = 0; t < d.node_count(); ++t)
        for (int v : d.bags[t]) {
            auto it = rh.top_node.find(v);
            if (it == rh.top_node.end() || rh.height[t] < rh.height[it->second])
                rh.top_node[v] = t;
        }
    for (int v : g.vertices())
        ensure(rh.top_node.count(v) != 0, "vertex missing from decomposition");
    return rh;
}

bool check_cutset(const Graph& g, const TreeDecomposition& d, std::pair<int, int> tree_edge) {
    auto [t1, t2] = tree_edge;
    bool found = false;
    for (auto [a, b] : d.tree_edges)
        if ((a == t1 && b == t2) || (a == t2 && b == t1)) found = true;
    require(found, "not a tree edge");

    std::vector<int> sep;
    std::set_intersection(d.bags[t1].begin(), d.bags[t1].end(), d.bags[t2].begin(),
                          d.bags[t2].end(), std::back_inserter(sep));
    VertexSet sepset(sep.begin(), sep.end());

    // bag unions of the two components of T - t1t2
    auto adj = d.adjacency();
    std::vector<int> side(d.node_count(), 0);
    std::deque<int> queue{t1};
    side[t1] = 1;
    while (!queue.empty()) {
        int t = queue.front();
        queue.pop_front();
        for (int u : adj[t]) {
            if ((t == t1 && u == t2) || (t == t2 && u == t1)) continue;
            if (!side[u]) {
                side[u] = 1;
                queue.push_back(u);
            }
        }
    }
    VertexSet a_side, b_side;
    for (int t = 0; t < d.node_count(); ++t)
        for (int v : d.bags[t])
            (side[t] ? a_side : b_side).insert(v);
    VertexSet a_only, b_only;
    for (int v : a_side)
        if (!sepset.count(v)) a_only.insert(v);
    for (int v : b_side)
        if (!sepset.count(v)) b_only.insert(v);
    if (a_only.empty() || b_only.empty()) return true;

    // BFS in g - sep from a_only
    std::set<int> seen;
    std::deque<int> q2(a_only.begin(), a_only.end());
    for (int v : a_only) seen.insert(v);
    while (!q2.empty()) {
        int v = q2.front();
        q2.pop_front();
        if (b_only.count(v)) return false;
        for (int w : g.neighbours(v))
            if (!sepset.count(w) && !seen.count(w)) {
                seen.insert(w);
                q2.push_back(w);
            }
    }
    return true;
}

}  // namespace listec
