#include "listec/bipartite.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

#include "listec/oracle.hpp"

namespace listec {

Bipartition bipartition_with_w(const Graph& g, const VertexSet& w) {
    Bipartition b;
    b.side_w = w;
    for (int v : g.vertices())
        if (!w.count(v)) b.side_v.insert(v);
    return b;
}

void check_bipartition(const Graph& g, const Bipartition& b) {
    for (int v : b.side_v)
        require(!b.side_w.count(v), "bipartition sides intersect at " + std::to_string(v));
    for (int v : g.vertices())
        require(b.side_v.count(v) || b.side_w.count(v),
                "vertex " + std::to_string(v) + " on neither side");
    for (const Edge& e : g.edges()) {
        bool uw = b.side_w.count(e.u) != 0;
        bool vw = b.side_w.count(e.v) != 0;
        require(uw != vw, "edge " + to_string(e) + " does not cross the bipartition");
    }
}

bool is_v_dominated(const Graph& g, const Bipartition& b, const ListAssignment& l) {
    for (const Edge& e : g.edges()) {
        int v = b.side_v.count(e.u) ? e.u : e.v;
        auto it = l.find(e);
        if (it == l.end() || static_cast<int>(it->second.size()) < g.degree(v)) return false;
    }
    return true;
}

namespace {

int v_end(const Edge& e, const Bipartition& b) { return b.side_v.count(e.u) ? e.u : e.v; }
int w_end(const Edge& e, const Bipartition& b) { return b.side_w.count(e.u) ? e.u : e.v; }

void check_reference(const Graph& g, const EdgeColouring& ref) {
    for (const Edge& e : g.edges())
        require(ref.count(e), "reference colouring misses edge " + to_string(e));
    for (const Edge& e : g.edges())
        for (int x : {e.u, e.v})
            for (int y : g.neighbours(x)) {
                Edge f(x, y);
                if (f == e) continue;
                require(ref.at(f) != ref.at(e),
                        "reference colouring improper at " + to_string(e) + "/" + to_string(f));
            }
}

}  // namespace

EdgeColouring galvin_colour(const Graph& g, const Bipartition& b,
                            const ListAssignment& l, const EdgeColouring& ref) {
    check_bipartition(g, b);
    check_reference(g, ref);

    // Slivnik bound; this also fixes the orientation convention: at the
    // V end higher reference colours dominate, at the W end lower ones.
    for (const Edge& e : g.edges()) {
        int v = v_end(e, b), w = w_end(e, b);
        int d = 0;
        for (int y : g.neighbours(v)) {
            Edge f(v, y);
            if (!(f == e) && ref.at(f) > ref.at(e)) ++d;
        }
        for (int y : g.neighbours(w)) {
            Edge f(w, y);
            if (!(f == e) && ref.at(f) < ref.at(e)) ++d;
        }
        auto it = l.find(e);
        require(it != l.end(), "no list for edge " + to_string(e));
        if (static_cast<int>(it->second.size()) < d + 1)
            throw ContractError("slivnik bound violated at edge " + to_string(e) + ": list " +
                                std::to_string(it->second.size()) + " < " + std::to_string(d + 1));
    }

    ColourSet colours;
    for (const Edge& e : g.edges()) colours = set_union(colours, l.at(e));

    ListAssignment rem = l;
    EdgeColouring out;
    for (int gamma : colours) {
        // edges still holding gamma
        std::vector<Edge> holding;
        for (const Edge& e : g.edges())
            if (!out.count(e) && contains(rem.at(e), gamma)) holding.push_back(e);
        if (holding.empty()) continue;

        // kernel as a stable matching: W proposes in ascending reference
        // colour, V holds the proposal with the highest reference colour
        std::map<int, std::vector<Edge>> proposals;
        for (const Edge& e : holding) proposals[w_end(e, b)].push_back(e);
        for (auto& [w, es] : proposals)
            std::sort(es.begin(), es.end(),
                      [&](const Edge& a, const Edge& c) { return ref.at(a) < ref.at(c); });
        std::map<int, std::size_t> next;
        std::map<int, Edge> held;  // v -> edge
        std::deque<int> free;
        for (const auto& [w, es] : proposals) free.push_back(w);
        while (!free.empty()) {
            int w = free.front();
            free.pop_front();
            auto& es = proposals[w];
            std::size_t& i = next[w];
            while (i < es.size()) {
                Edge e = es[i];
                ++i;
                int v = v_end(e, b);
                auto it = held.find(v);
                if (it == held.end()) {
                    held.emplace(v, e);
                    break;
                }
                if (ref.at(e) > ref.at(it->second)) {
                    int loser = w_end(it->second, b);
                    it->second = e;
                    free.push_back(loser);
                    break;
                }
            }
        }
        for (const auto& [v, e] : held) {
            out[e] = gamma;
            for (int x : {e.u, e.v})
                for (int y : g.neighbours(x)) {
                    Edge f(x, y);
                    if (!(f == e) && !out.count(f)) erase_colour(rem[f], gamma);
                }
        }
    }
    ensure(out.size() == g.edge_count(), "galvin_colour left edges uncoloured");
    return out;
}

EdgeColouring bipartite_delta_colouring(const Graph& g) {
    int delta = g.max_degree();
    std::map<int, std::map<int, int>> at;  // vertex -> colour -> other end
    for (int v : g.vertices()) at[v] = {};
    EdgeColouring out;
    auto free_colour = [&](int v) {
        for (int c = 1; c <= delta; ++c)
            if (!at[v].count(c)) return c;
        throw InvariantError("no free colour at vertex " + std::to_string(v));
    };
    for (const Edge& e : g.edges()) {
        int a = free_colour(e.u);
        int bcol = free_colour(e.v);
        if (a != bcol && at[e.v].count(a)) {
            // flip the a/b alternating path from e.v; it cannot end at e.u
            // since both ends of such a path would lie on one side
            std::vector<std::pair<Edge, int>> path;  // edge, old colour
            int cur = e.v, want = a;
            while (at[cur].count(want)) {
                int nxt = at[cur].at(want);
                path.emplace_back(Edge(cur, nxt), want);
                cur = nxt;
                want = (want == a) ? bcol : a;
            }
            for (const auto& [pe, oc] : path) {
                at[pe.u].erase(oc);
                at[pe.v].erase(oc);
            }
            for (const auto& [pe, oc] : path) {
                int nc = (oc == a) ? bcol : a;
                at[pe.u][nc] = pe.v;
                at[pe.v][nc] = pe.u;
                out[pe] = nc;
            }
        }
        int use = at[e.v].count(a) ? bcol : a;
        ensure(!at[e.u].count(use) && !at[e.v].count(use), "alternating path flip failed");
        at[e.u][use] = e.v;
        at[e.v][use] = e.u;
        out[e] = use;
    }
    return out;
}

std::optional<std::vector<Edge>> find_2regular_spanning(const Graph& g, const Bipartition& b) {
    check_bipartition(g, b);
    if ((b.side_v.size() > 10 || b.side_w.size() > 10) && !guard_override())
        throw CapacityError("find_2regular_spanning guarded to 10 vertices per side");
    for (int v : g.vertices())
        require(g.degree(v) >= 2, "find_2regular_spanning needs minimum degree 2");

    const std::vector<Edge>& es = g.edges();
    int m = static_cast<int>(es.size());
    std::map<int, int> want;  // remaining degree needed
    std::map<int, int> avail; // undecided incident edges
    for (int v : g.vertices()) {
        want[v] = 2;
        avail[v] = g.degree(v);
    }
    std::vector<Edge> chosen;
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == m) {
            for (const auto& [v, k] : want)
                if (k != 0) return false;
            return true;
        }
        const Edge& e = es[i];
        // include
        if (want[e.u] > 0 && want[e.v] > 0) {
            want[e.u]--; want[e.v]--; avail[e.u]--; avail[e.v]--;
            chosen.push_back(e);
            if (rec(i + 1)) return true;
            chosen.pop_back();
            want[e.u]++; want[e.v]++; avail[e.u]++; avail[e.v]++;
        }
        // exclude
        avail[e.u]--; avail[e.v]--;
        bool ok = avail[e.u] >= want[e.u] && avail[e.v] >= want[e.v];
        if (ok && rec(i + 1)) return true;
        avail[e.u]++; avail[e.v]++;
        return false;
    };
    if (rec(0)) return chosen;
    return std::nullopt;
}

namespace {

// Canonical colouring built on the lists {1..deg(v)}: the 2-factor h gets
// colours 1 and 2, the leftover V-centred stars are finished greedily.
EdgeColouring canonical_two_regular(const Graph& g, const Bipartition& b,
                                    const std::vector<Edge>& h) {
    std::map<int, std::vector<int>> hadj;
    for (const Edge& e : h) {
        hadj[e.u].push_back(e.v);
        hadj[e.v].push_back(e.u);
    }
    for (const auto& [v, nb] : hadj)
        ensure(nb.size() == 2, "subgraph is not 2-regular at " + std::to_string(v));
    // every active V-vertex must be covered; W-vertices may stay out only
    // when they have at most one edge in total
    for (int v : b.side_v)
        ensure(g.degree(v) == 0 || hadj.count(v), "V-vertex not covered by the 2-factor");
    for (int w : b.side_w)
        ensure(hadj.count(w) || g.degree(w) <= 1,
               "W-vertex of degree >= 2 not covered by the 2-factor");

    EdgeColouring c0;
    std::set<int> visited;
    for (const Edge& start : h) {
        if (visited.count(start.u)) continue;
        int first = start.u;
        std::vector<int> cycle{first};
        int prev = first;
        int cur = std::min(hadj[first][0], hadj[first][1]);
        while (cur != first) {
            cycle.push_back(cur);
            int nxt = (hadj[cur][0] == prev) ? hadj[cur][1] : hadj[cur][0];
            prev = cur;
            cur = nxt;
        }
        ensure(cycle.size() % 2 == 0, "odd cycle in a bipartite 2-factor");
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            c0[Edge(cycle[i], cycle[(i + 1) % cycle.size()])] = static_cast<int>(i % 2) + 1;
            visited.insert(cycle[i]);
        }
    }
    for (const Edge& e : h) ensure(c0.count(e) != 0, "cycle walk missed an h-edge");

    std::set<Edge> hset(h.begin(), h.end());
    for (int v : b.side_v) {
        ColourSet used;
        for (int y : g.neighbours(v)) {
            Edge e(v, y);
            auto it = c0.find(e);
            if (it != c0.end()) insert_colour(used, it->second);
        }
        for (int y : g.neighbours(v)) {
            Edge e(v, y);
            if (hset.count(e)) continue;
            int pick = -1;
            for (int c = 1; c <= g.degree(v); ++c)
                if (!contains(used, c)) { pick = c; break; }
            ensure(pick > 0, "canonical star colouring stuck at " + to_string(e));
            c0[e] = pick;
            insert_colour(used, pick);
        }
    }
    return c0;
}

}  // namespace

EdgeColouring colour_via_2regular(const Graph& g, const Bipartition& b,
                                  const ListAssignment& l, const std::vector<Edge>& h) {
    check_bipartition(g, b);
    for (int w : b.side_w)
        require(g.degree(w) <= 3, "colour_via_2regular needs deg(w) <= 3");
    require(is_v_dominated(g, b, l), "colour_via_2regular needs V-dominated lists");
    return galvin_colour(g, b, l, canonical_two_regular(g, b, h));
}

// ---------------------------------------------------------------------------
// subset ladders

namespace {

Graph active_subgraph(const Graph& g, Bipartition& b) {
    std::vector<int> verts;
    for (int v : g.vertices())
        if (g.degree(v) > 0) verts.push_back(v);
    Bipartition nb;
    for (int v : verts)
        (b.side_v.count(v) ? nb.side_v : nb.side_w).insert(v);
    b = nb;
    return Graph(verts, g.edges());
}

SubsetChoice choose_small(const Graph& g, const Bipartition& b);

SubsetChoice k33_ladder(const Graph& g, const Bipartition& b) {
    // (1) a w with at most one incident edge is trivially handled alone
    for (int w : b.side_w)
        if (g.degree(w) <= 1) return {{w}, "degree<=1 w"};
    // (2) a degree-1 v: drop its neighbour; the rest is a 4-cycle
    for (int v : b.side_v)
        if (g.degree(v) == 1) {
            int w = g.neighbours(v)[0];
            VertexSet rest;
            for (int x : b.side_w)
                if (x != w) rest.insert(x);
            return {rest, "degree-1 v"};
        }
    int active_v = 0;
    for (int v : b.side_v)
        if (g.degree(v) > 0) ++active_v;
    // (3) fewer than 3 active v's: any two w's induce a 4-cycle
    if (active_v < 3) {
        VertexSet two;
        for (int w : b.side_w) {
            two.insert(w);
            if (two.size() == 2) break;
        }
        return {two, "small V"};
    }
    // (4) minimum degree 2 now; dispatch by edge count
    std::size_t m = g.edge_count();
    switch (m) {
        case 6: return {b.side_w, "6-edge cycle"};
        case 7: return {b.side_w, "7 edges"};
        case 8: return {b.side_w, "8 edges"};
        case 9: return {b.side_w, "K33"};
        default: throw InvariantError("k33 ladder: unexpected edge count " + std::to_string(m));
    }
}

SubsetChoice choose_small(const Graph& g, const Bipartition& b) {
    std::size_t nw = b.side_w.size();
    if (nw == 1) {
        int w = *b.side_w.begin();
        ensure(g.degree(w) <= 1, "singleton W with degree > 1 is not choosable");
        return {{w}, "degree<=1 w"};
    }
    if (nw == 2) {
        for (int w : b.side_w)
            if (g.degree(w) <= 1) return {{w}, "degree<=1 w"};
        return {b.side_w, "4-cycle"};  // both degree 2 on <= 2 v's
    }
    return k33_ladder(g, b);
}

std::pair<Graph, Bipartition> boundary_with_sides(const Graph& g, const VertexSet& wsub) {
    Graph sub = boundary_graph(g, wsub);
    Bipartition b;
    b.side_w = wsub;
    for (int v : sub.vertices())
        if (!wsub.count(v)) b.side_v.insert(v);
    return {sub, b};
}

bool side_respecting_iso(const Graph& g, const Bipartition& bg, const Graph& h,
                         const VertexSet& hw, std::map<int, int>& out) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    if (bg.side_w.size() != hw.size()) return false;
    std::vector<int> gv = g.vertices();
    std::map<int, int> fwd;
    std::set<int> used;
    std::function<bool(std::size_t)> rec = [&](std::size_t idx) -> bool {
        if (idx == gv.size()) return true;
        int v = gv[idx];
        bool v_on_w = bg.side_w.count(v) != 0;
        for (int cand : h.vertices()) {
            if (used.count(cand)) continue;
            if ((hw.count(cand) != 0) != v_on_w) continue;
            if (h.degree(cand) != g.degree(v)) continue;
            bool ok = true;
            for (const auto& [x, y] : fwd)
                if (g.has_edge(Edge(v, x)) != h.has_edge(Edge(cand, y))) { ok = false; break; }
            if (!ok) continue;
            fwd[v] = cand;
            used.insert(cand);
            if (rec(idx + 1)) return true;
            fwd.erase(v);
            used.erase(cand);
        }
        return false;
    };
    if (rec(0)) {
        out = fwd;
        return true;
    }
    return false;
}

}  // namespace

SubsetChoice choose_subset_k33(const Graph& g, const Bipartition& b) {
    check_bipartition(g, b);
    require(b.side_w.size() == 3, "choose_subset_k33 needs |W| = 3");
    require(b.side_v.size() <= 3, "choose_subset_k33 needs |V| <= 3");
    return k33_ladder(g, b);
}

std::optional<SubsetChoice> choose_subset_k44(const Graph& g, const Bipartition& b) {
    check_bipartition(g, b);
    require(b.side_w.size() == 4, "choose_subset_k44 needs |W| = 4");
    require(b.side_v.size() <= 4, "choose_subset_k44 needs |V| <= 4");
    for (int w : b.side_w)
        require(g.degree(w) <= 3, "choose_subset_k44 needs deg(w) <= 3");

    for (int w : b.side_w)
        if (g.degree(w) <= 1) return SubsetChoice{{w}, "degree<=1 w"};

    int active_v = 0;
    for (int v : b.side_v)
        if (g.degree(v) > 0) ++active_v;
    if (active_v <= 3) {
        VertexSet w3;
        for (int w : b.side_w) {
            w3.insert(w);
            if (w3.size() == 3) break;
        }
        auto [sub, sb] = boundary_with_sides(g, w3);
        return choose_small(sub, sb);
    }

    // a proper subset that does not expand routes to the small ladders
    std::vector<int> ws(b.side_w.begin(), b.side_w.end());
    for (int size = 1; size <= 3; ++size) {
        std::vector<int> pick;
        std::function<std::optional<SubsetChoice>(std::size_t)> scan =
            [&](std::size_t start) -> std::optional<SubsetChoice> {
            if (static_cast<int>(pick.size()) == size) {
                VertexSet wsub(pick.begin(), pick.end());
                if (neighbourhood(g, wsub).size() <= wsub.size()) {
                    auto [sub, sb] = boundary_with_sides(g, wsub);
                    return choose_small(sub, sb);
                }
                return std::nullopt;
            }
            for (std::size_t i = start; i < ws.size(); ++i) {
                pick.push_back(ws[i]);
                auto r = scan(i + 1);
                if (r) return r;
                pick.pop_back();
            }
            return std::nullopt;
        };
        auto r = scan(0);
        if (r) return r;
    }

    for (int v : b.side_v)
        if (g.degree(v) == 1) {
            int w = g.neighbours(v)[0];
            VertexSet rest;
            for (int x : b.side_w)
                if (x != w) rest.insert(x);
            auto [sub, sb] = boundary_with_sides(g, rest);
            return choose_small(sub, sb);
        }

    // minimum degree 2 everywhere; either a 2-factor exists or this is the
    // exceptional graph
    auto h = find_2regular_spanning(g, b);
    if (h) return SubsetChoice{b.side_w, "2-factor"};
    std::map<int, int> iso;
    VertexSet f11w;
    for (int v : fig11_graph().vertices())
        if (v >= 4) f11w.insert(v);
    ensure(side_respecting_iso(g, b, fig11_graph(), f11w, iso),
           "no 2-factor and not the exceptional graph");
    return std::nullopt;
}

EdgeColouring colour_k44_mindeg3(const Graph& g, const Bipartition& b, int hub,
                                 const ListAssignment& l) {
    check_bipartition(g, b);
    require(b.side_w.size() == 4, "colour_k44_mindeg3 needs |W| = 4");
    require(b.side_v.count(hub) != 0, "hub must lie on side V");
    for (int w : b.side_w)
        require(g.degree(w) >= 3, "colour_k44_mindeg3 needs deg(w) >= 3");
    require(is_v_dominated(g, b, l), "colour_k44_mindeg3 needs V-dominated lists");

    int active_v = 0;
    for (int v : b.side_v)
        if (g.degree(v) > 0) ++active_v;
    if (active_v < 4) {
        // every w sees all of V, so every list has size >= deg(v) = |W| = Delta
        return galvin_colour(g, b, l, bipartite_delta_colouring(g));
    }

    std::vector<int> x4;  // 4-vertices of V
    for (int v : b.side_v)
        if (g.degree(v) == 4) x4.push_back(v);
    if (x4.empty()) {
        auto h = find_2regular_spanning(g, b);
        ensure(h.has_value(), "3-regular bipartite graph without a 2-factor");
        return colour_via_2regular(g, b, l, *h);
    }

    // match the 4-vertices of V to the largest-degree w's, top colour 4
    std::vector<int> ys(b.side_w.begin(), b.side_w.end());
    std::sort(ys.begin(), ys.end(), [&](int a, int c) {
        if (g.degree(a) != g.degree(c)) return g.degree(a) > g.degree(c);
        return a < c;
    });
    EdgeColouring c0;
    VertexSet matched;
    std::vector<Edge> m;
    for (std::size_t i = 0; i < x4.size(); ++i) {
        Edge e(x4[i], ys[i]);  // deg-4 v is adjacent to all of W
        ensure(g.has_edge(e), "expected 4-vertex adjacent to every w");
        c0[e] = 4;
        m.push_back(e);
    }
    Graph rest = g;
    for (const Edge& e : m) rest = rest.without_edge(e);
    auto h = find_2regular_spanning(rest, b);
    ensure(h.has_value(), "residue after matching has no 2-factor");
    EdgeColouring inner = canonical_two_regular(rest, b, *h);
    for (const auto& [e, c] : inner) c0[e] = c;
    return galvin_colour(g, b, l, c0);
}

VChoosableResult v_choosable_colour(const Graph& g, const Bipartition& b,
                                    const ListAssignment& l) {
    check_bipartition(g, b);
    require(is_v_dominated(g, b, l), "v_choosable_colour needs V-dominated lists");
    VChoosableResult res;
    if (g.edge_count() == 0) {
        res.colouring = EdgeColouring{};
        return res;
    }
    Bipartition ab = b;
    Graph act = active_subgraph(g, ab);

    int max_w = 0, min_deg = 1 << 20;
    for (int w : ab.side_w) max_w = std::max(max_w, act.degree(w));
    for (int v : act.vertices()) min_deg = std::min(min_deg, act.degree(v));

    if (max_w <= 1) {
        // stars with centres in V
        EdgeColouring out;
        for (int v : ab.side_v) {
            ColourSet used;
            for (int y : act.neighbours(v)) {
                Edge e(v, y);
                ColourSet avail = set_minus(l.at(e), used);
                ensure(!avail.empty(), "star route stuck at " + to_string(e));
                out[e] = avail.front();
                insert_colour(used, avail.front());
            }
        }
        res.colouring = out;
        return res;
    }

    if (max_w <= 3 && min_deg >= 2) {
        auto h = find_2regular_spanning(act, ab);
        if (h) {
            res.colouring = colour_via_2regular(act, ab, l, *h);
            return res;
        }
    }

    if (ab.side_w.size() == 4 && !ab.side_v.empty()) {
        bool all3 = true;
        for (int w : ab.side_w)
            if (act.degree(w) < 3) all3 = false;
        if (all3) {
            res.colouring = colour_k44_mindeg3(act, ab, *ab.side_v.begin(), l);
            return res;
        }
    }

    // uniform slack: every list at least the maximum degree
    bool big = true;
    int delta = act.max_degree();
    for (const Edge& e : act.edges())
        if (static_cast<int>(l.at(e).size()) < delta) big = false;
    if (big) {
        res.colouring = galvin_colour(act, ab, l, bipartite_delta_colouring(act));
        return res;
    }

    std::map<int, int> iso;
    VertexSet f11w;
    for (int v : fig11_graph().vertices())
        if (v >= 4) f11w.insert(v);
    if (side_respecting_iso(act, ab, fig11_graph(), f11w, iso)) {
        res.exceptional = true;
        res.exception_isomorphism = iso;
        return res;
    }
    throw InvariantError("v_choosable_colour: no applicable route");
}

// ---------------------------------------------------------------------------
// fixed shapes

const Graph& fig11_graph() {
    static const Graph g(
        {0, 1, 2, 3, 4, 5, 6, 7},
        {Edge(0, 4), Edge(0, 5), Edge(1, 4), Edge(1, 6), Edge(2, 4), Edge(2, 7), Edge(3, 5),
         Edge(3, 6), Edge(3, 7)});
    return g;
}

namespace {

struct CherryShape {
    // role -> adjacent roles
    std::vector<std::pair<std::string, std::string>> edges = {
        {"u", "w1"}, {"u", "w2"}, {"u", "w3"}, {"v1", "w1"}, {"v1", "w3"},
        {"v2", "w1"}, {"v2", "w2"}, {"v3", "w2"}, {"v3", "w3"}};
    std::map<std::pair<std::string, std::string>, int> minima = {
        {{"u", "w1"}, 4}, {{"u", "w2"}, 4}, {{"u", "w3"}, 3},
        {{"v1", "w1"}, 2}, {{"v1", "w3"}, 2}, {{"v2", "w1"}, 3},
        {{"v2", "w2"}, 2}, {{"v3", "w2"}, 2}, {{"v3", "w3"}, 2}};
    std::map<std::pair<std::string, std::string>, int> reference = {
        {{"u", "w1"}, 2}, {{"u", "w2"}, 3}, {{"u", "w3"}, 4},
        {{"v1", "w1"}, 1}, {{"v1", "w3"}, 2}, {{"v2", "w1"}, 3},
        {{"v2", "w2"}, 1}, {{"v3", "w2"}, 2}, {{"v3", "w3"}, 1}};
};

const CherryShape& cherry_shape() {
    static const CherryShape s;
    return s;
}

}  // namespace

const std::map<std::pair<std::string, std::string>, int>& cherry_bipartite_minima() {
    return cherry_shape().minima;
}

void fig8_selftest() {
    static std::once_flag flag;
    std::call_once(flag, [] {
        const CherryShape& s = cherry_shape();
        std::map<std::string, int> id = {{"u", 0}, {"v1", 1}, {"v2", 2}, {"v3", 3},
                                         {"w1", 4}, {"w2", 5}, {"w3", 6}};
        std::vector<Edge> es;
        for (const auto& [a, b] : s.edges) es.emplace_back(id[a], id[b]);
        Graph g({0, 1, 2, 3, 4, 5, 6}, es);
        Bipartition b{{0, 1, 2, 3}, {4, 5, 6}};
        EdgeColouring ref;
        ListAssignment minimal;
        for (const auto& [a, c] : s.edges) {
            Edge e(id.at(a), id.at(c));
            ref[e] = s.reference.at({a, c});
            minimal[e] = iota_set(1, s.minima.at({a, c}));
        }
        check_reference(g, ref);
        // the printed minimum sizes must meet the Slivnik bound exactly
        for (const Edge& e : g.edges()) {
            int v = v_end(e, b), w = w_end(e, b);
            int d = 0;
            for (int y : g.neighbours(v))
                if (!(Edge(v, y) == e) && ref.at(Edge(v, y)) > ref.at(e)) ++d;
            for (int y : g.neighbours(w))
                if (!(Edge(w, y) == e) && ref.at(Edge(w, y)) < ref.at(e)) ++d;
            ensure(static_cast<int>(minimal.at(e).size()) >= d + 1,
                   "fig8 self-test: bound fails at " + to_string(e));
        }
        EdgeColouring c = galvin_colour(g, b, minimal, ref);
        ensure(verify_colouring(g, minimal, c).ok(), "fig8 self-test colouring invalid");
    });
}

EdgeColouring colour_cherry_bipartite(const Graph& g, const std::map<std::string, int>& roles,
                                      const ListAssignment& l) {
    fig8_selftest();
    const CherryShape& s = cherry_shape();
    require(roles.size() == 7, "cherry bipartite needs 7 roles");
    // shape and list minima
    std::vector<Edge> shape_edges;
    for (const auto& [a, c] : s.edges) {
        Edge e(roles.at(a), roles.at(c));
        require(g.has_edge(e), "cherry shape missing edge " + a + "-" + c);
        shape_edges.push_back(e);
        auto it = l.find(e);
        require(it != l.end() &&
                    static_cast<int>(it->second.size()) >= s.minima.at({a, c}),
                "cherry list too small at " + a + "-" + c);
    }
    require(g.edge_count() == s.edges.size(), "cherry shape has extra edges");
    EdgeColouring ref;
    for (const auto& [a, c] : s.edges) ref[Edge(roles.at(a), roles.at(c))] = s.reference.at({a, c});
    Bipartition b{{roles.at("u"), roles.at("v1"), roles.at("v2"), roles.at("v3")},
                  {roles.at("w1"), roles.at("w2"), roles.at("w3")}};
    return galvin_colour(g, b, l, ref);
}

EdgeColouring colour_fig6_transfer(const Graph& g, const std::map<std::string, int>& roles,
                                   const ListAssignment& l,
                                   const std::map<std::pair<int, int>, int>& aux) {
    int u = roles.at("u");
    int v[4] = {0, roles.at("v1"), roles.at("v2"), roles.at("v3")};
    int w[5] = {0, roles.at("w1"), roles.at("w2"), roles.at("w3"), roles.at("w4")};

    require(g.edge_count() == 10, "fig6 shape has 10 edges");
    for (int i = 1; i <= 3; ++i) {
        require(g.has_edge(Edge(v[i], w[1])), "fig6 shape: v_i w1 missing");
        require(g.has_edge(Edge(v[i], w[i + 1])), "fig6 shape: v_i w_{i+1} missing");
        require(g.degree(v[i]) == 2, "fig6 shape: deg(v_i) != 2");
    }
    for (int j = 1; j <= 4; ++j) require(g.has_edge(Edge(u, w[j])), "fig6 shape: u w_j missing");
    require(g.degree(u) == 4 && g.degree(w[1]) == 4, "fig6 shape: hub degrees wrong");

    auto list_at = [&](const Edge& e) -> const ColourSet& {
        auto it = l.find(e);
        require(it != l.end(), "fig6: no list at " + to_string(e));
        return it->second;
    };
    for (int i = 1; i <= 3; ++i) {
        require(static_cast<int>(list_at(Edge(v[i], w[1])).size()) >= 2 &&
                    static_cast<int>(list_at(Edge(v[i], w[i + 1])).size()) >= 2,
                "fig6: v-list below degree bound");
    }
    for (int j = 1; j <= 4; ++j)
        require(static_cast<int>(list_at(Edge(u, w[j])).size()) >= 4,
                "fig6: u-list below degree bound");

    // aux must be a proper colouring of K_{2,4} within the transferred lists
    auto ac = [&](int j, int i) {
        auto it = aux.find({j, i});
        require(it != aux.end(), "fig6: aux colouring incomplete");
        return it->second;
    };
    for (int j = 1; j <= 2; ++j)
        for (int i = 1; i <= 4; ++i)
            for (int i2 = i + 1; i2 <= 4; ++i2)
                require(ac(j, i) != ac(j, i2), "fig6: aux colouring improper at p" + std::to_string(j));
    for (int i = 1; i <= 4; ++i) {
        require(ac(1, i) != ac(2, i), "fig6: aux colouring improper at q" + std::to_string(i));
        const Edge src = (i <= 3) ? Edge(v[i], w[1]) : Edge(u, w[1]);
        require(contains(list_at(src), ac(1, i)) && contains(list_at(src), ac(2, i)),
                "fig6: aux colour outside transferred list");
    }

    EdgeColouring out;
    auto assign = [&](const Edge& e, int c) {
        ensure(contains(list_at(e), c), "fig6: colour outside list at " + to_string(e));
        for (int x : {e.u, e.v})
            for (int y : g.neighbours(x)) {
                Edge f(x, y);
                auto it = out.find(f);
                ensure(!(it != out.end() && it->second == c && !(f == e)),
                       "fig6: clash at " + to_string(e));
            }
        out[e] = c;
    };
    auto smallest_avail = [&](const Edge& e) {
        ColourSet avail = list_at(e);
        for (int x : {e.u, e.v})
            for (int y : g.neighbours(x)) {
                auto it = out.find(Edge(x, y));
                if (it != out.end()) erase_colour(avail, it->second);
            }
        ensure(!avail.empty(), "fig6: no available colour at " + to_string(e));
        return avail.front();
    };

    // branch family A: some pendant keeps its full list under p_j's colours
    for (int j = 1; j <= 2; ++j)
        for (int istar = 1; istar <= 3; ++istar) {
            if (contains(list_at(Edge(v[istar], w[istar + 1])), ac(j, istar))) continue;
            for (int i = 1; i <= 3; ++i) assign(Edge(v[i], w[1]), ac(j, i));
            assign(Edge(u, w[1]), ac(j, 4));
            for (int i = 1; i <= 3; ++i)
                if (i != istar) assign(Edge(v[i], w[i + 1]), smallest_avail(Edge(v[i], w[i + 1])));
            for (int i = 1; i <= 3; ++i)
                if (i != istar) assign(Edge(u, w[i + 1]), smallest_avail(Edge(u, w[i + 1])));
            assign(Edge(u, w[istar + 1]), smallest_avail(Edge(u, w[istar + 1])));
            assign(Edge(v[istar], w[istar + 1]), smallest_avail(Edge(v[istar], w[istar + 1])));
            return out;
        }

    // branch B: straight transfer, tridents on the remaining u-star
    for (int i = 1; i <= 3; ++i) assign(Edge(v[i], w[1]), ac(1, i));
    assign(Edge(u, w[1]), ac(1, 4));
    for (int i = 1; i <= 3; ++i) assign(Edge(v[i], w[i + 1]), ac(2, i));
    ColourSet rem[4];
    for (int i = 1; i <= 3; ++i) {
        rem[i] = list_at(Edge(u, w[i + 1]));
        erase_colour(rem[i], ac(1, 4));
        erase_colour(rem[i], ac(2, i));
    }
    // try a system of distinct representatives over the three remaining lists
    for (int c1 : rem[1])
        for (int c2 : rem[2])
            for (int c3 : rem[3])
                if (c1 != c2 && c1 != c3 && c2 != c3) {
                    assign(Edge(u, w[2]), c1);
                    assign(Edge(u, w[3]), c2);
                    assign(Edge(u, w[4]), c3);
                    return out;
                }
    // all three remainders are one identical pair {c1, c2}: swap construction
    ensure(rem[1].size() == 2 && rem[1] == rem[2] && rem[2] == rem[3],
           "fig6: trident failure without the forced list structure");
    out.clear();
    for (int i = 1; i <= 3; ++i) assign(Edge(v[i], w[1]), ac(2, i));
    assign(Edge(u, w[1]), ac(2, 4));
    for (int i = 1; i <= 3; ++i) {
        assign(Edge(v[i], w[i + 1]), ac(1, i));
        assign(Edge(u, w[i + 1]), ac(2, i));
    }
    return out;
}

}  // namespace listec
