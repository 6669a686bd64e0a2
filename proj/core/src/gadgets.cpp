#include "listec/gadgets.hpp"

#include <algorithm>
#include <functional>

#include "listec/bipartite.hpp"

namespace listec {

ListAssignment trim_lists(const ListAssignment& l, const std::map<Edge, int>& keep) {
    ListAssignment out = l;
    for (auto& [e, s] : out) {
        auto it = keep.find(e);
        if (it == keep.end()) continue;
        require(static_cast<int>(s.size()) >= it->second,
                "list at " + to_string(e) + " below required minimum " + std::to_string(it->second));
        s.resize(it->second);
    }
    return out;
}

namespace {

struct Ctx {
    const Graph* g = nullptr;
    ListAssignment rem;
    EdgeColouring out;

    Ctx(const Graph& graph, const ListAssignment& l, const EdgeColouring& base) : g(&graph) {
        out = base;
        for (const Edge& e : g->edges()) {
            if (out.count(e)) continue;
            auto it = l.find(e);
            require(it != l.end(), "no list for edge " + to_string(e));
            ColourSet s = it->second;
            for (int x : {e.u, e.v})
                for (int y : g->neighbours(x)) {
                    auto cit = out.find(Edge(x, y));
                    if (cit != out.end()) erase_colour(s, cit->second);
                }
            rem[e] = s;
        }
    }

    bool coloured(const Edge& e) const { return out.count(e) != 0; }

    void place(const Edge& e, int c) {
        ensure(!coloured(e), "edge already coloured: " + to_string(e));
        ensure(contains(rem.at(e), c), "colour " + std::to_string(c) + " unavailable at " + to_string(e));
        out[e] = c;
        rem.erase(e);
        for (int x : {e.u, e.v})
            for (int y : g->neighbours(x)) {
                Edge f(x, y);
                if (f == e || coloured(f)) continue;
                auto it = rem.find(f);
                if (it != rem.end()) erase_colour(it->second, c);
            }
    }

    void place_smallest(const Edge& e) {
        const ColourSet& s = rem.at(e);
        if (s.empty()) throw GreedyFailure(e);
        place(e, s.front());
    }

    void finish_greedy() {
        while (out.size() < g->edge_count()) {
            Edge best;
            std::size_t best_size = 0;
            bool found = false;
            for (const Edge& e : g->edges()) {
                if (coloured(e)) continue;
                std::size_t sz = rem.at(e).size();
                if (!found || sz < best_size || (sz == best_size && e < best)) {
                    best = e;
                    best_size = sz;
                    found = true;
                }
            }
            place_smallest(best);
        }
    }

    void finish_pair(const Edge& a, const Edge& b) {
        for (int ca : rem.at(a))
            for (int cb : rem.at(b)) {
                if (a.adjacent_to(b) && ca == cb) continue;
                place(a, ca);
                place(b, cb);
                return;
            }
        throw GreedyFailure(a);
    }

    void merge(const EdgeColouring& c) {
        for (const auto& [e, col] : c) place(e, col);
    }
};

template <typename F>
bool attempt(Ctx& ctx, F&& body) {
    Ctx copy = ctx;
    try {
        body(copy);
        ctx = std::move(copy);
        return true;
    } catch (const InvariantError&) {
        return false;
    }
}

ListAssignment restrict_lists(const Ctx& ctx, const std::vector<Edge>& edges) {
    ListAssignment out;
    for (const Edge& e : edges) out[e] = ctx.rem.at(e);
    return out;
}

std::vector<std::pair<int, int>> all_compatible_pairs(const ListAssignment& l, const Edge& e,
                                                      const Edge& f,
                                                      std::span<const Edge> blockers) {
    std::vector<std::pair<int, int>> out;
    const ColourSet& le = l.at(e);
    const ColourSet& lf = l.at(f);
    for (int c : set_intersect(le, lf)) out.emplace_back(c, c);
    for (int c1 : le)
        for (int c2 : lf) {
            if (c1 == c2) continue;
            bool ok = true;
            for (const Edge& b : blockers) {
                auto it = l.find(b);
                if (it == l.end()) continue;
                if (contains(it->second, c1) && contains(it->second, c2)) { ok = false; break; }
            }
            if (ok) out.emplace_back(c1, c2);
        }
    return out;
}

}  // namespace

EdgeColouring semi_greedy(const Graph& g, const ListAssignment& l, EdgeColouring c) {
    Ctx ctx(g, l, c);
    ctx.finish_greedy();
    return ctx.out;
}

std::optional<std::pair<int, int>> compatible_pair_against(const ListAssignment& l, const Edge& e,
                                                           const Edge& f,
                                                           std::span<const Edge> blockers) {
    auto all = all_compatible_pairs(l, e, f, blockers);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::optional<std::pair<int, int>> compatible_pair(const Graph& g, const ListAssignment& l,
                                                   const Edge& e, const Edge& f) {
    require(g.has_edge(e) && g.has_edge(f), "compatible_pair needs edges of g");
    require(!e.adjacent_to(f), "compatible_pair needs non-adjacent edges");
    std::vector<Edge> blockers;
    for (const Edge& b : g.edges())
        if (!(b == e) && !(b == f) && b.adjacent_to(e) && b.adjacent_to(f)) blockers.push_back(b);
    return compatible_pair_against(l, e, f, blockers);
}

// ---------------------------------------------------------------------------
// cycles and small shapes

namespace {

std::vector<Edge> cycle_order(const Graph& g) {
    for (int v : g.vertices())
        require(g.degree(v) == 2, "colour_cycle needs a 2-regular graph");
    require(is_connected(g), "colour_cycle needs a single cycle");
    int start = g.vertices().front();
    std::vector<Edge> order;
    int prev = start;
    int cur = g.neighbours(start)[0];
    order.emplace_back(start, cur);
    while (cur != start) {
        const auto& nb = g.neighbours(cur);
        int nxt = (nb[0] == prev) ? nb[1] : nb[0];
        order.emplace_back(cur, nxt);
        prev = cur;
        cur = nxt;
    }
    return order;
}

}  // namespace

CycleResult colour_cycle(const Graph& g, const ListAssignment& l) {
    std::vector<Edge> order = cycle_order(g);
    std::size_t n = order.size();
    for (const Edge& e : order)
        require(l.count(e) && l.at(e).size() >= 2, "colour_cycle needs lists of size >= 2");

    CycleResult res;
    // a colour on one edge missing from the next lets the rest cascade
    for (std::size_t i = 0; i < n; ++i) {
        ColourSet diff = set_minus(l.at(order[i]), l.at(order[(i + 1) % n]));
        if (diff.empty()) continue;
        Ctx ctx(g, l, {});
        ctx.place(order[i], diff.front());
        for (std::size_t k = 1; k < n; ++k)
            ctx.place_smallest(order[(i + n - k) % n]);
        res.colouring = ctx.out;
        return res;
    }
    // cyclic containment chain: all lists equal
    const ColourSet& common = l.at(order[0]);
    if (common.size() >= 3) {
        Ctx ctx(g, l, {});
        ctx.place(order[0], common.front());
        for (std::size_t k = 1; k < n; ++k) ctx.place_smallest(order[n - k]);
        res.colouring = ctx.out;
        return res;
    }
    if (n % 2 == 0) {
        Ctx ctx(g, l, {});
        for (std::size_t i = 0; i < n; ++i) ctx.place(order[i], common[i % 2]);
        res.colouring = ctx.out;
        return res;
    }
    res.impossible = true;  // odd, identical lists of size two
    return res;
}

std::optional<std::array<int, 3>> colour_trident(const ColourSet& l1, const ColourSet& l2,
                                                 const ColourSet& l3) {
    require(l1.size() >= 2 && l2.size() >= 2 && l3.size() >= 2,
            "colour_trident needs lists of size >= 2");
    for (int c1 : l1)
        for (int c2 : l2)
            for (int c3 : l3)
                if (c1 != c2 && c1 != c3 && c2 != c3) return std::array<int, 3>{c1, c2, c3};
    ensure(l1 == l2 && l2 == l3 && l1.size() == 2,
           "trident without representatives must have identical 2-lists");
    return std::nullopt;
}

namespace {

// shared vertex of the closing pair of a cycle edge list
int cycle_attach(const std::vector<Edge>& cycle) {
    const Edge& a = cycle.front();
    const Edge& b = cycle.back();
    for (int x : {a.u, a.v})
        if (b.touches(x)) return x;
    throw ContractError("cycle does not close");
}

void check_cycle_sequence(const std::vector<Edge>& cycle) {
    require(cycle.size() >= 3, "cycle needs at least 3 edges");
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
        require(cycle[i].adjacent_to(cycle[i + 1]), "cycle edges not consecutive");
    cycle_attach(cycle);
}

EdgeColouring balloon_impl(Ctx& ctx, const std::vector<Edge>& cycle, const Edge& pendant);

}  // namespace

EdgeColouring colour_balloon(const std::vector<Edge>& cycle, const Edge& pendant,
                             const ListAssignment& l) {
    check_cycle_sequence(cycle);
    int attach = cycle_attach(cycle);
    require(pendant.touches(attach), "pendant must attach at the shared cycle vertex");
    std::set<int> cyc_verts;
    for (const Edge& e : cycle) {
        cyc_verts.insert(e.u);
        cyc_verts.insert(e.v);
    }
    require(!cyc_verts.count(pendant.other(attach)), "pendant must leave the cycle");

    std::vector<int> verts(cyc_verts.begin(), cyc_verts.end());
    verts.push_back(pendant.other(attach));
    std::vector<Edge> edges = cycle;
    edges.push_back(pendant);
    Graph g(verts, edges);

    std::map<Edge, int> mins;
    for (const Edge& e : cycle) mins[e] = 2;
    mins[cycle.front()] = 3;
    mins[pendant] = 2;
    ListAssignment trimmed = trim_lists(l, mins);

    Ctx ctx(g, trimmed, {});
    return balloon_impl(ctx, cycle, pendant);
}

namespace {

EdgeColouring balloon_impl(Ctx& ctx, const std::vector<Edge>& cycle, const Edge& pendant) {
    std::size_t n = cycle.size();
    const ColourSet& last = ctx.rem.at(cycle.back());
    const ColourSet& pend = ctx.rem.at(pendant);
    ColourSet diff = set_minus(last, pend);
    if (!diff.empty()) {
        ctx.place(cycle.back(), diff.front());
        for (std::size_t k = n - 2; k >= 1; --k) ctx.place_smallest(cycle[k]);
        ctx.place_smallest(cycle.front());
        ctx.place_smallest(pendant);
        return ctx.out;
    }
    // L(e_n) is contained in L(f); use the slack of e_1
    ColourSet c1 = set_minus(ctx.rem.at(cycle.front()), set_union(last, pend));
    ensure(!c1.empty(), "balloon: no colour outside L(f) u L(e_n)");
    ctx.place(cycle.front(), c1.front());
    for (std::size_t k = 1; k + 1 < n; ++k) ctx.place_smallest(cycle[k]);
    ctx.place_smallest(cycle.back());
    ctx.place_smallest(pendant);
    return ctx.out;
}

}  // namespace

EdgeColouring colour_eight(const std::vector<Edge>& cycle_a, const std::vector<Edge>& cycle_b,
                           int shared, const ListAssignment& l) {
    check_cycle_sequence(cycle_a);
    check_cycle_sequence(cycle_b);
    require(cycle_attach(cycle_a) == shared && cycle_attach(cycle_b) == shared,
            "cycles must close at the shared vertex");
    std::set<int> va, vb;
    for (const Edge& e : cycle_a) { va.insert(e.u); va.insert(e.v); }
    for (const Edge& e : cycle_b) { vb.insert(e.u); vb.insert(e.v); }
    for (int x : va)
        require(x == shared || !vb.count(x), "cycles must share exactly one vertex");

    std::vector<int> verts(va.begin(), va.end());
    for (int x : vb)
        if (x != shared) verts.push_back(x);
    std::vector<Edge> edges = cycle_a;
    edges.insert(edges.end(), cycle_b.begin(), cycle_b.end());
    Graph g(verts, edges);

    std::map<Edge, int> mins;
    for (const Edge& e : edges) mins[e] = 2;
    mins[cycle_a.back()] = 4;
    mins[cycle_b.back()] = 4;
    ListAssignment trimmed = trim_lists(l, mins);
    Ctx ctx(g, trimmed, {});

    // branch 1: a colour on one opening edge missing from the other
    for (int swap = 0; swap < 2; ++swap) {
        const auto& A = swap ? cycle_b : cycle_a;
        const auto& B = swap ? cycle_a : cycle_b;
        for (int c : set_minus(ctx.rem.at(A.front()), ctx.rem.at(B.front()))) {
            bool ok = attempt(ctx, [&](Ctx& t) {
                t.place(A.front(), c);
                for (std::size_t k = 1; k + 1 < A.size(); ++k) t.place_smallest(A[k]);
                std::vector<Edge> rev(B.rbegin(), B.rend());
                ListAssignment sub = restrict_lists(t, rev);
                sub[A.back()] = t.rem.at(A.back());
                t.merge(colour_balloon(rev, A.back(), sub));
            });
            if (ok) return ctx.out;
        }
    }
    // branch 2: slack inside one cycle; the cascade order protects the two
    // big lists, the greedy variant covers instances where the cascade
    // starves them instead
    for (int swap = 0; swap < 2; ++swap) {
        const auto& A = swap ? cycle_b : cycle_a;
        const auto& B = swap ? cycle_a : cycle_b;
        for (std::size_t i = 0; i + 1 < A.size(); ++i)
            for (int c : set_minus(ctx.rem.at(A[i]), ctx.rem.at(A[i + 1]))) {
                bool ok = attempt(ctx, [&](Ctx& t) {
                    t.place(A[i], c);
                    for (std::size_t k = i; k >= 1; --k) t.place_smallest(A[k - 1]);
                    for (std::size_t k = 0; k + 1 < B.size(); ++k) t.place_smallest(B[k]);
                    for (std::size_t k = i + 1; k + 1 < A.size(); ++k) t.place_smallest(A[k]);
                    t.finish_pair(A.back(), B.back());
                });
                if (!ok)
                    ok = attempt(ctx, [&](Ctx& t) {
                        t.place(A[i], c);
                        t.finish_greedy();
                    });
                if (ok) return ctx.out;
            }
    }
    // all interior lists of each cycle coincide: alternate both paths
    {
        bool ok = attempt(ctx, [&](Ctx& t) {
            const ColourSet pairset = t.rem.at(cycle_a.front());
            ensure(pairset.size() == 2, "eight: expected identical 2-lists");
            int a = pairset[0], b = pairset[1];
            for (std::size_t k = 0; k + 1 < cycle_a.size(); ++k)
                t.place(cycle_a[k], k % 2 == 0 ? a : b);
            for (std::size_t k = 0; k + 1 < cycle_b.size(); ++k)
                t.place(cycle_b[k], k % 2 == 0 ? b : a);
            t.finish_pair(cycle_a.back(), cycle_b.back());
        });
        if (ok) return ctx.out;
    }
    // last scripted resort: plain semi-greedy over the whole shape
    {
        bool ok = attempt(ctx, [&](Ctx& t) { t.finish_greedy(); });
        if (ok) return ctx.out;
    }
    throw InvariantError("colour_eight: no branch succeeded");
}

// ---------------------------------------------------------------------------
// 4-pyramid

EdgeColouring colour_4pyramid(const Graph& g, const std::map<std::string, int>& roles,
                              const ListAssignment& l) {
    int u = roles.at("u");
    int v[3] = {0, roles.at("v1"), roles.at("v2")};
    int w[3] = {0, roles.at("w1"), roles.at("w2")};
    require(g.edge_count() == 8, "4-pyramid has 8 edges");
    std::map<Edge, int> mins;
    for (int i = 1; i <= 2; ++i) {
        require(g.has_edge(Edge(v[i], u)) && g.has_edge(Edge(u, w[i])), "4-pyramid shape broken");
        mins[Edge(v[i], u)] = 2;
        mins[Edge(u, w[i])] = 5;
        for (int j = 1; j <= 2; ++j) {
            require(g.has_edge(Edge(v[i], w[j])), "4-pyramid shape broken");
            mins[Edge(v[i], w[j])] = 3;
        }
    }
    for (const auto& [e, m] : mins)
        require(l.count(e) && static_cast<int>(l.at(e).size()) >= m,
                "4-pyramid list below minimum at " + to_string(e));

    Ctx ctx(g, l, {});
    auto L = [&](const Edge& e) -> const ColourSet& { return ctx.rem.at(e); };

    // shared colour between a uv edge and the opposite vw edge
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            Edge e1(v[i], u), e2(v[3 - i], w[j]);
            for (int c : set_intersect(L(e1), L(e2)))
                if (attempt(ctx, [&](Ctx& t) {
                        t.place(e1, c);
                        t.place(e2, c);
                        t.finish_greedy();
                    }))
                    return ctx.out;
        }
    // shared colour on a diagonal vw pair; finish as two cycles at u
    for (int j = 1; j <= 2; ++j) {
        Edge e1(v[1], w[j]), e2(v[2], w[3 - j]);
        for (int c : set_intersect(L(e1), L(e2)))
            if (attempt(ctx, [&](Ctx& t) {
                    t.place(e1, c);
                    t.place(e2, c);
                    std::vector<Edge> ca{Edge(u, v[1]), Edge(v[1], w[3 - j]), Edge(w[3 - j], u)};
                    std::vector<Edge> cb{Edge(u, v[2]), Edge(v[2], w[j]), Edge(w[j], u)};
                    ListAssignment sub = restrict_lists(t, ca);
                    for (const Edge& e : cb) sub[e] = t.rem.at(e);
                    t.merge(colour_eight(ca, cb, u, sub));
                }))
                return ctx.out;
    }
    // shared colour between a uw edge and a vw edge at the other w
    for (int j = 1; j <= 2; ++j)
        for (int i = 1; i <= 2; ++i) {
            Edge e1(u, w[j]), e2(v[i], w[3 - j]);
            for (int c : set_intersect(L(e1), L(e2)))
                if (attempt(ctx, [&](Ctx& t) {
                        t.place(e1, c);
                        t.place(e2, c);
                        t.finish_greedy();
                    }))
                    return ctx.out;
        }
    // shared colour between the two vw edges at one v
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            Edge e1(v[i], w[j]);
            for (int c : set_intersect(L(Edge(v[i], w[1])), L(Edge(v[i], w[2]))))
                if (contains(L(e1), c) && attempt(ctx, [&](Ctx& t) {
                        t.place(e1, c);
                        t.finish_greedy();
                    }))
                    return ctx.out;
        }
    // shared colour between uv and vw at one v
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            Edge e1(v[i], u);
            for (int c : set_intersect(L(e1), L(Edge(v[i], w[j]))))
                if (attempt(ctx, [&](Ctx& t) {
                        t.place(e1, c);
                        t.finish_greedy();
                    }))
                    return ctx.out;
        }
    // star at u, then Galvin on the remaining 4-cycle
    {
        bool ok = attempt(ctx, [&](Ctx& t) {
            for (const Edge& e :
                 {Edge(v[1], u), Edge(v[2], u), Edge(u, w[1]), Edge(u, w[2])})
                t.place_smallest(e);
            std::vector<int> cverts{v[1], v[2], w[1], w[2]};
            std::vector<Edge> cedges{Edge(v[1], w[1]), Edge(v[1], w[2]), Edge(v[2], w[1]),
                                     Edge(v[2], w[2])};
            Graph c4(cverts, cedges);
            Bipartition b{{v[1], v[2]}, {w[1], w[2]}};
            EdgeColouring ref{{Edge(v[1], w[1]), 1},
                              {Edge(v[2], w[1]), 2},
                              {Edge(v[2], w[2]), 1},
                              {Edge(v[1], w[2]), 2}};
            t.merge(galvin_colour(c4, b, restrict_lists(t, cedges), ref));
        });
        if (ok) return ctx.out;
    }
    throw InvariantError("colour_4pyramid: no branch succeeded");
}

// ---------------------------------------------------------------------------
// cherry configurations

EdgeColouring colour_cherry_one(const Graph& g, const std::map<std::string, int>& roles,
                                const ListAssignment& l) {
    int u = roles.at("u");
    int v1 = roles.at("v1"), v2 = roles.at("v2"), v3 = roles.at("v3");
    int w1 = roles.at("w1"), w2 = roles.at("w2"), w3 = roles.at("w3");
    require(g.edge_count() == 12, "cherry-one has 12 edges");
    std::map<Edge, int> mins = {
        {Edge(u, v1), 3},  {Edge(u, v2), 4},  {Edge(u, v3), 2},  {Edge(u, w1), 7},
        {Edge(u, w2), 7},  {Edge(u, w3), 7},  {Edge(v1, w1), 3}, {Edge(v1, w3), 3},
        {Edge(v2, w1), 4}, {Edge(v2, w2), 4}, {Edge(v2, w3), 4}, {Edge(v3, w2), 2}};
    for (const auto& [e, m] : mins) {
        require(g.has_edge(e), "cherry-one shape broken at " + to_string(e));
        require(l.count(e) && static_cast<int>(l.at(e).size()) >= m,
                "cherry-one list below minimum at " + to_string(e));
    }
    ListAssignment trimmed = trim_lists(l, mins);
    Ctx base(g, trimmed, {});

    std::vector<Edge> blockers{Edge(v2, u), Edge(v3, w2)};
    auto pairs = all_compatible_pairs(trimmed, Edge(v3, u), Edge(v2, w2), blockers);
    ensure(!pairs.empty(), "cherry-one: no compatible pair");
    for (auto [c1, c2] : pairs) {
        Ctx ctx = base;
        bool ok = attempt(ctx, [&](Ctx& t) {
            t.place(Edge(v3, u), c1);
            t.place(Edge(v2, w2), c2);
            t.place_smallest(Edge(v3, w2));
            ColourSet uw2free = set_minus(t.rem.at(Edge(u, w2)), trimmed.at(Edge(v1, u)));
            // drop colours already used at u or w2
            for (int x : {u, w2})
                for (int y : g.neighbours(x)) {
                    auto it = t.out.find(Edge(x, y));
                    if (it != t.out.end()) erase_colour(uw2free, it->second);
                }
            ensure(!uw2free.empty(), "cherry-one: no colour for uw2 avoiding L(v1u)");
            t.place(Edge(u, w2), uw2free.front());
            // remaining 8 edges form a 4-pyramid on {u, v1, v2, w1, w3}
            std::vector<int> pverts{u, v1, v2, w1, w3};
            std::vector<Edge> pedges{Edge(v1, u),  Edge(v2, u),  Edge(u, w1),  Edge(u, w3),
                                     Edge(v1, w1), Edge(v1, w3), Edge(v2, w1), Edge(v2, w3)};
            Graph pyr(pverts, pedges);
            std::map<std::string, int> proles{
                {"u", u}, {"v1", v1}, {"v2", v2}, {"w1", w1}, {"w2", w3}};
            t.merge(colour_4pyramid(pyr, proles, restrict_lists(t, pedges)));
        });
        if (ok) return ctx.out;
    }
    throw InvariantError("colour_cherry_one: no branch succeeded");
}

namespace {

// the six automorphisms of the 6-wheel cherry shape, as role permutations
const std::vector<std::map<std::string, std::string>>& wheel_autos() {
    static const std::vector<std::map<std::string, std::string>> autos = [] {
        std::vector<std::map<std::string, std::string>> out;
        auto add = [&](const char* V1, const char* V2, const char* V3, const char* W1,
                       const char* W2, const char* W3) {
            out.push_back({{"u", "u"},
                           {"v1", V1}, {"v2", V2}, {"v3", V3},
                           {"w1", W1}, {"w2", W2}, {"w3", W3}});
        };
        add("v1", "v2", "v3", "w1", "w2", "w3");
        add("v2", "v3", "v1", "w2", "w3", "w1");
        add("v3", "v1", "v2", "w3", "w1", "w2");
        add("v3", "v2", "v1", "w2", "w1", "w3");  // reflect fixing v2
        add("v1", "v3", "v2", "w3", "w2", "w1");  // reflect fixing v1
        add("v2", "v1", "v3", "w1", "w3", "w2");  // reflect fixing v3
        return out;
    }();
    return autos;
}

}  // namespace

EdgeColouring colour_cherry_two(const Graph& g, const std::map<std::string, int>& roles,
                                const ListAssignment& l) {
    require(g.edge_count() == 12, "cherry-two has 12 edges");
    auto at = [&](const std::map<std::string, std::string>& sigma, const std::string& r) {
        return roles.at(sigma.at(r));
    };
    const auto& id = wheel_autos().front();
    int u = at(id, "u");
    std::map<Edge, int> mins;
    for (const char* wr : {"w1", "w2", "w3"}) mins[Edge(u, at(id, wr))] = 7;
    for (const char* vr : {"v1", "v2", "v3"}) mins[Edge(u, at(id, vr))] = 3;
    // outer cycle v1-w1-v2-w2-v3-w3
    const std::vector<std::pair<std::string, std::string>> cyc{
        {"v1", "w1"}, {"v2", "w1"}, {"v2", "w2"}, {"v3", "w2"}, {"v3", "w3"}, {"v1", "w3"}};
    for (const auto& [a, b] : cyc) mins[Edge(at(id, a), at(id, b))] = 3;
    for (const auto& [e, m] : mins) {
        require(g.has_edge(e), "cherry-two shape broken at " + to_string(e));
        require(l.count(e) && static_cast<int>(l.at(e).size()) >= m,
                "cherry-two list below minimum at " + to_string(e));
    }
    ListAssignment trimmed = trim_lists(l, mins);
    Ctx base(g, trimmed, {});
    auto L = [&](int a, int b) -> const ColourSet& { return trimmed.at(Edge(a, b)); };

    // branch 1: some v has a u-list colour missing from one of its cycle edges
    for (const auto& sigma : wheel_autos()) {
        int sv2 = at(sigma, "v2"), sw1 = at(sigma, "w1");
        for (int c : set_minus(L(sv2, u), L(sv2, sw1))) {
            Ctx ctx = base;
            bool ok = attempt(ctx, [&](Ctx& t) {
                t.place(Edge(sv2, u), c);
                t.place_smallest(Edge(at(sigma, "v1"), u));
                t.place_smallest(Edge(at(sigma, "v3"), u));
                std::vector<Edge> rest;
                for (const Edge& e : g.edges())
                    if (!t.coloured(e)) rest.push_back(e);
                std::map<std::string, int> cb;
                for (const char* r : {"u", "v1", "v2", "v3", "w1", "w2", "w3"})
                    cb[r] = at(sigma, r);
                t.merge(colour_cherry_bipartite(Graph({cb["u"], cb["v1"], cb["v2"], cb["v3"],
                                                       cb["w1"], cb["w2"], cb["w3"]},
                                                      rest),
                                                cb, restrict_lists(t, rest)));
            });
            if (ok) return ctx.out;
        }
    }
    // branch 2: some v2u colour misses a uw list
    for (const auto& sigma : wheel_autos()) {
        int sv2 = at(sigma, "v2"), sv3 = at(sigma, "v3"), sv1 = at(sigma, "v1");
        int sw1 = at(sigma, "w1"), sw2 = at(sigma, "w2"), sw3 = at(sigma, "w3");
        for (const char* wr : {"w1", "w2", "w3"}) {
            for (int c : set_minus(L(sv2, u), L(u, at(sigma, wr)))) {
                Ctx ctx = base;
                bool ok = attempt(ctx, [&](Ctx& t) {
                    t.place(Edge(sv2, u), c);
                    if (contains(L(sv3, u), c))
                        t.place(Edge(sv3, sw2), c);
                    else
                        t.place_smallest(Edge(sv3, sw2));
                    t.place_smallest(Edge(sv2, sw2));
                    t.place_smallest(Edge(sv2, sw1));
                    std::vector<Edge> cycle{Edge(sv1, sw3), Edge(sw3, sv3), Edge(sv3, u),
                                            Edge(u, sv1)};
                    Edge pendant(sv1, sw1);
                    ListAssignment sub = restrict_lists(t, cycle);
                    sub[pendant] = t.rem.at(pendant);
                    t.merge(colour_balloon(cycle, pendant, sub));
                    t.finish_greedy();
                });
                if (ok) return ctx.out;
            }
        }
    }
    // branch 3: two u-lists intersect
    for (const auto& sigma : wheel_autos()) {
        int sv1 = at(sigma, "v1"), sv2 = at(sigma, "v2"), sv3 = at(sigma, "v3");
        int sw1 = at(sigma, "w1"), sw2 = at(sigma, "w2"), sw3 = at(sigma, "w3");
        for (int c : set_intersect(L(sv1, u), L(sv2, u))) {
            if (!contains(L(sv2, sw1), c)) continue;
            Ctx ctx = base;
            bool ok = attempt(ctx, [&](Ctx& t) {
                t.place(Edge(sv1, u), c);
                t.place(Edge(sv2, sw1), c);
                t.place_smallest(Edge(sv1, sw1));
                t.place_smallest(Edge(sv1, sw3));
                std::vector<Edge> cycle{Edge(sv3, sw2), Edge(sw2, sv2), Edge(sv2, u),
                                        Edge(u, sv3)};
                Edge pendant(sv3, sw3);
                ListAssignment sub = restrict_lists(t, cycle);
                sub[pendant] = t.rem.at(pendant);
                t.merge(colour_balloon(cycle, pendant, sub));
                t.finish_greedy();
            });
            if (ok) return ctx.out;
        }
    }
    throw InvariantError("colour_cherry_two: no branch succeeded");
}

}  // namespace listec
