#include "listec/solver.hpp"

#include <algorithm>
#include <deque>

#include "listec/bipartite.hpp"
#include "listec/catalogue.hpp"
#include "listec/gadgets.hpp"
#include "listec/oracle.hpp"

namespace listec {

std::string to_string(Regime r) {
    switch (r) {
        case Regime::Tw3L7: return "tw3";
        case Regime::Pw3L6: return "pw3";
        case Regime::Pw4L10: return "pw4";
        case Regime::ThreeTree: return "3tree";
    }
    return "?";
}

std::optional<Regime> regime_from_string(const std::string& s) {
    if (s == "tw3") return Regime::Tw3L7;
    if (s == "pw3") return Regime::Pw3L6;
    if (s == "pw4") return Regime::Pw4L10;
    if (s == "3tree") return Regime::ThreeTree;
    return std::nullopt;
}

std::optional<Edge> check_degree_sum(const Graph& g, int l_bound) {
    for (const Edge& e : g.edges()) {
        int need = std::max({l_bound, g.degree(e.u), g.degree(e.v)}) + 2;
        if (g.degree(e.u) + g.degree(e.v) < need) return e;
    }
    return std::nullopt;
}

std::pair<Graph, ListAssignment> build_aux_graph(const Graph& g1, const RoleMap& roles,
                                                 const ListAssignment& lists, int p1, int p2) {
    int u = roles.at("u");
    int w1 = roles.at("w1");
    require(!g1.has_vertex(p1) && !g1.has_vertex(p2) && p1 != p2, "aux vertices must be fresh");
    std::vector<int> vs{roles.at("v1"), roles.at("v2"), roles.at("v3")};
    for (int v : vs) require(g1.has_vertex(v), "fig6 role vertex missing from G1");
    require(g1.has_vertex(u), "fig6 hub missing from G1");

    std::vector<Edge> added;
    for (int p : {p1, p2}) {
        added.emplace_back(u, p);
        for (int v : vs) added.emplace_back(v, p);
    }
    Graph gstar = g1.with_added({p1, p2}, added);

    ListAssignment lstar;
    for (const Edge& e : g1.edges()) lstar[e] = lists.at(e);
    for (int p : {p1, p2}) {
        lstar[Edge(u, p)] = lists.at(Edge(u, w1));
        for (std::size_t i = 0; i < vs.size(); ++i) lstar[Edge(vs[i], p)] = lists.at(Edge(vs[i], w1));
    }
    return {gstar, lstar};
}

int chromatic_index(const Graph& g) {
    if (g.edge_count() == 0) return 0;
    int delta = g.max_degree();
    ListAssignment uniform;
    for (const Edge& e : g.edges()) uniform[e] = iota_set(1, delta);
    if (exists_colouring(g, uniform).colourable) return delta;
    for (auto& [e, s] : uniform) s = iota_set(1, delta + 1);
    ensure(exists_colouring(g, uniform).colourable, "chromatic index above Delta+1");
    return delta + 1;
}

// ---------------------------------------------------------------------------

namespace {

struct Mode {
    int k;
    int l;
    bool path;
};

Mode mode_for(Regime r) {
    switch (r) {
        case Regime::Tw3L7: return {3, 7, false};
        case Regime::Pw3L6: return {3, 6, true};
        case Regime::Pw4L10: return {4, 10, true};
        default: throw ContractError("mode_for: concrete regime expected");
    }
}

struct Frame {
    enum class Kind { EdgeCut, Boundary } kind;
    // EdgeCut
    Edge edge;
    // Boundary
    VertexSet removed;
    Graph boundary;
    std::string route;  // vchoosable | mindeg3 | fig4a | fig4b | fig4c | fig5 | fig6
    RoleMap roles;
    int hub = -1;
    std::map<std::pair<int, int>, int> aux;  // fig6 auxiliary K24 colouring
};

struct Solver {
    SolveTrace& trace;
    int& fresh_vertex;

    EdgeColouring solve_graph(const Graph& g, const ListAssignment& l, Mode mode, int depth,
                              const TreeDecomposition* hint);
    EdgeColouring solve_component(const Graph& g0, const ListAssignment& l, Mode mode, int depth,
                                  const TreeDecomposition* hint);
    void extend_boundary(const Graph& g0, const ListAssignment& l, const Frame& f,
                         EdgeColouring& colouring, int depth);
};

// Mutable view for the reduction loop; isolated vertices disappear on
// materialization.
struct Shrinking {
    std::map<int, std::set<int>> adj;
    std::size_t edge_count = 0;

    explicit Shrinking(const Graph& g) {
        for (const Edge& e : g.edges()) {
            adj[e.u].insert(e.v);
            adj[e.v].insert(e.u);
        }
        edge_count = g.edge_count();
    }

    int degree(int v) const {
        auto it = adj.find(v);
        return it == adj.end() ? 0 : static_cast<int>(it->second.size());
    }

    void remove_edge(const Edge& e) {
        adj[e.u].erase(e.v);
        adj[e.v].erase(e.u);
        --edge_count;
    }

    void remove_vertex(int v) {
        auto it = adj.find(v);
        if (it == adj.end()) return;
        edge_count -= it->second.size();
        for (int y : it->second) adj[y].erase(v);
        adj.erase(v);
    }

    Graph materialize() const {
        std::vector<int> vs;
        std::vector<Edge> es;
        for (const auto& [v, nb] : adj) {
            if (nb.empty()) continue;
            vs.push_back(v);
            for (int y : nb)
                if (v < y) es.emplace_back(v, y);
        }
        return Graph(vs, es);
    }

    std::size_t size() const {
        std::size_t active = 0;
        for (const auto& [v, nb] : adj)
            if (!nb.empty()) ++active;
        return active + edge_count;
    }
};

TreeDecomposition decompose_for(const Graph& g, Mode mode) {
    if (mode.path) {
        auto d = decompose_pw(g, mode.k);
        if (!d) throw InputError("graph has path-width above " + std::to_string(mode.k));
        return *d;
    }
    auto d = decompose_tw3(g);
    if (!d) throw InputError("graph has tree-width above 3");
    return *d;
}

// drop vertices that are no longer in g from every bag
TreeDecomposition restrict_to(const TreeDecomposition& d, const Graph& g) {
    TreeDecomposition out = d;
    for (auto& bag : out.bags) {
        std::vector<int> kept;
        for (int v : bag)
            if (g.has_vertex(v)) kept.push_back(v);
        bag = kept;
    }
    return out;
}

// remaining lists of the boundary edges against the colouring built so far,
// using the component graph for adjacency
ListAssignment boundary_remaining(const Graph& g0, const ListAssignment& l, const Frame& f,
                                  const EdgeColouring& colouring) {
    ListAssignment rem;
    for (const Edge& e : f.boundary.edges()) {
        ColourSet s = l.at(e);
        for (int x : {e.u, e.v})
            for (int y : g0.neighbours(x)) {
                auto it = colouring.find(Edge(x, y));
                if (it != colouring.end()) erase_colour(s, it->second);
            }
        rem[e] = s;
    }
    // (4.1): edges inside the removed set keep their full lists
    for (const Edge& e : f.boundary.edges()) {
        bool internal = f.removed.count(e.u) && f.removed.count(e.v);
        if (internal)
            ensure(rem.at(e).size() == l.at(e).size(), "(4.1) fails at " + to_string(e));
        else {
            int v = f.removed.count(e.u) ? e.v : e.u;
            ensure(static_cast<int>(rem.at(e).size()) >= f.boundary.degree(v),
                   "(4.2) fails at " + to_string(e));
        }
    }
    return rem;
}

// small placement helper for scripted extensions
struct Placer {
    const Graph& g;
    ListAssignment rem;
    EdgeColouring out;

    void place(const Edge& e, int c) {
        ensure(contains(rem.at(e), c), "extension clash at " + to_string(e));
        out[e] = c;
        for (int x : {e.u, e.v})
            for (int y : g.neighbours(x)) {
                Edge f(x, y);
                if (!(f == e) && !out.count(f)) erase_colour(rem[f], c);
            }
    }
    void place_smallest(const Edge& e) {
        ensure(!rem.at(e).empty(), "extension stuck at " + to_string(e));
        place(e, rem.at(e).front());
    }
};

}  // namespace

void Solver::extend_boundary(const Graph& g0, const ListAssignment& l, const Frame& f,
                             EdgeColouring& colouring, int depth) {
    ListAssignment rem = boundary_remaining(g0, l, f, colouring);
    const Graph& b = f.boundary;
    EdgeColouring ext;

    if (f.route == "vchoosable") {
        Bipartition bip = bipartition_with_w(b, f.removed);
        VChoosableResult res = v_choosable_colour(b, bip, rem);
        ensure(!res.exceptional && res.colouring.has_value(),
               "boundary subgraph unexpectedly hit the exceptional case");
        ext = *res.colouring;
    } else if (f.route == "mindeg3") {
        Bipartition bip = bipartition_with_w(b, f.removed);
        ext = colour_k44_mindeg3(b, bip, f.hub, rem);
    } else if (f.route == "fig4a") {
        Placer p{b, rem, {}};
        int u = f.roles.at("u");
        p.place_smallest(Edge(u, f.roles.at("x")));
        p.place_smallest(Edge(u, f.roles.at("v1")));
        p.place_smallest(Edge(u, f.roles.at("v2")));
        std::vector<Edge> restk33;
        for (const Edge& e : b.edges())
            if (!p.out.count(e)) restk33.push_back(e);
        VertexSet verts;
        for (const Edge& e : restk33) {
            verts.insert(e.u);
            verts.insert(e.v);
        }
        Graph k33(std::vector<int>(verts.begin(), verts.end()), restk33);
        Bipartition bip;
        bip.side_w = {f.roles.at("w1"), f.roles.at("w2"), f.roles.at("w3")};
        for (int v : verts)
            if (!bip.side_w.count(v)) bip.side_v.insert(v);
        ListAssignment sub;
        for (const Edge& e : restk33) sub[e] = p.rem.at(e);
        VChoosableResult res = v_choosable_colour(k33, bip, sub);
        ensure(res.colouring.has_value(), "fig4a bipartite part failed");
        ext = p.out;
        for (const auto& [e, c] : *res.colouring) ext[e] = c;
    } else if (f.route == "fig4b") {
        ext = colour_cherry_one(b, f.roles, rem);
    } else if (f.route == "fig4c") {
        ext = colour_cherry_two(b, f.roles, rem);
    } else if (f.route == "fig5") {
        Placer p{b, rem, {}};
        int u = f.roles.at("u");
        p.place_smallest(Edge(u, f.roles.at("vp")));
        std::vector<Edge> reste;
        for (const Edge& e : b.edges())
            if (!p.out.count(e)) reste.push_back(e);
        VertexSet verts;
        for (const Edge& e : reste) {
            verts.insert(e.u);
            verts.insert(e.v);
        }
        Graph pyr(std::vector<int>(verts.begin(), verts.end()), reste);
        RoleMap proles{{"u", u},
                       {"v1", f.roles.at("v1")},
                       {"v2", f.roles.at("v2")},
                       {"w1", f.roles.at("w1")},
                       {"w2", f.roles.at("w2")}};
        ListAssignment sub;
        for (const Edge& e : reste) sub[e] = p.rem.at(e);
        EdgeColouring rest = colour_4pyramid(pyr, proles, sub);
        ext = p.out;
        for (const auto& [e, c] : rest) ext[e] = c;
    } else if (f.route == "fig6") {
        ext = colour_fig6_transfer(b, f.roles, rem, f.aux);
    } else {
        throw InvariantError("unknown extension route " + f.route);
    }

    trace.steps.push_back({StepKind::Gadget, f.route,
                           std::vector<int>(f.removed.begin(), f.removed.end()),
                           {}, depth});
    for (const auto& [e, c] : ext) {
        ensure(!colouring.count(e), "extension recoloured " + to_string(e));
        colouring[e] = c;
    }
}

EdgeColouring Solver::solve_component(const Graph& g0, const ListAssignment& l, Mode mode,
                                      int depth, const TreeDecomposition* hint) {
    std::vector<Frame> frames;
    Shrinking shr(g0);
    EdgeColouring base;
    bool first_iteration = true;

    // worklist of edges whose degree-sum condition may have broken
    std::deque<Edge> suspects;
    for (const Edge& e : g0.edges()) suspects.push_back(e);
    auto enqueue_around = [&](int v) {
        auto it = shr.adj.find(v);
        if (it == shr.adj.end()) return;
        for (int y : it->second) suspects.emplace_back(v, y);
    };
    auto violating = [&](const Edge& e) {
        int du = shr.degree(e.u), dv = shr.degree(e.v);
        return du + dv < std::max({mode.l, du, dv}) + 2;
    };

    while (shr.edge_count > 0) {
        bool cut = false;
        while (!suspects.empty()) {
            Edge e = suspects.front();
            suspects.pop_front();
            if (!shr.adj.count(e.u) || !shr.adj.at(e.u).count(e.v)) continue;
            if (!violating(e)) continue;
            Frame f;
            f.kind = Frame::Kind::EdgeCut;
            f.edge = e;
            frames.push_back(f);
            trace.steps.push_back({StepKind::EdgeReduction, to_string(e), {}, {e}, depth});
            shr.remove_edge(e);
            enqueue_around(e.u);
            enqueue_around(e.v);
            first_iteration = false;
            cut = true;
            break;
        }
        if (cut) continue;
        if (shr.edge_count == 0) break;

        Graph cur = shr.materialize();
        std::size_t size_before = cur.size();
        if (!is_connected(cur)) {
            base = solve_graph(cur, l, mode, depth + 1, nullptr);
            break;
        }
        std::optional<TreeDecomposition> restricted;
        if (first_iteration && hint) {
            TreeDecomposition r = restrict_to(*hint, cur);
            if (validate(cur, r).ok() && r.width() <= mode.k &&
                (!mode.path || r.tree_is_path()))
                restricted = std::move(r);
        }
        TreeDecomposition d = restricted ? *restricted : decompose_for(cur, mode);
        first_iteration = false;
        Substructure s = find_substructure(cur, d, mode.k, mode.l);

        Frame f;
        f.kind = Frame::Kind::Boundary;
        bool aux_route = false;

        if (mode.k == 3 && !mode.path) {
            RoleMap roles;
            CaseTag tag = classify_tw3(cur, s, &roles);
            if (tag == CaseTag::BigW) {
                VertexSet w1;
                for (int w : s.w_set) {
                    w1.insert(w);
                    if (w1.size() == 4) break;
                }
                Graph sub = boundary_graph(cur, w1);
                auto choice = choose_subset_k44(sub, bipartition_with_w(sub, w1));
                ensure(choice.has_value(), "hub-adjacent boundary cannot be the exceptional graph");
                f.removed = choice->w_subset;
                f.route = "vchoosable";
            } else {
                f.removed = s.w_set;
                f.removed.insert(s.hub);
                f.roles = roles;
                f.route = tag == CaseTag::Fig4A ? "fig4a" : tag == CaseTag::Fig4B ? "fig4b" : "fig4c";
            }
        } else if (mode.k == 3 && mode.path) {
            RoleMap roles;
            CaseTag tag = classify_pw3(cur, s, &roles);
            if (tag == CaseTag::BigW) {
                VertexSet w1;
                for (int w : s.w_set) {
                    w1.insert(w);
                    if (w1.size() == 3) break;
                }
                Graph sub = boundary_graph(cur, w1);
                auto choice = choose_subset_k33(sub, bipartition_with_w(sub, w1));
                f.removed = choice.w_subset;
                f.route = "vchoosable";
            } else {
                f.removed = s.w_set;
                f.removed.insert(s.hub);
                f.roles = roles;
                f.route = "fig5";
            }
        } else {
            RoleMap roles;
            auto [tag, w1] = classify_pw4(cur, s, &roles);
            if (tag == CaseTag::Pw4MinDeg3) {
                f.removed = w1;
                f.route = "mindeg3";
                f.hub = s.hub;
            } else if (tag == CaseTag::Pw4MaxDeg3) {
                Graph sub = boundary_graph(cur, w1);
                auto choice = choose_subset_k44(sub, bipartition_with_w(sub, w1));
                ensure(choice.has_value(), "hub-adjacent boundary cannot be the exceptional graph");
                f.removed = choice->w_subset;
                f.route = "vchoosable";
            } else if (tag == CaseTag::Pw4Twins) {
                f.removed = {roles.at("twin1"), roles.at("twin2")};
                f.route = "vchoosable";
            } else {
                // fig6: solve the auxiliary graph instead of the residue
                f.removed = w1;
                f.roles = roles;
                f.route = "fig6";
                aux_route = true;
            }
        }

        f.boundary = boundary_graph(cur, f.removed);
        if (!aux_route) {
            trace.steps.push_back({StepKind::Substructure, f.route,
                                   std::vector<int>(f.removed.begin(), f.removed.end()),
                                   {}, depth});
            frames.push_back(f);
            VertexSet touched = neighbourhood(cur, f.removed);
            for (int v : f.removed) shr.remove_vertex(v);
            for (int v : touched) enqueue_around(v);
            ensure(shr.size() < size_before, "reduction did not shrink the graph");
            continue;
        }

        Graph g1 = cur.without_vertices(f.removed);
        int p1 = fresh_vertex++;
        int p2 = fresh_vertex++;
        auto [gstar, lstar] = build_aux_graph(g1, f.roles, l, p1, p2);
        ensure(gstar.size() < cur.size(), "auxiliary graph must be smaller");
        trace.steps.push_back({StepKind::AuxGraph,
                               "p" + std::to_string(p1) + ",p" + std::to_string(p2),
                               std::vector<int>(f.removed.begin(), f.removed.end()),
                               {}, depth});
        EdgeColouring cstar = solve_graph(gstar, lstar, mode, depth + 1, nullptr);
        // restrict to G1 and keep the p-edge colours as the K_{2,4} witness
        for (const Edge& e : g1.edges()) base[e] = cstar.at(e);
        std::vector<int> qs{f.roles.at("v1"), f.roles.at("v2"), f.roles.at("v3"),
                            f.roles.at("u")};
        for (int j = 1; j <= 2; ++j)
            for (int i = 1; i <= 4; ++i)
                f.aux[{j, i}] = cstar.at(Edge(qs[i - 1], j == 1 ? p1 : p2));
        frames.push_back(f);
        break;
    }

    EdgeColouring colouring = base;
    for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
        const Frame& f = *it;
        if (f.kind == Frame::Kind::EdgeCut) {
            ColourSet avail = l.at(f.edge);
            for (int x : {f.edge.u, f.edge.v})
                for (int y : g0.neighbours(x)) {
                    auto cit = colouring.find(Edge(x, y));
                    if (cit != colouring.end()) erase_colour(avail, cit->second);
                }
            ensure(!avail.empty(), "edge reduction left no colour at " + to_string(f.edge));
            colouring[f.edge] = avail.front();
        } else {
            extend_boundary(g0, l, f, colouring, depth);
        }
    }
    return colouring;
}

EdgeColouring Solver::solve_graph(const Graph& g, const ListAssignment& l, Mode mode, int depth,
                                  const TreeDecomposition* hint) {
    EdgeColouring out;
    std::vector<Graph> comps = connected_components(g);
    for (const Graph& comp : comps) {
        const TreeDecomposition* h = comps.size() == 1 ? hint : nullptr;
        EdgeColouring part = solve_component(comp, l, mode, depth, h);
        for (const auto& [e, c] : part) out[e] = c;
    }
    return out;
}

SolveResult solve(const SolveRequest& req) {
    const Graph& g = req.graph;
    for (const Edge& e : g.edges()) {
        auto it = req.lists.find(e);
        if (it == req.lists.end()) throw InputError("no list for edge " + to_string(e));
        if (it->second.empty()) throw InputError("empty list at edge " + to_string(e));
    }

    SolveResult result;
    int fresh = 0;
    for (int v : g.vertices()) fresh = std::max(fresh, v + 1);
    Solver solver{result.trace, fresh};

    if (req.decomposition) {
        ValidationReport rep = validate(g, *req.decomposition);
        if (!rep.ok()) throw InputError("supplied decomposition invalid: " + rep.joined());
    }

    if (req.regime == Regime::ThreeTree) {
        if (!is_three_tree(g)) throw InputError("regime 3tree needs a 3-tree");
        int delta = g.max_degree();
        char cat_id = 0;
        if (delta <= 6)
            if (auto m = match_small_3tree(g)) cat_id = *m;
        int chi;
        if (delta >= 6) {
            chi = delta;
        } else {
            ensure(cat_id != 0, "every 3-tree of maximum degree <= 5 is in the catalogue");
            chi = catalogue_chromatic_index(cat_id);
        }
        for (const Edge& e : g.edges())
            if (static_cast<int>(req.lists.at(e).size()) < chi)
                throw InputError("list at " + to_string(e) + " smaller than chromatic index " +
                                 std::to_string(chi));
        if (delta >= 7) {
            result.colouring = solver.solve_graph(g, req.lists, mode_for(Regime::Tw3L7), 0,
                                                  req.decomposition ? &*req.decomposition : nullptr);
        } else if (cat_id != 0) {
            result.trace.steps.push_back({StepKind::Catalogue, std::string(1, cat_id), {}, {}, 0});
            result.colouring = colour_catalogue(g, cat_id, req.lists);
        } else {
            result.colouring = solver.solve_graph(g, req.lists, mode_for(Regime::Pw3L6), 0, nullptr);
        }
    } else {
        Mode mode = mode_for(req.regime);
        for (const Edge& e : g.edges()) {
            int need = std::max({mode.l, g.degree(e.u), g.degree(e.v)});
            if (static_cast<int>(req.lists.at(e).size()) < need)
                throw InputError("list at edge " + to_string(e) + " smaller than max(l,deg,deg) = " +
                                 std::to_string(need));
        }
        if (req.decomposition && req.decomposition->width() > mode.k)
            throw InputError("supplied decomposition too wide for the regime");
        if (req.decomposition && mode.path &&
            req.decomposition->shape != TreeDecomposition::Shape::path)
            throw InputError("regime needs a path decomposition");
        result.colouring = solver.solve_graph(g, req.lists, mode, 0,
                                              req.decomposition ? &*req.decomposition : nullptr);
    }

    ValidationReport rep = verify_colouring(g, req.lists, result.colouring);
    ensure(rep.ok(), "solver output failed verification: " + rep.joined());
    return result;
}

}  // namespace listec
