#include "listec/graph.hpp"

#include <algorithm>
#include <deque>

namespace listec {

std::string to_string(const Edge& e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

bool contains(const ColourSet& s, int c) {
    return std::binary_search(s.begin(), s.end(), c);
}

ColourSet set_minus(const ColourSet& a, const ColourSet& b) {
    ColourSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ColourSet set_intersect(const ColourSet& a, const ColourSet& b) {
    ColourSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ColourSet set_union(const ColourSet& a, const ColourSet& b) {
    ColourSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void erase_colour(ColourSet& s, int c) {
    auto it = std::lower_bound(s.begin(), s.end(), c);
    if (it != s.end() && *it == c) s.erase(it);
}

void insert_colour(ColourSet& s, int c) {
    auto it = std::lower_bound(s.begin(), s.end(), c);
    if (it == s.end() || *it != c) s.insert(it, c);
}

ColourSet iota_set(int lo, int hi) {
    ColourSet out;
    for (int c = lo; c <= hi; ++c) out.push_back(c);
    return out;
}

Graph::Graph(const std::vector<int>& vertices, const std::vector<Edge>& edges) {
    vertices_ = vertices;
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    for (int v : vertices_) {
        if (v < 0) throw InputError("vertex ids must be non-negative, got " + std::to_string(v));
        adj_[v] = {};
    }
    edges_ = edges;
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i + 1 < edges_.size(); ++i)
        if (edges_[i] == edges_[i + 1])
            throw InputError("parallel edge " + to_string(edges_[i]));
    for (const Edge& e : edges_) {
        if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
        if (!has_vertex(e.u) || !has_vertex(e.v))
            throw InputError("edge " + to_string(e) + " references unknown vertex");
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& [v, nb] : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

const std::vector<int>& Graph::neighbours(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw InputError("unknown vertex " + std::to_string(v));
    return it->second;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& [v, nb] : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

std::vector<Edge> Graph::incident_edges(int v) const {
    std::vector<Edge> out;
    for (int w : neighbours(v)) out.emplace_back(v, w);
    std::sort(out.begin(), out.end());
    return out;
}

Graph Graph::without_edge(const Edge& e) const {
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (const Edge& f : edges_)
        if (!(f == e)) es.push_back(f);
    return Graph(vertices_, es);
}

Graph Graph::without_vertices(const VertexSet& w) const {
    std::vector<int> vs;
    for (int v : vertices_)
        if (!w.count(v)) vs.push_back(v);
    std::vector<Edge> es;
    for (const Edge& e : edges_)
        if (!w.count(e.u) && !w.count(e.v)) es.push_back(e);
    return Graph(vs, es);
}

Graph Graph::with_added(const std::vector<int>& vertices, const std::vector<Edge>& edges) const {
    std::vector<int> vs = vertices_;
    vs.insert(vs.end(), vertices.begin(), vertices.end());
    std::vector<Edge> es = edges_;
    es.insert(es.end(), edges.begin(), edges.end());
    return Graph(vs, es);
}

VertexSet neighbourhood(const Graph& g, const VertexSet& w) {
    VertexSet out;
    for (int x : w) {
        if (!g.has_vertex(x)) throw InputError("unknown vertex " + std::to_string(x));
        for (int y : g.neighbours(x))
            if (!w.count(y)) out.insert(y);
    }
    return out;
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() <= 1;
}

std::vector<Graph> connected_components(const Graph& g) {
    std::vector<Graph> out;
    std::set<int> seen;
    for (int start : g.vertices()) {
        if (seen.count(start)) continue;
        std::deque<int> queue{start};
        VertexSet comp;
        seen.insert(start);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            comp.insert(v);
            for (int w : g.neighbours(v))
                if (!seen.count(w)) {
                    seen.insert(w);
                    queue.push_back(w);
                }
        }
        std::vector<int> vs(comp.begin(), comp.end());
        std::vector<Edge> es;
        for (const Edge& e : g.edges())
            if (comp.count(e.u)) es.push_back(e);
        out.emplace_back(vs, es);
    }
    return out;
}

Graph induced_delete(const Graph& g, const VertexSet& w) {
    for (int x : w)
        if (!g.has_vertex(x)) throw InputError("unknown vertex " + std::to_string(x));
    return g.without_vertices(w);
}

Graph boundary_graph(const Graph& g, const VertexSet& w) {
    for (int x : w)
        if (!g.has_vertex(x)) throw InputError("unknown vertex " + std::to_string(x));
    VertexSet verts = w;
    for (int x : neighbourhood(g, w)) verts.insert(x);
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
        if (w.count(e.u) || w.count(e.v)) es.push_back(e);
    return Graph(std::vector<int>(verts.begin(), verts.end()), es);
}

ListAssignment remaining_lists(const Graph& g, const ListAssignment& l,
                               const EdgeColouring& c, const std::vector<Edge>& f) {
    // c must be proper on its domain
    for (const auto& [e, col] : c) {
        for (int x : {e.u, e.v})
            for (int y : g.neighbours(x)) {
                Edge o(x, y);
                if (o == e) continue;
                auto it = c.find(o);
                if (it != c.end() && it->second == col)
                    throw ContractError("colouring improper at " + to_string(e) + " / " + to_string(o));
            }
    }
    ListAssignment out;
    for (const Edge& e : f) {
        if (c.count(e)) throw ContractError("edge " + to_string(e) + " of F is already coloured");
        auto it = l.find(e);
        if (it == l.end()) throw ContractError("edge " + to_string(e) + " has no list");
        ColourSet rem = it->second;
        for (int x : {e.u, e.v})
            for (int y : g.neighbours(x)) {
                Edge o(x, y);
                if (o == e) continue;
                auto cit = c.find(o);
                if (cit != c.end()) erase_colour(rem, cit->second);
            }
        out[e] = rem;
    }
    return out;
}

namespace {

bool extend_isomorphism(const Graph& g, const Graph& h, std::size_t idx,
                        std::map<int, int>& fwd, std::map<int, int>& bwd) {
    if (idx == g.vertex_count()) return true;
    int v = g.vertices()[idx];
    for (int w : h.vertices()) {
        if (bwd.count(w)) continue;
        if (h.degree(w) != g.degree(v)) continue;
        bool ok = true;
        for (int x : g.neighbours(v)) {
            auto it = fwd.find(x);
            if (it != fwd.end() && !h.has_edge(Edge(w, it->second))) { ok = false; break; }
        }
        if (ok) {
            // non-neighbours must stay non-adjacent
            for (const auto& [x, y] : fwd) {
                bool ga = g.has_edge(Edge(v, x));
                bool ha = h.has_edge(Edge(w, y));
                if (ga != ha) { ok = false; break; }
            }
        }
        if (!ok) continue;
        fwd[v] = w;
        bwd[w] = v;
        if (extend_isomorphism(g, h, idx + 1, fwd, bwd)) return true;
        fwd.erase(v);
        bwd.erase(w);
    }
    return false;
}

}  // namespace

std::optional<std::map<int, int>> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.vertex_count() > 12 || h.vertex_count() > 12)
        throw CapacityError("find_isomorphism guarded to 12 vertices");
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;
    std::vector<int> dg, dh;
    for (int v : g.vertices()) dg.push_back(g.degree(v));
    for (int v : h.vertices()) dh.push_back(h.degree(v));
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return std::nullopt;
    std::map<int, int> fwd, bwd;
    if (extend_isomorphism(g, h, 0, fwd, bwd)) return fwd;
    return std::nullopt;
}

}  // namespace listec
