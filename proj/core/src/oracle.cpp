#include "listec/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace listec {

bool guard_override() {
    const char* v = std::getenv("LISTEC_GUARD_OVERRIDE");
    return v != nullptr && *v != '\0' && std::string(v) != "0";
}

std::string ValidationReport::joined() const {
    std::string out;
    for (const auto& s : violations) {
        if (!out.empty()) out += "; ";
        out += s;
    }
    return out;
}

namespace {

struct Search {
    const Graph& g;
    std::vector<Edge> edges;
    std::map<Edge, int> index;
    std::vector<std::vector<int>> adjacent;  // indices of adjacent edges
    std::vector<ColourSet> remaining;
    std::vector<int> assigned;  // colour or -1
    long nodes = 0;

    explicit Search(const Graph& graph, const ListAssignment& l) : g(graph) {
        edges = g.edges();
        for (std::size_t i = 0; i < edges.size(); ++i) index[edges[i]] = static_cast<int>(i);
        adjacent.resize(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j)
                if (edges[i].adjacent_to(edges[j])) {
                    adjacent[i].push_back(static_cast<int>(j));
                    adjacent[j].push_back(static_cast<int>(i));
                }
        remaining.resize(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto it = l.find(edges[i]);
            if (it == l.end()) throw ContractError("edge " + to_string(edges[i]) + " has no list");
            remaining[i] = it->second;
        }
        assigned.assign(edges.size(), -1);
    }

    bool run() {
        ++nodes;
        int best = -1;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (assigned[i] >= 0) continue;
            if (best < 0 || remaining[i].size() < remaining[best].size()) best = static_cast<int>(i);
        }
        if (best < 0) return true;
        if (remaining[best].empty()) return false;
        ColourSet options = remaining[best];
        for (int c : options) {
            assigned[best] = c;
            std::vector<int> touched;
            bool dead = false;
            for (int j : adjacent[best]) {
                if (assigned[j] >= 0) continue;
                if (contains(remaining[j], c)) {
                    erase_colour(remaining[j], c);
                    touched.push_back(j);
                    if (remaining[j].empty()) dead = true;
                }
            }
            if (!dead && run()) return true;
            for (int j : touched) insert_colour(remaining[j], c);
            assigned[best] = -1;
        }
        return false;
    }
};

}  // namespace

OracleResult exists_colouring(const Graph& g, const ListAssignment& l) {
    if (g.edge_count() > 40 && !guard_override())
        throw CapacityError("exists_colouring guarded to 40 edges");
    OracleResult res;
    Search s(g, l);
    if (s.run()) {
        res.colourable = true;
        EdgeColouring witness;
        for (std::size_t i = 0; i < s.edges.size(); ++i) witness[s.edges[i]] = s.assigned[i];
        res.witness = witness;
    }
    res.nodes_expanded = s.nodes;
    return res;
}

namespace {

// Enumerate k-subsets of {1..limit} in lexicographic order.
void k_subsets(int k, int limit, std::vector<ColourSet>& out) {
    ColourSet cur;
    struct Rec {
        int k, limit;
        std::vector<ColourSet>& out;
        ColourSet& cur;
        void go(int start) {
            if (static_cast<int>(cur.size()) == k) {
                out.push_back(cur);
                return;
            }
            int need = k - static_cast<int>(cur.size());
            for (int c = start; c + need - 1 <= limit; ++c) {
                cur.push_back(c);
                go(c + 1);
                cur.pop_back();
            }
        }
    } rec{k, limit, out, cur};
    rec.go(1);
}

struct ChoosabilitySearch {
    const Graph& g;
    int k, universe;
    std::vector<Edge> edges;
    ListAssignment current;
    ChoosabilityResult result;

    // Canonical enumeration: a list may introduce new colours only as the
    // next unused integers, which quotients out colour permutations.
    bool enumerate(std::size_t idx, int max_used) {
        if (idx == edges.size()) {
            ++result.assignments_checked;
            OracleResult r = exists_colouring(g, current);
            if (!r.colourable) {
                result.choosable = false;
                result.counterexample = current;
                return false;  // stop: lexicographically first failure
            }
            return true;
        }
        int limit = std::min(universe, max_used + k);
        std::vector<ColourSet> lists;
        k_subsets(k, limit, lists);
        for (const ColourSet& s : lists) {
            // new colours must be exactly max_used+1..max_used+t
            int expect = max_used + 1;
            bool canonical = true;
            for (int c : s)
                if (c > max_used) {
                    if (c != expect) { canonical = false; break; }
                    ++expect;
                }
            if (!canonical) continue;
            current[edges[idx]] = s;
            if (!enumerate(idx + 1, expect - 1)) return false;
        }
        current.erase(edges[idx]);
        return true;
    }
};

}  // namespace

ChoosabilityResult is_k_choosable(const Graph& g, int k, int universe) {
    if ((g.edge_count() > 9 || universe > 2 * k) && !guard_override())
        throw CapacityError("is_k_choosable guarded to 9 edges and universe <= 2k");
    ChoosabilitySearch s{g, k, universe, g.edges(), {}, {}};
    s.result.choosable = true;
    s.enumerate(0, 0);
    return s.result;
}

ValidationReport verify_colouring(const Graph& g, const ListAssignment& l,
                                  const EdgeColouring& c) {
    ValidationReport rep;
    for (const Edge& e : g.edges()) {
        auto it = c.find(e);
        if (it == c.end()) {
            rep.violations.push_back("uncoloured edge " + to_string(e));
            continue;
        }
        auto lit = l.find(e);
        if (lit != l.end() && !contains(lit->second, it->second))
            rep.violations.push_back("edge " + to_string(e) + " coloured " +
                                     std::to_string(it->second) + " outside its list");
    }
    for (const auto& [e, col] : c)
        if (!g.has_edge(e)) rep.violations.push_back("coloured non-edge " + to_string(e));
    for (int v : g.vertices()) {
        std::map<int, Edge> seen;  // colour -> first edge at v
        for (int y : g.neighbours(v)) {
            Edge e(v, y);
            auto it = c.find(e);
            if (it == c.end()) continue;
            // distinct edges share at most one vertex, so each clashing
            // pair is seen exactly once
            auto [pos, fresh] = seen.emplace(it->second, e);
            if (!fresh)
                rep.violations.push_back("adjacent edges " + to_string(pos->second) + " and " +
                                         to_string(e) + " share colour " +
                                         std::to_string(it->second));
        }
    }
    return rep;
}

}  // namespace listec
