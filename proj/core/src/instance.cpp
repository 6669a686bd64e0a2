#include "listec/instance.hpp"

#include <fstream>
#include <sstream>

namespace listec {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string t;
    while (in >> t) {
        if (t[0] == '#') break;
        out.push_back(t);
    }
    return out;
}

Edge parse_edge_key(const std::string& s, const char* what) {
    auto dash = s.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 >= s.size())
        throw InputError(std::string(what) + ": bad edge key '" + s + "'");
    int a, b;
    try {
        a = std::stoi(s.substr(0, dash));
        b = std::stoi(s.substr(dash + 1));
    } catch (const std::exception&) {
        throw InputError(std::string(what) + ": bad edge key '" + s + "'");
    }
    if (a >= b) throw InputError(std::string(what) + ": edge key must be min-max, got '" + s + "'");
    return Edge(a, b);
}

}  // namespace

InstanceFile parse_instance(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || tokens(line) != std::vector<std::string>{"listec", "v1"})
        throw InputError("missing 'listec v1' header");

    std::vector<int> vertices;
    std::vector<Edge> edges;
    ListAssignment lists;
    std::string regime = "auto";
    bool have_decomp = false;
    TreeDecomposition d;
    int expected_bag = 0;

    while (std::getline(in, line)) {
        auto t = tokens(line);
        if (t.empty()) continue;
        const std::string& key = t[0];
        if (key == "regime") {
            if (t.size() != 2) throw InputError("regime needs one value");
            regime = t[1];
        } else if (key == "vertices") {
            for (std::size_t i = 1; i < t.size(); ++i) vertices.push_back(std::stoi(t[i]));
        } else if (key == "edge") {
            if (t.size() < 4 || t[2] != ":")
                throw InputError("edge line needs 'edge u-v : colours...'");
            Edge e = parse_edge_key(t[1], "edge");
            if (lists.count(e)) throw InputError("duplicate edge " + to_string(e));
            ColourSet s;
            for (std::size_t i = 3; i < t.size(); ++i) {
                int c = std::stoi(t[i]);
                if (c < 0) throw InputError("colours must be non-negative, got " + t[i]);
                insert_colour(s, c);
            }
            if (s.empty()) throw InputError("empty list at edge " + to_string(e));
            edges.push_back(e);
            lists[e] = s;
        } else if (key == "decomp-shape") {
            have_decomp = true;
            if (t.size() != 2 || (t[1] != "tree" && t[1] != "path"))
                throw InputError("decomp-shape must be tree or path");
            d.shape = t[1] == "path" ? TreeDecomposition::Shape::path
                                     : TreeDecomposition::Shape::tree;
        } else if (key == "decomp-bag") {
            have_decomp = true;
            if (t.size() < 3 || t[2] != ":")
                throw InputError("decomp-bag line needs 'decomp-bag i : vertices...'");
            if (std::stoi(t[1]) != expected_bag)
                throw InputError("decomp-bag indices must be dense from 0");
            ++expected_bag;
            std::vector<int> bag;
            for (std::size_t i = 3; i < t.size(); ++i) bag.push_back(std::stoi(t[i]));
            std::sort(bag.begin(), bag.end());
            bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
            d.bags.push_back(bag);
        } else if (key == "decomp-edge") {
            have_decomp = true;
            if (t.size() != 2) throw InputError("decomp-edge needs one value a-b");
            Edge e = parse_edge_key(t[1], "decomp-edge");
            d.tree_edges.emplace_back(e.u, e.v);
        } else {
            throw InputError("unknown field '" + key + "'");
        }
    }

    InstanceFile inst;
    inst.graph = Graph(vertices, edges);
    inst.lists = lists;
    inst.regime = regime;
    if (have_decomp) {
        for (auto [a, b] : d.tree_edges)
            if (a < 0 || a >= d.node_count() || b < 0 || b >= d.node_count())
                throw InputError("decomp-edge references unknown bag");
        inst.decomposition = d;
    }
    return inst;
}

InstanceFile parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return parse_instance(in);
}

std::string emit_instance(const InstanceFile& inst) {
    std::ostringstream out;
    out << "listec v1\n";
    out << "regime " << inst.regime << "\n";
    out << "vertices";
    for (int v : inst.graph.vertices()) out << ' ' << v;
    out << "\n";
    for (const Edge& e : inst.graph.edges()) {
        out << "edge " << to_string(e) << " :";
        for (int c : inst.lists.at(e)) out << ' ' << c;
        out << "\n";
    }
    if (inst.decomposition) {
        const TreeDecomposition& d = *inst.decomposition;
        out << "decomp-shape "
            << (d.shape == TreeDecomposition::Shape::path ? "path" : "tree") << "\n";
        for (int t = 0; t < d.node_count(); ++t) {
            out << "decomp-bag " << t << " :";
            for (int v : d.bags[t]) out << ' ' << v;
            out << "\n";
        }
        for (auto [a, b] : d.tree_edges)
            out << "decomp-edge " << std::min(a, b) << "-" << std::max(a, b) << "\n";
    }
    return out.str();
}

EdgeColouring parse_colouring(std::istream& in) {
    EdgeColouring out;
    std::string line;
    while (std::getline(in, line)) {
        auto t = tokens(line);
        if (t.empty()) continue;
        if (t.size() != 2 || t[0].back() != ':')
            throw InputError("colouring line must be 'u-v: colour'");
        Edge e = parse_edge_key(t[0].substr(0, t[0].size() - 1), "colouring");
        out[e] = std::stoi(t[1]);
    }
    return out;
}

EdgeColouring parse_colouring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return parse_colouring(in);
}

std::string emit_colouring(const EdgeColouring& c) {
    std::ostringstream out;
    for (const auto& [e, col] : c) out << to_string(e) << ": " << col << "\n";
    return out.str();
}

std::string export_dot(const Graph& g, const EdgeColouring* colouring) {
    std::ostringstream out;
    out << "graph listec {\n";
    for (int v : g.vertices()) out << "  " << v << ";\n";
    for (const Edge& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        if (colouring) {
            auto it = colouring->find(e);
            if (it != colouring->end())
                out << " [label=\"" << it->second << "\"]";
            else
                out << " [style=dashed]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace listec
