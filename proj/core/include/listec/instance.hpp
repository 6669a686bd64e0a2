#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "listec/decomposition.hpp"
#include "listec/graph.hpp"

namespace listec {

// Line-oriented instance format with a versioned header:
//
//   listec v1
//   regime tw3
//   vertices 1 2 3 4
//   edge 1-2 : 1 2 3 7
//   decomp-shape tree
//   decomp-bag 0 : 1 2 3
//   decomp-edge 0-1
//
// Edge keys are written min-max; '#' starts a comment; unknown fields are
// rejected.
struct InstanceFile {
    Graph graph;
    ListAssignment lists;
    std::string regime = "auto";
    std::optional<TreeDecomposition> decomposition;

    bool operator==(const InstanceFile& o) const {
        return graph.vertices() == o.graph.vertices() && graph.edges() == o.graph.edges() &&
               lists == o.lists && regime == o.regime &&
               decomposition.has_value() == o.decomposition.has_value() &&
               (!decomposition ||
                (decomposition->bags == o.decomposition->bags &&
                 decomposition->tree_edges == o.decomposition->tree_edges &&
                 decomposition->shape == o.decomposition->shape));
    }
};

InstanceFile parse_instance(std::istream& in);
InstanceFile parse_instance_file(const std::string& path);
std::string emit_instance(const InstanceFile& inst);

EdgeColouring parse_colouring(std::istream& in);
EdgeColouring parse_colouring_file(const std::string& path);
std::string emit_colouring(const EdgeColouring& c);

// DOT text; coloured edges are labelled, uncoloured ones dashed.
std::string export_dot(const Graph& g, const EdgeColouring* colouring);

}  // namespace listec
