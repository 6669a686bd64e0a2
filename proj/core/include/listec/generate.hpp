#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "listec/decomposition.hpp"
#include "listec/graph.hpp"
#include "listec/solver.hpp"

namespace listec {

enum class InstanceKind { KTree3, SubTw3, Pw3, Pw4ish };

std::optional<InstanceKind> instance_kind_from_string(const std::string& s);
std::string to_string(InstanceKind k);

struct GeneratedInstance {
    Graph graph;
    ListAssignment lists;
    Regime regime = Regime::Tw3L7;
    std::optional<TreeDecomposition> decomposition;
};

// Random instances with matching decompositions and lists of the
// regime-minimum sizes drawn from {1..2*max_degree}.
//   ktree3  - a 3-tree built by joining fresh vertices to random triangles
//   sub-tw3 - a random edge-subset of a 3-tree with max degree >= 7 (tw3)
//   pw3     - an edge-subset of a width-3 interval 3-tree (pw3, n <= 24)
//   pw4-ish - an edge-subset of a width-4 interval construction (pw4, n <= 24)
GeneratedInstance generate_instance(InstanceKind kind, int n, std::uint64_t seed);

// A random (4.3)-pruned subgraph instance for the structural suite: every
// edge satisfies deg(v)+deg(w) >= max(l,deg(v),deg(w))+2.
GeneratedInstance generate_pruned(InstanceKind kind, int n, int l, std::uint64_t seed);

}  // namespace listec
