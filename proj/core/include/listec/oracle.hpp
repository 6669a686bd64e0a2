#pragma once

#include <optional>
#include <string>
#include <vector>

#include "listec/graph.hpp"

namespace listec {

struct OracleResult {
    bool colourable = false;
    std::optional<EdgeColouring> witness;
    long nodes_expanded = 0;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string joined() const;
};

// Exact decision by backtracking with most-constrained-edge ordering and
// forward checking. Guarded to |E| <= 40 unless LISTEC_GUARD_OVERRIDE is set.
OracleResult exists_colouring(const Graph& g, const ListAssignment& l);

struct ChoosabilityResult {
    bool choosable = false;
    std::optional<ListAssignment> counterexample;  // lexicographically first failure
    long assignments_checked = 0;
};

// Enumerates all assignments of k-subsets of {1..universe} up to
// colour-permutation symmetry. Guarded to |E| <= 9, universe <= 2k.
ChoosabilityResult is_k_choosable(const Graph& g, int k, int universe);

// Reports improper adjacent pairs, off-list assignments and uncoloured edges.
ValidationReport verify_colouring(const Graph& g, const ListAssignment& l,
                                  const EdgeColouring& c);

bool guard_override();

}  // namespace listec
