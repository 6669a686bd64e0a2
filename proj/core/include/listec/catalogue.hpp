#pragma once

#include <optional>
#include <vector>

#include "listec/graph.hpp"

namespace listec {

// The nine 3-trees of maximum degree <= 6 that need fixed colouring
// scripts, identified 'a'..'i'.
const std::vector<char>& catalogue_ids();
const Graph& catalogue_graph(char id);
int catalogue_chromatic_index(char id);

// Proper colouring of g (isomorphic to catalogue_graph(id)) from lists of
// size >= catalogue_chromatic_index(id).
EdgeColouring colour_catalogue(const Graph& g, char id, const ListAssignment& l);

}  // namespace listec
