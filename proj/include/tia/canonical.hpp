#pragma once

#include <string>

#include "tia/graph.hpp"

namespace tia {

// Relabeling of g minimizing the graph6 bit string over all vertex
// permutations; equal strings exactly characterize isomorphism.
Graph canonical_graph(const Graph& g);

// graph6 encoding of canonical_graph(g)
std::string canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace tia
