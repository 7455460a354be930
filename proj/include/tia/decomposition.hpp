#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tia/graph.hpp"

namespace tia {

struct TreeDecomposition {
  Graph host;                                  // the decomposed graph
  std::vector<VertexSet> bags;                 // one per tree node
  std::vector<std::pair<int, int>> tree_edges; // between node indices

  int node_count() const { return static_cast<int>(bags.size()); }
};

struct ValidationResult {
  bool valid = true;
  std::string violation;  // first failed condition, human readable
};

// checks: tree shape, vertex coverage, edge coverage, connected traces
ValidationResult validate_decomposition(const TreeDecomposition& td);

// max over bags of the bag's measure in the host graph; -1 width on no bags
int independence_of_decomposition(const TreeDecomposition& td);
int clique_cover_of_decomposition(const TreeDecomposition& td);
int width_of_decomposition(const TreeDecomposition& td);

// drops bags nested in a tree neighbor, then renumbers nodes by sorted bag
// contents; output is the deterministic form used everywhere
TreeDecomposition canonicalize_decomposition(const TreeDecomposition& td);

// single bag holding every vertex
TreeDecomposition trivial_decomposition(const Graph& g);

// bags are the fill-in cliques of the elimination order (a clique tree when
// the order is perfect); always a valid decomposition
TreeDecomposition decomposition_from_elimination_order(const Graph& g,
                                                       const std::vector<int>& order);

// PACE-style .td text
std::string write_td(const TreeDecomposition& td);
TreeDecomposition read_td(const std::string& text, const Graph& host);

}  // namespace tia
