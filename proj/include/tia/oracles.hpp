#pragma once

#include <optional>
#include <vector>

#include "tia/decomposition.hpp"
#include "tia/graph.hpp"

// Exact oracles at desk scale. Branch-and-bound routines cap at
// caps().size_cap; the subset-DP decomposition oracles cap at
// caps().oracle_cap (treewidth at caps().treewidth_cap).

namespace tia {

int independence_number(const Graph& g);                 // alpha
int clique_number(const Graph& g);                       // omega
int chromatic_number(const Graph& g);                    // chi
int clique_cover_number(const Graph& g);                 // theta

// lexicographically smallest maximum independent set / maximum clique
VertexSet maximum_independent_set(const Graph& g);
VertexSet maximum_clique(const Graph& g);

// largest s such that g has an induced complete bipartite K_{s,s};
// 0 when g has no edge
int induced_biclique_number(const Graph& g);

// minimum feedback vertex set, lexicographically smallest witness
VertexSet minimum_feedback_vertex_set(const Graph& g);

// reverse of a maximum-cardinality search order; a perfect elimination
// order exactly when g is chordal
std::vector<int> mcs_elimination_order(const Graph& g);
bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order);
bool is_chordal_graph(const Graph& g);

// clique tree of a chordal graph (bags are maximal cliques)
TreeDecomposition chordal_clique_tree(const Graph& g);

struct DecompositionValue {
  int value = 0;
  TreeDecomposition decomposition;
};

// Minimum over all tree decompositions of the max bag measure, computed by
// minimizing over vertex elimination orders with a subset DP. Elimination
// fill-ins realize every minimal chordal supergraph, and each bag measure
// here is monotone under taking subsets, so the optimum over orders equals
// the optimum over all chordal supergraphs and hence over all tree
// decompositions. Cross-checked against direct enumeration in the tests.
DecompositionValue tree_independence_number(const Graph& g);
DecompositionValue tree_clique_cover_number(const Graph& g);
int treewidth(const Graph& g);
TreeDecomposition treewidth_decomposition(const Graph& g);

struct SplitPartition {
  int k = 0;
  VertexSet clique_side;       // induced clique number <= k
  VertexSet independent_side;  // induced independence number <= k
};

// minimum k over bipartitions (A,B) of V with omega(G[A]) <= k and
// alpha(G[B]) <= k; ties take the lexicographically smallest A
SplitPartition splitness(const Graph& g);

}  // namespace tia
