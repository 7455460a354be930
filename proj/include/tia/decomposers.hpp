#pragma once

#include <string>

#include "tia/decomposition.hpp"
#include "tia/graph.hpp"
#include "tia/oracles.hpp"

// Constructive decomposers. Each returns the decomposition together with the
// guarantee it was built under; the measured value is re-checked against that
// guarantee on construction and a violation throws Error.

namespace tia {

enum class BoundKind { alpha, theta, width };

struct BoundedDecomposition {
  TreeDecomposition td;
  BoundKind kind = BoundKind::alpha;
  int bound_value = 0;      // measured on td by the oracles
  int paper_bound = 0;      // guarantee computed from the input
  std::string provenance;   // registry tag, e.g. "thm1.5"
};

// bags are cover plus one leftover vertex each, strung along a path;
// cover must be a vertex cover of g
BoundedDecomposition star_decomposition(const Graph& g, VertexSet cover);

// width-optimal decomposition of the clique side with the whole independent
// side added to every bag; part must be a valid k-split of g
BoundedDecomposition split_decomposition(const Graph& g, const SplitPartition& part);

// deletion sets for K_{1,t}-free O_k-free graphs: removing s1 | s2 leaves a
// forest and alpha(G[s2]) <= 10 (k-1)(t-1)
struct FvsWitness {
  VertexSet s1, s2;
  int k = 0;
  int t = 0;
};

FvsWitness fvs_witness(const Graph& g, int k, int t);
BoundedDecomposition fvs_decomposition(const Graph& g, const FvsWitness& w);

// exact-value decomposition of a (P_3+P_1)-free graph with at least one edge
BoundedDecomposition p3p1_decomposition(const Graph& g);

// clique-cover-bounded decomposition of a {P_4+P_1, C_4}-free graph
BoundedDecomposition tree_theta_3_decomposition(const Graph& g);

}  // namespace tia
