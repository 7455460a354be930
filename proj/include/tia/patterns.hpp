// Small named pattern graphs, induced/subgraph containment, and the
// class-expression filter used by the CLI and the sweeps.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tia/graph.hpp"

namespace tia {

// Parses a pattern expression into a concrete graph.
//
//   P<k> C<k> W<k>      path / cycle / wheel
//   K<n>                complete;  K<n>-e  complete minus an edge
//   K<a>,<b>,...        complete multipartite with the given part sizes
//   claw paw diamond gem bull house butterfly net
//   <m><atom>           m disjoint copies, e.g. 2K2
//   <atom>+<atom>       disjoint union, e.g. P3+P1
//
// Underscores, braces and spaces are ignored, so K_{1,3} works too.
// Throws FormatError for anything unrecognized.
Graph pattern_graph(const std::string& expression);

// First (lexicographically smallest) vertex set inducing a copy of the
// pattern, if any.
std::optional<VertexSet> find_induced(const Graph& g, const Graph& pattern);
bool contains_induced(const Graph& g, const Graph& pattern);

// Same, but as a (not necessarily induced) subgraph.
std::optional<VertexSet> find_subgraph(const Graph& g, const Graph& pattern);
bool contains_subgraph(const Graph& g, const Graph& pattern);

bool is_triangle_free(const Graph& g);
bool is_bipartite(const Graph& g);
// Odd cycle witnessing non-bipartiteness (empty when bipartite).
std::optional<std::vector<int>> odd_cycle(const Graph& g);

// Complement is a disjoint union of cliques.
bool is_complete_multipartite(const Graph& g);
// Part sizes, descending, when the graph is complete multipartite.
std::optional<std::vector<int>> multipartite_parts(const Graph& g);

// Structural paw-freeness check: every component is triangle-free or
// complete multipartite.  Must agree with the generic induced test; the
// tests compare the two routes.
bool is_paw_free_structured(const Graph& g);

// No vertex has t pairwise nonadjacent neighbors.
bool is_k1t_free(const Graph& g, int t);
// Witness when not: the star center followed by t independent leaves.
std::optional<std::vector<int>> find_k1t(const Graph& g, int t);

// Class expressions: atoms joined by '&'.  Atoms:
//   chordal | bipartite | connected | has-edge | triangle-free
//   complete-multipartite
//   <pattern>-free                 no induced copy
//   <pattern>-subgraph-free        no subgraph copy
//   <pattern>-induced-minor-free   no induced minor copy
//   O<k>-free                      no k vertex-disjoint, pairwise
//                                  nonadjacent induced cycles
//   K1,<t>-free                    handled structurally
struct ClassAtomResult {
  std::string atom;
  bool holds = false;
  std::string witness;  // set when holds is false and a witness exists
};

struct ClassReport {
  std::string expression;
  std::vector<ClassAtomResult> atoms;
  bool all_hold() const;
};

ClassReport classify(const Graph& g, const std::string& expression);
bool in_class(const Graph& g, const std::string& expression);

}  // namespace tia
