// Recognizers for the three-path structures (prism, pyramid, theta) and
// wheels, plus independent-cycle packing and induced-minor search.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tia/graph.hpp"

namespace tia {

// A way the whole input graph realizes one of the four structures.
//
//   prism    three vertex-disjoint chordless paths of length >= 1 between
//            two triangles, no other edges; long iff some path length >= 2
//   pyramid  apex joined by three chordless paths (at most one of length 1,
//            sharing only the apex) to a triangle, no other edges
//   theta    two nonadjacent ends joined by three internally disjoint
//            chordless paths of length >= 2, no other edges
//   wheel    chordless rim cycle of length >= 4 plus a center with at
//            least three rim neighbors; sectors are the rim subpaths
//            between consecutive spokes; broken iff at least two sectors
//            have length >= 2
struct ObstructionMatch {
  std::string kind;          // "prism" | "pyramid" | "theta" | "wheel"
  bool long_prism = false;   // prism only
  bool broken = false;       // wheel only
  std::vector<int> lengths;  // path lengths sorted; wheels: canonical cyclic
                             // sector sequence
  std::vector<std::vector<int>> paths;  // role assignment for the three paths
  std::vector<int> rim;                 // wheel rim in cyclic order
  int apex = -1;                        // pyramid apex / wheel center

  // counts for the K_{2,3} induced-minor equivalence
  bool qualifying() const;
  std::string describe() const;
};

// Every way g itself is one of the four structures (small graphs can match
// more than one kind; all are reported).
std::vector<ObstructionMatch> recognize_obstruction(const Graph& g);

// Smallest induced subgraph that is a theta, pyramid, long prism, or broken
// wheel; agrees with has_induced_minor(g, K_{2,3}).
std::optional<std::pair<VertexSet, ObstructionMatch>> contains_obstruction(const Graph& g);

// k pairwise independent cycles: vertex-disjoint, no edges between any two.
// The search may restrict itself to chordless cycles: the vertex set of any
// cycle contains a chordless one, and vertex-disjointness plus the absence
// of connecting edges are inherited by subsets, so a packing of k cycles
// yields a packing of k chordless ones.
std::optional<std::vector<std::vector<int>>> find_independent_cycles(const Graph& g, int k);
bool is_ok_free(const Graph& g, int k);

// Branch sets of an induced-minor model of `pattern` in g: disjoint
// nonempty connected sets, one per pattern vertex, with an edge between two
// sets exactly when the pattern has one.
std::optional<std::vector<VertexSet>> find_induced_minor(const Graph& g, const Graph& pattern);
bool has_induced_minor(const Graph& g, const Graph& pattern);

}  // namespace tia
