#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tia/graph.hpp"

namespace tia {

// Fixed-layout constructions. Families and parameters:
//   prism a b c                three paths (lengths >= 1) between two triangles
//                              {0,1,2} and {3,4,5}; interior vertices appended
//                              path by path, triangle side first
//   pyramid a b c              apex 0 joined by three paths to triangle {1,2,3};
//                              at most one path of length 1
//   theta a b c                nonadjacent ends 0 and 1 joined by three paths,
//                              each of length >= 2
//   wheel s1 s2 ... sk         rim hole 0..R-1 (R = sum, >= 4) plus center R;
//                              spokes at the sector prefix sums, k >= 3
//   g_t t                      clique {1..t} plus vertex 0 joined to each i by
//                              a two-edge path through t+i; g_t 2 is the 5-cycle
//   complete_bipartite a b     sides 0..a-1 and a..a+b-1
//   complete_multipartite s... consecutive parts
//   clique_partition s...      disjoint cliques, consecutive labels
//   path k                     k vertices
//   cycle k                    k >= 3 vertices
//   star s                     center 0 with s leaves
// Parameter violations throw PreconditionFailed naming the broken clause.
Graph make_family(const std::string& family, const std::vector<int>& params);

// canonical representatives of every graph on exactly n vertices, sorted by
// canonical form; cached per n (grown one vertex at a time from the previous
// level, trying all 2^(n-1) attachments and deduplicating canonically)
const std::vector<Graph>& all_graphs_on(int n);

// streams all_graphs_on(n) filtered by a class expression ("" keeps all)
class EnumerationStream {
 public:
  explicit EnumerationStream(int n, std::string class_expression = "");
  std::optional<Graph> next();
  int emitted() const { return emitted_; }

 private:
  const std::vector<Graph>* level_;
  std::string filter_;
  size_t pos_ = 0;
  int emitted_ = 0;
};

// seeded rejection sampler: binomial graphs over a cycling density schedule
// until one lands in the class; throws Error after the attempt budget
Graph random_in_class(int n, const std::string& class_expression, uint64_t seed);

// subdivide every edge once and compare treewidth against the independence
// measure of the result
struct SubdivisionReport {
  int tw_before = 0;
  int tw_after = 0;
  int tree_alpha_after = 0;
  bool inequality_holds = false;  // tw_after <= 2 * tree_alpha_after - 1
};

SubdivisionReport subdivision_lower_bound_check(const Graph& g);

}  // namespace tia
