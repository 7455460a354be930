#include "tia/decomposers.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "tia/canonical.hpp"
#include "tia/obstructions.hpp"
#include "tia/patterns.hpp"

namespace tia {

namespace {

std::string set_text(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

// td was built on induced_subgraph(host, mask); lift bag labels back
TreeDecomposition remap(const TreeDecomposition& td, const Graph& host, VertexSet mask) {
  std::vector<int> label = mask.to_vector();
  TreeDecomposition out;
  out.host = host;
  out.tree_edges = td.tree_edges;
  out.bags.reserve(td.bags.size());
  for (const VertexSet& bag : td.bags) {
    VertexSet lifted;
    for (int v : bag) lifted.add(label[static_cast<size_t>(v)]);
    out.bags.push_back(lifted);
  }
  return out;
}

void check_result(const BoundedDecomposition& b, const char* who) {
  ValidationResult v = validate_decomposition(b.td);
  if (!v.valid) throw Error(std::string(who) + ": built an invalid decomposition: " + v.violation);
  if (b.bound_value > b.paper_bound)
    throw Error(std::string(who) + ": measured value " + std::to_string(b.bound_value) +
                " exceeds the promised bound " + std::to_string(b.paper_bound));
}

}  // namespace

BoundedDecomposition star_decomposition(const Graph& g, VertexSet cover) {
  if (!cover.subset_of(g.vertices()))
    throw PreconditionFailed("cover mentions a vertex outside the graph");
  for (auto [u, v] : g.edges())
    if (!cover.contains(u) && !cover.contains(v))
      throw PreconditionFailed("not a vertex cover: edge " + std::to_string(u) + "-" +
                                   std::to_string(v) + " has no endpoint in it",
                               std::to_string(u) + "-" + std::to_string(v));
  VertexSet rest = g.vertices() - cover;
  TreeDecomposition td;
  td.host = g;
  if (rest.empty()) {
    td = trivial_decomposition(g);
  } else {
    int i = 0;
    for (int t : rest) {
      td.bags.push_back(cover | VertexSet::single(t));
      if (i > 0) td.tree_edges.push_back({i - 1, i});
      ++i;
    }
  }
  BoundedDecomposition out;
  out.td = canonicalize_decomposition(td);
  out.kind = BoundKind::alpha;
  out.bound_value = independence_of_decomposition(out.td);
  out.paper_bound = independence_number(induced_subgraph(g, cover)) + 1;
  out.provenance = "thm1.3";
  check_result(out, "star_decomposition");
  return out;
}

BoundedDecomposition split_decomposition(const Graph& g, const SplitPartition& part) {
  VertexSet a = part.clique_side;
  VertexSet b = part.independent_side;
  if (a.intersects(b) || (a | b) != g.vertices())
    throw PreconditionFailed("the two sides must partition the vertex set");
  Graph ga = induced_subgraph(g, a);
  if (clique_number(ga) > part.k)
    throw PreconditionFailed("clique side has a clique larger than k = " + std::to_string(part.k));
  if (independence_number(induced_subgraph(g, b)) > part.k)
    throw PreconditionFailed("independent side has an independent set larger than k = " +
                             std::to_string(part.k));
  TreeDecomposition td;
  if (a.empty()) {
    td = trivial_decomposition(g);
  } else {
    td = remap(treewidth_decomposition(ga), g, a);
    for (VertexSet& bag : td.bags) bag |= b;
  }
  BoundedDecomposition out;
  out.td = canonicalize_decomposition(td);
  out.kind = BoundKind::alpha;
  out.bound_value = independence_of_decomposition(out.td);
  out.paper_bound = treewidth(ga) + 1 + part.k;
  out.provenance = "thm3.2";
  check_result(out, "split_decomposition");
  return out;
}

FvsWitness fvs_witness(const Graph& g, int k, int t) {
  if (k < 1) throw PreconditionFailed("k must be at least 1");
  if (t < 2) throw PreconditionFailed("t must be at least 2");
  if (auto star = find_k1t(g, t)) {
    std::string leaves;
    for (size_t i = 1; i < star->size(); ++i) {
      if (i > 1) leaves += ",";
      leaves += std::to_string((*star)[i]);
    }
    throw PreconditionFailed("not K_{1," + std::to_string(t) + "}-free: center " +
                                 std::to_string((*star)[0]) + " with leaves {" + leaves + "}",
                             std::to_string((*star)[0]) + ";" + leaves);
  }
  if (auto cycles = find_independent_cycles(g, k)) {
    std::string text;
    for (const auto& c : *cycles) {
      VertexSet s;
      for (int v : c) s.add(v);
      if (!text.empty()) text += " ";
      text += set_text(s);
    }
    throw PreconditionFailed("not O_" + std::to_string(k) + "-free: independent cycles " + text,
                             text);
  }

  // peel a short cycle with its neighborhood, recurse with smaller k; once
  // the girth clears 10 a minimum feedback vertex set finishes the job
  auto rec = [&g](auto&& self, VertexSet mask, int kk) -> std::pair<VertexSet, VertexSet> {
    if (!shortest_cycle_within(g, mask)) return {VertexSet{}, VertexSet{}};
    if (kk <= 1) throw Error("fvs_witness: internal: cycle survived the last level");
    if (girth_within(g, mask) >= 11) {
      Graph h = induced_subgraph(g, mask);
      std::vector<int> label = mask.to_vector();
      VertexSet s1;
      for (int v : minimum_feedback_vertex_set(h)) s1.add(label[static_cast<size_t>(v)]);
      return {s1, VertexSet{}};
    }
    auto cyc = *shortest_cycle_within(g, mask);
    VertexSet c;
    for (int v : cyc) c.add(v);
    VertexSet nbr = g.neighborhood_of(c) & mask;
    auto [r1, r2] = self(self, mask - c - nbr, kk - 1);
    return {r1, c | nbr | r2};
  };
  auto [s1, s2] = rec(rec, g.vertices(), k);

  if (shortest_cycle_within(g, g.vertices() - s1 - s2))
    throw Error("fvs_witness: internal: leftover graph is not a forest");
  int budget = 10 * (k - 1) * (t - 1);
  if (independence_number(induced_subgraph(g, s2)) > budget)
    throw Error("fvs_witness: internal: second deletion set over budget");
  FvsWitness w;
  w.s1 = s1;
  w.s2 = s2;
  w.k = k;
  w.t = t;
  return w;
}

BoundedDecomposition fvs_decomposition(const Graph& g, const FvsWitness& w) {
  if (w.k < 1 || w.t < 2) throw PreconditionFailed("witness parameters out of range");
  VertexSet s = w.s1 | w.s2;
  if (!s.subset_of(g.vertices()))
    throw PreconditionFailed("stale witness: deletion sets mention vertices outside the graph");
  VertexSet f = g.vertices() - s;
  if (shortest_cycle_within(g, f))
    throw PreconditionFailed("stale witness: deleting both sets leaves a cycle");
  int budget = 10 * (w.k - 1) * (w.t - 1);
  if (independence_number(induced_subgraph(g, w.s2)) > budget)
    throw PreconditionFailed("stale witness: second set exceeds its independence budget " +
                             std::to_string(budget));
  TreeDecomposition td;
  if (f.empty()) {
    td = trivial_decomposition(g);
  } else {
    // bags of the forest's clique tree are its edges and isolated vertices
    td = remap(chordal_clique_tree(induced_subgraph(g, f)), g, f);
    for (VertexSet& bag : td.bags) bag |= s;
  }
  BoundedDecomposition out;
  out.td = canonicalize_decomposition(td);
  out.kind = BoundKind::alpha;
  out.bound_value = independence_of_decomposition(out.td);
  out.paper_bound = w.s1.size() + budget + 1;
  out.provenance = "thm1.4";
  check_result(out, "fvs_decomposition");
  return out;
}

BoundedDecomposition p3p1_decomposition(const Graph& g) {
  if (auto hit = find_induced(g, pattern_graph("P3+P1")))
    throw PreconditionFailed("input is not (P_3+P_1)-free: induced copy on " + set_text(*hit),
                             set_text(*hit));
  if (g.edge_count() == 0)
    throw PreconditionFailed("edgeless graph: the chordal clique tree applies directly");

  Graph co = complement(g);
  // peel join sides off the complement components; chordal leftovers take
  // their clique tree, a connected complement forces a single bag
  auto rec = [&](auto&& self, VertexSet mask) -> TreeDecomposition {
    Graph h = induced_subgraph(g, mask);
    if (is_chordal_graph(h)) return remap(chordal_clique_tree(h), g, mask);
    std::vector<VertexSet> parts = components_within(co, mask);
    if (parts.size() == 1) {
      TreeDecomposition td;
      td.host = g;
      td.bags.push_back(mask);
      return td;
    }
    int s = std::max(induced_biclique_number(h), 2);
    VertexSet best;
    int best_alpha = -1;
    std::string best_canon;
    for (VertexSet c : parts) {
      int a = independence_number(induced_subgraph(g, c));
      if (a > s) continue;
      std::string canon = canonical_form(induced_subgraph(g, c));
      if (best_alpha < 0 || a < best_alpha || (a == best_alpha && canon < best_canon) ||
          (a == best_alpha && canon == best_canon && c.bits() < best.bits())) {
        best = c;
        best_alpha = a;
        best_canon = canon;
      }
    }
    if (best_alpha < 0) throw Error("p3p1_decomposition: internal: no absorbable join side");
    TreeDecomposition td = self(self, mask - best);
    for (VertexSet& bag : td.bags) bag |= best;
    return td;
  };
  TreeDecomposition td = rec(rec, g.vertices());

  int formula;
  if (contains_induced(g, pattern_graph("C4")))
    formula = induced_biclique_number(g);
  else if (contains_induced(g, pattern_graph("C5")))
    formula = 2;
  else
    formula = 1;

  BoundedDecomposition out;
  out.td = canonicalize_decomposition(td);
  out.kind = BoundKind::alpha;
  out.bound_value = independence_of_decomposition(out.td);
  out.paper_bound = formula;
  out.provenance = "thm1.5";
  check_result(out, "p3p1_decomposition");
  if (out.bound_value != formula)
    throw Error("p3p1_decomposition: internal: measured value " +
                std::to_string(out.bound_value) + " differs from the formula value " +
                std::to_string(formula));
  return out;
}

BoundedDecomposition tree_theta_3_decomposition(const Graph& g) {
  if (auto hit = find_induced(g, pattern_graph("P4+P1")))
    throw PreconditionFailed("input is not (P_4+P_1)-free: induced copy on " + set_text(*hit),
                             set_text(*hit));
  if (auto hit = find_induced(g, pattern_graph("C4")))
    throw PreconditionFailed("input is not C_4-free: induced copy on " + set_text(*hit),
                             set_text(*hit));
  DecompositionValue dv = tree_independence_number(g);
  if (dv.value > 3)
    throw Error("tree_theta_3_decomposition: internal: independence measure " +
                std::to_string(dv.value) + " above 3");
  BoundedDecomposition out;
  out.td = dv.decomposition;
  out.kind = BoundKind::theta;
  out.bound_value = clique_cover_of_decomposition(out.td);
  out.paper_bound = 3;
  out.provenance = "thm1.6";
  check_result(out, "tree_theta_3_decomposition");
  return out;
}

}  // namespace tia
