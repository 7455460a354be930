#include "doctest.h"
#include "support/direct_td.hpp"
#include "tia/decomposers.hpp"
#include "tia/decomposition.hpp"
#include "tia/generators.hpp"
#include "tia/graph.hpp"
#include "tia/oracles.hpp"
#include "tia/patterns.hpp"

using namespace tia;

TEST_CASE("star decomposition") {
  Graph c4 = make_family("cycle", {4});
  BoundedDecomposition d = star_decomposition(c4, VertexSet::of({0, 2}));
  CHECK(validate_decomposition(d.td).valid);
  CHECK(d.kind == BoundKind::alpha);
  CHECK(d.provenance == "thm1.3");
  CHECK(d.bound_value == independence_of_decomposition(d.td));
  CHECK(d.bound_value == 2);
  CHECK(d.paper_bound == 3);  // alpha of the cover plus one
  CHECK(d.bound_value <= d.paper_bound);

  // not a vertex cover: edge 2-3 is missed
  CHECK_THROWS_WITH_AS(star_decomposition(c4, VertexSet::of({0, 1})),
                       "not a vertex cover: edge 2-3 has no endpoint in it", PreconditionFailed);
  CHECK_THROWS_AS(star_decomposition(c4, VertexSet::of({0, 5})), PreconditionFailed);

  // cover = everything degenerates to the single-bag fallback
  Graph k3 = make_family("cycle", {3});
  BoundedDecomposition whole = star_decomposition(k3, k3.vertices());
  CHECK(validate_decomposition(whole.td).valid);
  CHECK(whole.td.node_count() == 1);
  CHECK(whole.bound_value == 1);
  CHECK(whole.paper_bound == 2);

  // edgeless graphs admit the empty cover; every bag is one vertex
  Graph bare(3);
  BoundedDecomposition e = star_decomposition(bare, VertexSet());
  CHECK(validate_decomposition(e.td).valid);
  CHECK(e.bound_value == 1);
  CHECK(e.paper_bound == 1);

  // a denser case: cover by a maximum matching side on the prism
  Graph prism = make_family("prism", {1, 1, 1});
  VertexSet cover = prism.vertices() - maximum_independent_set(prism);
  BoundedDecomposition p = star_decomposition(prism, cover);
  CHECK(validate_decomposition(p.td).valid);
  CHECK(p.bound_value <= p.paper_bound);
}

TEST_CASE("split decomposition") {
  Graph c5 = make_family("cycle", {5});
  SplitPartition part = splitness(c5);
  CHECK(part.k == 2);
  BoundedDecomposition d = split_decomposition(c5, part);
  CHECK(validate_decomposition(d.td).valid);
  CHECK(d.kind == BoundKind::alpha);
  CHECK(d.provenance == "thm3.2");
  CHECK(d.bound_value == independence_of_decomposition(d.td));
  CHECK(d.paper_bound ==
        treewidth(induced_subgraph(c5, part.clique_side)) + 1 + part.k);
  CHECK(d.bound_value <= d.paper_bound);

  // hand-made partition with a false clique-number claim
  SplitPartition bogus;
  bogus.k = 1;
  bogus.clique_side = VertexSet::of({0, 1});  // adjacent pair: omega = 2 > 1
  bogus.independent_side = VertexSet::of({2, 3, 4});
  CHECK_THROWS_AS(split_decomposition(c5, bogus), PreconditionFailed);

  // the empty clique side gives the single-bag fallback
  SplitPartition all_b;
  all_b.k = independence_number(c5);
  all_b.independent_side = c5.vertices();
  BoundedDecomposition whole = split_decomposition(c5, all_b);
  CHECK(whole.td.node_count() == 1);
  CHECK(whole.bound_value == 2);

  for (const Graph& g : all_graphs_on(6)) {
    SplitPartition sp = splitness(g);
    BoundedDecomposition bd = split_decomposition(g, sp);
    CHECK(validate_decomposition(bd.td).valid);
    CHECK(bd.bound_value <= bd.paper_bound);
  }
}

TEST_CASE("fvs witness invariants") {
  // star: no cycles at all
  FvsWitness w = fvs_witness(make_family("star", {3}), 2, 4);
  CHECK(w.s1.empty());
  CHECK(w.s2.empty());

  // C5: the whole cycle plus its neighborhood lands in s2
  Graph c5 = make_family("cycle", {5});
  FvsWitness wc = fvs_witness(c5, 2, 3);
  CHECK(wc.s1.empty());
  CHECK(wc.s2 == c5.vertices());
  CHECK(is_forest(delete_vertices(c5, VertexSet(wc.s1.bits() | wc.s2.bits()))));
  CHECK(independence_number(induced_subgraph(c5, wc.s2)) <= 10 * (2 - 1) * (3 - 1));

  // long cycle: girth 12 >= 11 so the exact feedback set takes over
  Graph c12 = make_family("cycle", {12});
  FvsWitness wl = fvs_witness(c12, 2, 3);
  CHECK(wl.s1.size() == 1);
  CHECK(wl.s2.empty());
  CHECK(is_forest(delete_vertices(c12, wl.s1)));

  // preconditions reject out-of-class inputs
  CHECK_THROWS_AS(fvs_witness(make_family("star", {3}), 2, 3), PreconditionFailed);
  Graph two = disjoint_union(make_family("cycle", {3}), make_family("cycle", {3}));
  CHECK_THROWS_AS(fvs_witness(two, 2, 3), PreconditionFailed);
  CHECK_THROWS_AS(fvs_witness(c5, 0, 3), PreconditionFailed);
  CHECK_THROWS_AS(fvs_witness(c5, 2, 1), PreconditionFailed);

  // triangle with a pendant path: peeling keeps the pendant tail
  Graph tad(6);
  tad.add_edge(0, 1);
  tad.add_edge(1, 2);
  tad.add_edge(2, 0);
  tad.add_edge(2, 3);
  tad.add_edge(3, 4);
  tad.add_edge(4, 5);
  FvsWitness wt = fvs_witness(tad, 2, 3);
  VertexSet gone(wt.s1.bits() | wt.s2.bits());
  CHECK(is_forest(delete_vertices(tad, gone)));
  CHECK(independence_number(induced_subgraph(tad, wt.s2)) <= 20);
}

TEST_CASE("fvs decomposition") {
  Graph c5 = make_family("cycle", {5});
  FvsWitness w = fvs_witness(c5, 2, 3);
  BoundedDecomposition d = fvs_decomposition(c5, w);
  CHECK(validate_decomposition(d.td).valid);
  CHECK(d.kind == BoundKind::alpha);
  CHECK(d.provenance == "thm1.4");
  CHECK(d.paper_bound == 0 + 10 * (2 - 1) * (3 - 1) + 1);
  CHECK(d.bound_value <= d.paper_bound);
  CHECK(d.bound_value == independence_of_decomposition(d.td));

  // a witness whose deletions leave a cycle behind is rejected
  Graph two = disjoint_union(make_family("cycle", {3}), make_family("cycle", {3}));
  FvsWitness stale;
  stale.s1 = VertexSet::of({0});
  stale.k = 2;
  stale.t = 3;
  CHECK_THROWS_AS(fvs_decomposition(two, stale), PreconditionFailed);
  // and so is one where alpha of the second set is past the budget
  FvsWitness fat;
  fat.s2 = VertexSet::full(12);
  fat.k = 2;
  fat.t = 2;  // budget 10: alpha of 12 isolated vertices is 12
  CHECK_THROWS_AS(fvs_decomposition(Graph(12), fat), PreconditionFailed);

  // star host: everything stays in the forest part
  Graph star = make_family("star", {3});
  FvsWitness ws = fvs_witness(star, 2, 4);
  BoundedDecomposition ds = fvs_decomposition(star, ws);
  CHECK(validate_decomposition(ds.td).valid);
  CHECK(ds.bound_value == 1);  // clique-tree bags of a forest are edges
  CHECK(ds.paper_bound == 31);

  Graph c12 = make_family("cycle", {12});
  FvsWitness wl = fvs_witness(c12, 2, 3);
  BoundedDecomposition dl = fvs_decomposition(c12, wl);
  CHECK(validate_decomposition(dl.td).valid);
  CHECK(dl.bound_value == 2);  // path edge plus the one cut vertex
  CHECK(dl.paper_bound == 1 + 20 + 1);
}

TEST_CASE("p3p1 decomposition exact values") {
  Graph c4 = make_family("cycle", {4});
  BoundedDecomposition d = p3p1_decomposition(c4);
  CHECK(validate_decomposition(d.td).valid);
  CHECK(d.provenance == "thm1.5");
  CHECK(d.bound_value == 2);
  CHECK(d.paper_bound == 2);  // exact: the bound is the value itself

  BoundedDecomposition c5 = p3p1_decomposition(make_family("cycle", {5}));
  CHECK(c5.bound_value == 2);  // C4-free with an induced five-cycle

  BoundedDecomposition k4 = p3p1_decomposition(pattern_graph("K4"));
  CHECK(k4.bound_value == 1);  // chordal case

  Graph k222 = make_family("complete_multipartite", {2, 2, 2});
  BoundedDecomposition oct = p3p1_decomposition(k222);
  CHECK(oct.bound_value == 2);

  CHECK_THROWS_AS(p3p1_decomposition(Graph(3)), PreconditionFailed);  // edgeless
  CHECK_THROWS_AS(p3p1_decomposition(make_family("path", {5})), PreconditionFailed);

  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : all_graphs_on(n)) {
      if (g.edge_count() == 0 || !in_class(g, "P3+P1-free")) continue;
      BoundedDecomposition bd = p3p1_decomposition(g);
      CHECK(validate_decomposition(bd.td).valid);
      CHECK(bd.bound_value == tree_independence_number(g).value);
      CHECK(bd.bound_value == bd.paper_bound);
    }
}

TEST_CASE("clique cover stays below three") {
  Graph c5 = make_family("cycle", {5});
  BoundedDecomposition d = tree_theta_3_decomposition(c5);
  CHECK(validate_decomposition(d.td).valid);
  CHECK(d.kind == BoundKind::theta);
  CHECK(d.provenance == "thm1.6");
  CHECK(d.paper_bound == 3);
  CHECK(d.bound_value == clique_cover_of_decomposition(d.td));
  CHECK(d.bound_value <= 3);

  BoundedDecomposition gem = tree_theta_3_decomposition(pattern_graph("gem"));
  CHECK(gem.bound_value <= 3);

  CHECK_THROWS_AS(tree_theta_3_decomposition(make_family("cycle", {4})), PreconditionFailed);
  CHECK_THROWS_AS(tree_theta_3_decomposition(disjoint_union(pattern_graph("P4"), Graph(1))),
                  PreconditionFailed);

  for (const Graph& g : all_graphs_on(6)) {
    if (!in_class(g, "P4+P1-free&C4-free")) continue;
    BoundedDecomposition bd = tree_theta_3_decomposition(g);
    CHECK(validate_decomposition(bd.td).valid);
    CHECK(bd.bound_value <= 3);
  }
}
