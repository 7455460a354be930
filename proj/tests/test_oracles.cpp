#include "doctest.h"
#include "support/direct_td.hpp"
#include "tia/decomposition.hpp"
#include "tia/generators.hpp"
#include "tia/graph.hpp"
#include "tia/oracles.hpp"

using namespace tia;

namespace {

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);      // outer cycle
    g.add_edge(i, i + 5);            // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

Graph grid(int rows, int cols) {
  Graph g(rows * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
    }
  return g;
}

}  // namespace

TEST_CASE("independence clique chromatic clique-cover golden values") {
  Graph c5 = make_family("cycle", {5});
  CHECK(independence_number(c5) == 2);
  CHECK(clique_number(c5) == 2);
  CHECK(chromatic_number(c5) == 3);
  CHECK(clique_cover_number(c5) == 3);

  Graph k33 = make_family("complete_bipartite", {3, 3});
  CHECK(independence_number(k33) == 3);
  CHECK(clique_number(k33) == 2);
  CHECK(chromatic_number(k33) == 2);
  CHECK(clique_cover_number(k33) == 3);

  Graph pet = petersen();
  CHECK(independence_number(pet) == 4);
  CHECK(clique_number(pet) == 2);
  CHECK(chromatic_number(pet) == 3);
  CHECK(clique_cover_number(pet) == 5);

  CHECK(independence_number(Graph(0)) == 0);
  CHECK(chromatic_number(make_family("clique_partition", {4})) == 4);
}

TEST_CASE("duality against the complement") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : all_graphs_on(n)) {
      Graph co = complement(g);
      CHECK(independence_number(g) == clique_number(co));
      CHECK(clique_cover_number(g) == chromatic_number(co));
      CHECK(independence_number(g) == tia_test::naive_alpha(g));
    }
}

TEST_CASE("extremal set witnesses") {
  Graph c5 = make_family("cycle", {5});
  VertexSet mis = maximum_independent_set(c5);
  CHECK(mis.size() == 2);
  for (int u : mis)
    for (int v : mis) CHECK((u == v || !c5.adjacent(u, v)));
  CHECK(mis == VertexSet::of({0, 2}));  // lexicographically least

  VertexSet clique = maximum_clique(make_family("complete_bipartite", {2, 3}));
  CHECK(clique.size() == 2);
  CHECK(clique == VertexSet::of({0, 2}));

  Graph pet = petersen();
  VertexSet big = maximum_independent_set(pet);
  CHECK(big.size() == 4);
  for (int u : big)
    for (int v : big) CHECK((u == v || !pet.adjacent(u, v)));
}

TEST_CASE("induced biclique number") {
  CHECK(induced_biclique_number(make_family("clique_partition", {1, 1})) == 0);
  CHECK(induced_biclique_number(make_family("path", {2})) == 1);
  CHECK(induced_biclique_number(make_family("cycle", {5})) == 1);
  CHECK(induced_biclique_number(make_family("cycle", {6})) == 1);
  CHECK(induced_biclique_number(make_family("cycle", {4})) == 2);
  CHECK(induced_biclique_number(make_family("complete_bipartite", {3, 3})) == 3);
  CHECK(induced_biclique_number(make_family("complete_bipartite", {3, 5})) == 3);
  // bicliques must be induced: K4 has edges inside each side
  CHECK(induced_biclique_number(make_family("clique_partition", {4})) == 1);
}

TEST_CASE("feedback vertex set") {
  CHECK(minimum_feedback_vertex_set(make_family("path", {6})).empty());
  CHECK(minimum_feedback_vertex_set(make_family("cycle", {5})).size() == 1);
  Graph two = disjoint_union(make_family("cycle", {3}), make_family("cycle", {4}));
  CHECK(minimum_feedback_vertex_set(two).size() == 2);
  CHECK(minimum_feedback_vertex_set(make_family("clique_partition", {4})).size() == 2);
  CHECK(minimum_feedback_vertex_set(petersen()).size() == 3);

  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : all_graphs_on(n)) {
      VertexSet s = minimum_feedback_vertex_set(g);
      CHECK(is_forest(delete_vertices(g, s)));
      // no smaller set works
      uint64_t all = g.vertices().bits();
      for (uint64_t m = 0; m <= all; ++m) {
        VertexSet cand(m & all);
        if (cand.size() < s.size()) CHECK(!is_forest(delete_vertices(g, cand)));
      }
    }
}

TEST_CASE("chordal recognition") {
  CHECK(is_chordal_graph(Graph(0)));
  CHECK(is_chordal_graph(make_family("path", {5})));
  CHECK(is_chordal_graph(make_family("clique_partition", {4, 3})));
  CHECK(is_chordal_graph(make_family("star", {4})));
  CHECK(!is_chordal_graph(make_family("cycle", {4})));
  CHECK(!is_chordal_graph(make_family("cycle", {5})));
  CHECK(!is_chordal_graph(petersen()));

  Graph c4 = make_family("cycle", {4});
  auto order = mcs_elimination_order(c4);
  CHECK(order.size() == 4);
  CHECK(!is_perfect_elimination_order(c4, order));
  Graph k4 = make_family("clique_partition", {4});
  CHECK(is_perfect_elimination_order(k4, mcs_elimination_order(k4)));
}

TEST_CASE("chordal clique trees") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : all_graphs_on(n)) {
      if (!is_chordal_graph(g)) continue;
      TreeDecomposition td = chordal_clique_tree(g);
      CHECK(validate_decomposition(td).valid);
      CHECK(independence_of_decomposition(td) == 1);  // bags are cliques
      CHECK(width_of_decomposition(td) == clique_number(g) - 1);
    }
}

TEST_CASE("tree independence number golden values") {
  CHECK(tree_independence_number(Graph(0)).value == 0);
  CHECK(tree_independence_number(Graph(3)).value == 1);
  CHECK(tree_independence_number(make_family("clique_partition", {5})).value == 1);
  CHECK(tree_independence_number(make_family("path", {6})).value == 1);
  CHECK(tree_independence_number(make_family("cycle", {4})).value == 2);
  CHECK(tree_independence_number(make_family("cycle", {5})).value == 2);
  CHECK(tree_independence_number(make_family("cycle", {8})).value == 2);
  for (int s = 1; s <= 4; ++s)
    CHECK(tree_independence_number(make_family("complete_bipartite", {s, s})).value == s);
  CHECK(tree_independence_number(make_family("complete_bipartite", {2, 5})).value == 2);
}

TEST_CASE("tree clique cover golden values") {
  CHECK(tree_clique_cover_number(make_family("clique_partition", {4})).value == 1);
  CHECK(tree_clique_cover_number(make_family("path", {5})).value == 1);
  CHECK(tree_clique_cover_number(make_family("cycle", {5})).value == 2);
  CHECK(tree_clique_cover_number(make_family("cycle", {4})).value == 2);
  CHECK(tree_clique_cover_number(make_family("complete_bipartite", {3, 3})).value == 3);
}

TEST_CASE("oracle decompositions validate") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : all_graphs_on(n)) {
      DecompositionValue ta = tree_independence_number(g);
      CHECK(validate_decomposition(ta.decomposition).valid);
      CHECK(independence_of_decomposition(ta.decomposition) == ta.value);
      DecompositionValue tt = tree_clique_cover_number(g);
      CHECK(validate_decomposition(tt.decomposition).valid);
      CHECK(clique_cover_of_decomposition(tt.decomposition) == tt.value);
      TreeDecomposition tw = treewidth_decomposition(g);
      CHECK(validate_decomposition(tw).valid);
      CHECK(width_of_decomposition(tw) == treewidth(g));
    }
}

TEST_CASE("tree independence matches direct enumeration") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : all_graphs_on(n)) {
      CHECK(tree_independence_number(g).value == tia_test::direct_tree_alpha(g));
      CHECK(treewidth(g) == tia_test::direct_treewidth(g));
    }
}

TEST_CASE("treewidth golden values") {
  CHECK(treewidth(Graph(0)) == -1);
  CHECK(treewidth(Graph(1)) == 0);
  for (int n = 2; n <= 6; ++n) CHECK(treewidth(make_family("clique_partition", {n})) == n - 1);
  for (int n = 3; n <= 8; ++n) CHECK(treewidth(make_family("cycle", {n})) == 2);
  CHECK(treewidth(make_family("path", {7})) == 1);
  CHECK(treewidth(make_family("star", {5})) == 1);
  Graph tree(7);  // complete binary tree on 7 vertices
  for (int v = 1; v < 7; ++v) tree.add_edge(v, (v - 1) / 2);
  CHECK(treewidth(tree) == 1);
  CHECK(treewidth(grid(2, 2)) == 2);
  CHECK(treewidth(grid(2, 3)) == 2);
  CHECK(treewidth(grid(3, 3)) == 3);
  CHECK(treewidth(make_family("complete_bipartite", {3, 3})) == 3);
  CHECK(treewidth(petersen()) == 4);
}

TEST_CASE("splitness") {
  CHECK(splitness(Graph(1)).k == 1);
  CHECK(splitness(make_family("clique_partition", {5})).k == 1);
  CHECK(splitness(make_family("path", {4})).k == 1);  // P4 is a split graph
  SplitPartition c5 = splitness(make_family("cycle", {5}));
  CHECK(c5.k == 2);
  SplitPartition c4 = splitness(make_family("cycle", {4}));
  CHECK(c4.k == 2);  // C4 is itself a forbidden graph for split graphs
  Graph g = make_family("cycle", {5});
  CHECK(clique_number(induced_subgraph(g, c5.clique_side)) <= c5.k);
  CHECK(independence_number(induced_subgraph(g, c5.independent_side)) <= c5.k);
  CHECK((c5.clique_side.bits() | c5.independent_side.bits()) == g.vertices().bits());
  CHECK((c5.clique_side.bits() & c5.independent_side.bits()) == 0);
}

TEST_CASE("caps stop the oracles") {
  Graph big = make_family("path", {33});
  CHECK_THROWS_AS(independence_number(big), CapExceeded);
  Graph wide = make_family("path", {25});
  CHECK_THROWS_AS(treewidth(wide), CapExceeded);
  Graph deep = make_family("path", {11});
  CHECK_THROWS_AS(tree_independence_number(deep), CapExceeded);

  Caps saved = caps();
  caps().oracle_cap = 11;
  CHECK(tree_independence_number(deep).value == 1);
  caps() = saved;
}
