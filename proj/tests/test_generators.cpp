#include <set>

#include "doctest.h"
#include "tia/canonical.hpp"
#include "tia/generators.hpp"
#include "tia/graph.hpp"
#include "tia/graph6.hpp"
#include "tia/obstructions.hpp"
#include "tia/oracles.hpp"
#include "tia/patterns.hpp"

using namespace tia;

TEST_CASE("family construction golden values") {
  Graph prism = make_family("prism", {1, 1, 1});
  CHECK(prism.vertex_count() == 6);
  CHECK(prism.edge_count() == 9);
  CHECK(is_isomorphic(prism, complement(make_family("cycle", {6}))));

  Graph theta = make_family("theta", {2, 2, 2});
  CHECK(is_isomorphic(theta, pattern_graph("K2,3")));
  CHECK(make_family("theta", {2, 3, 4}).vertex_count() == 8);

  Graph pyr = make_family("pyramid", {1, 2, 2});
  CHECK(pyr.vertex_count() == 6);
  CHECK(pyr.edge_count() == 8);

  Graph w = make_family("wheel", {1, 1, 1, 1});
  CHECK(w.vertex_count() == 5);
  CHECK(w.edge_count() == 8);
  CHECK(is_isomorphic(w, pattern_graph("W4")));

  CHECK(is_isomorphic(make_family("complete_bipartite", {2, 3}),
                      make_family("complete_multipartite", {2, 3})));
  Graph k123 = make_family("complete_multipartite", {1, 2, 3});
  CHECK(k123.vertex_count() == 6);
  CHECK(k123.edge_count() == 11);

  Graph cp = make_family("clique_partition", {3, 2, 1});
  CHECK(cp.vertex_count() == 6);
  CHECK(cp.edge_count() == 4);
  CHECK(components(cp).size() == 3);

  CHECK(make_family("path", {1}).vertex_count() == 1);
  CHECK(make_family("path", {5}).edge_count() == 4);
  CHECK(make_family("cycle", {3}).edge_count() == 3);
  CHECK(make_family("star", {6}).max_degree() == 6);
}

TEST_CASE("subdivided clique family") {
  CHECK(is_isomorphic(make_family("g_t", {2}), make_family("cycle", {5})));

  Graph g3 = make_family("g_t", {3});
  CHECK(g3.vertex_count() == 7);
  CHECK(g3.edge_count() == 9);
  CHECK(in_class(g3, "P6-free"));
  CHECK(in_class(g3, "C4-free"));
  CHECK(has_induced_minor(g3, pattern_graph("K2,3")));

  Graph g4 = make_family("g_t", {4});
  CHECK(g4.vertex_count() == 9);
  CHECK(in_class(g4, "P6-free"));
  CHECK(in_class(g4, "C4-free"));
}

TEST_CASE("family recognizer round trips") {
  auto prism = recognize_obstruction(make_family("prism", {1, 2, 3}));
  bool ok = false;
  for (const auto& m : prism) ok = ok || (m.kind == "prism" && m.lengths == std::vector<int>{1, 2, 3});
  CHECK(ok);

  auto theta = recognize_obstruction(make_family("theta", {2, 2, 5}));
  ok = false;
  for (const auto& m : theta) ok = ok || (m.kind == "theta" && m.lengths == std::vector<int>{2, 2, 5});
  CHECK(ok);

  auto wheel = recognize_obstruction(make_family("wheel", {2, 1, 2, 1}));
  ok = false;
  for (const auto& m : wheel) ok = ok || (m.kind == "wheel" && m.broken);
  CHECK(ok);
}

TEST_CASE("family preconditions name the broken clause") {
  CHECK_THROWS_WITH_AS(make_family("prism", {1, 1}), "prism takes three path lengths",
                       PreconditionFailed);
  CHECK_THROWS_WITH_AS(make_family("prism", {1, 1, 0}), "prism paths must have length at least 1",
                       PreconditionFailed);
  CHECK_THROWS_WITH_AS(make_family("pyramid", {1, 1, 3}),
                       "pyramid needs two paths of length at least 2", PreconditionFailed);
  CHECK_THROWS_WITH_AS(make_family("theta", {1, 2, 2}), "theta paths must have length at least 2",
                       PreconditionFailed);
  CHECK_THROWS_WITH_AS(make_family("wheel", {2, 2}), "wheel needs at least three sectors",
                       PreconditionFailed);
  CHECK_THROWS_WITH_AS(make_family("wheel", {0, 1, 1}), "wheel sectors must have length at least 1",
                       PreconditionFailed);
  CHECK_THROWS_WITH_AS(make_family("wheel", {1, 1, 1}),
                       "wheel rim must be a hole: total length at least 4", PreconditionFailed);
  CHECK_THROWS_WITH_AS(make_family("g_t", {0}), "g_t takes one parameter t >= 1",
                       PreconditionFailed);
  CHECK_THROWS_AS(make_family("cycle", {2}), PreconditionFailed);
  CHECK_THROWS_AS(make_family("nonsense", {1}), PreconditionFailed);
}

TEST_CASE("exhaustive enumeration counts") {
  const int expect[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) CHECK(static_cast<int>(all_graphs_on(n).size()) == expect[n]);
  CHECK(all_graphs_on(8).size() == 12346);
}

TEST_CASE("enumeration emits canonical forms in order") {
  auto& level = all_graphs_on(5);
  std::set<std::string> forms;
  std::string prev;
  for (const Graph& g : level) {
    std::string f = canonical_form(g);
    CHECK(graph6_encode(g) == f);  // stored graphs are canonical
    CHECK(prev < f);
    prev = f;
    forms.insert(f);
  }
  CHECK(forms.size() == level.size());
  CHECK_THROWS_AS(all_graphs_on(9), CapExceeded);
  CHECK_THROWS_AS(all_graphs_on(-1), Error);
}

TEST_CASE("enumeration stream with a filter") {
  EnumerationStream chordal(4, "chordal");
  int count = 0;
  while (auto g = chordal.next()) {
    CHECK(is_chordal_graph(*g));
    ++count;
  }
  CHECK(count == 10);  // 11 graphs on four vertices minus C4
  CHECK(chordal.emitted() == 10);

  EnumerationStream plain(4, "");
  int total = 0;
  while (plain.next()) ++total;
  CHECK(total == 11);
}

TEST_CASE("seeded random graphs") {
  Graph a = random_in_class(12, "K1,3-free&O2-free", 1);
  CHECK(a.vertex_count() == 12);
  CHECK(in_class(a, "K1,3-free&O2-free"));
  Graph b = random_in_class(12, "K1,3-free&O2-free", 1);
  CHECK(a.edges() == b.edges());  // reproducible
  Graph c = random_in_class(5, "chordal", 7);
  CHECK(is_chordal_graph(c));

  bool differs = false;
  for (uint64_t s = 2; s < 12 && !differs; ++s)
    differs = random_in_class(12, "K1,3-free&O2-free", s).edges() != a.edges();
  CHECK(differs);

  CHECK(random_in_class(0, "", 3).vertex_count() == 0);
  CHECK_THROWS_AS(random_in_class(33, "", 1), CapExceeded);
  // an unsatisfiable filter exhausts the attempt budget
  CHECK_THROWS_WITH_AS(random_in_class(3, "has-edge&2K1,2-subgraph-free&K1,1-free", 5),
                       "no graph on 3 vertices in class "
                       "\"has-edge&2K1,2-subgraph-free&K1,1-free\" after 20000 attempts (seed 5)",
                       Error);
}

TEST_CASE("subdivision does not sink treewidth below the measure bound") {
  SubdivisionReport c4 = subdivision_lower_bound_check(make_family("cycle", {4}));
  CHECK(c4.tw_before == 2);
  CHECK(c4.tw_after == 2);
  CHECK(c4.tree_alpha_after == 2);
  CHECK(c4.inequality_holds);

  SubdivisionReport k4 = subdivision_lower_bound_check(pattern_graph("K4"));
  CHECK(k4.tw_before == 3);
  CHECK(k4.tw_after == 3);
  CHECK(k4.inequality_holds);

  // subdividing K5 lands on 15 vertices, past the decomposition oracle cap
  CHECK_THROWS_AS(subdivision_lower_bound_check(pattern_graph("K5")), CapExceeded);
}
