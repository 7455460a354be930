#include <algorithm>

#include "doctest.h"
#include "tia/canonical.hpp"
#include "tia/generators.hpp"
#include "tia/graph.hpp"
#include "tia/obstructions.hpp"
#include "tia/patterns.hpp"

using namespace tia;

namespace {

bool has_kind(const std::vector<ObstructionMatch>& ms, const std::string& kind) {
  return std::any_of(ms.begin(), ms.end(),
                     [&](const ObstructionMatch& m) { return m.kind == kind; });
}

}  // namespace

TEST_CASE("theta recognition") {
  Graph t = make_family("theta", {2, 2, 2});  // K_{2,3}
  auto ms = recognize_obstruction(t);
  REQUIRE(has_kind(ms, "theta"));
  for (const auto& m : ms)
    if (m.kind == "theta") {
      CHECK(m.lengths == std::vector<int>{2, 2, 2});
      CHECK(m.qualifying());
      CHECK(!m.describe().empty());
    }

  auto big = recognize_obstruction(make_family("theta", {2, 3, 4}));
  REQUIRE(has_kind(big, "theta"));
  for (const auto& m : big)
    if (m.kind == "theta") CHECK(m.lengths == std::vector<int>{2, 3, 4});

  CHECK(recognize_obstruction(make_family("cycle", {6})).empty());
  CHECK(recognize_obstruction(make_family("complete_bipartite", {3, 3})).empty());
}

TEST_CASE("prism recognition") {
  Graph small = make_family("prism", {1, 1, 1});
  auto ms = recognize_obstruction(small);
  REQUIRE(has_kind(ms, "prism"));
  for (const auto& m : ms)
    if (m.kind == "prism") {
      CHECK(!m.long_prism);
      CHECK(!m.qualifying());  // short prisms do not count
    }

  auto ls = recognize_obstruction(make_family("prism", {1, 1, 2}));
  REQUIRE(has_kind(ls, "prism"));
  for (const auto& m : ls)
    if (m.kind == "prism") {
      CHECK(m.long_prism);
      CHECK(m.lengths == std::vector<int>{1, 1, 2});
      CHECK(m.qualifying());
    }
}

TEST_CASE("pyramid recognition and the wheel overlap") {
  Graph p = make_family("pyramid", {1, 2, 2});
  auto ms = recognize_obstruction(p);
  REQUIRE(has_kind(ms, "pyramid"));
  for (const auto& m : ms)
    if (m.kind == "pyramid") {
      CHECK(m.lengths == std::vector<int>{1, 2, 2});
      CHECK(m.qualifying());
      CHECK(m.apex >= 0);
    }
  // the same six vertices read as a broken wheel around another hub
  CHECK(has_kind(ms, "wheel"));
  CHECK(is_isomorphic(p, make_family("wheel", {2, 2, 1})));

  auto pure = recognize_obstruction(make_family("pyramid", {2, 2, 2}));
  CHECK(has_kind(pure, "pyramid"));
}

TEST_CASE("wheel recognition") {
  Graph w = make_family("wheel", {2, 2, 1});
  auto ms = recognize_obstruction(w);
  REQUIRE(has_kind(ms, "wheel"));
  bool saw_broken = false;
  for (const auto& m : ms)
    if (m.kind == "wheel" && m.broken) {
      saw_broken = true;
      CHECK(m.rim.size() == 5);
      CHECK(m.apex >= 0);
      std::vector<int> sorted_lengths = m.lengths;
      std::sort(sorted_lengths.begin(), sorted_lengths.end());
      CHECK(sorted_lengths == std::vector<int>{1, 2, 2});
    }
  CHECK(saw_broken);

  // W5: every sector has length 1, wheel but not broken
  auto w5 = recognize_obstruction(pattern_graph("W5"));
  REQUIRE(has_kind(w5, "wheel"));
  for (const auto& m : w5)
    if (m.kind == "wheel") {
      CHECK(!m.broken);
      CHECK(!m.qualifying());
    }

  // one long sector is still not broken
  auto lop = recognize_obstruction(make_family("wheel", {3, 1, 1}));
  for (const auto& m : lop)
    if (m.kind == "wheel") CHECK(!m.broken);
}

TEST_CASE("containment matches the induced minor test") {
  Graph k23 = pattern_graph("K2,3");

  CHECK(!contains_obstruction(make_family("cycle", {4})).has_value());
  CHECK(!contains_obstruction(make_family("prism", {1, 1, 1})).has_value());
  CHECK(!has_induced_minor(make_family("prism", {1, 1, 1}), k23));

  auto hit = contains_obstruction(make_family("theta", {2, 2, 2}));
  REQUIRE(hit.has_value());
  CHECK(hit->first.size() == 5);
  CHECK(hit->second.kind == "theta");

  // an obstruction hiding inside a larger graph
  Graph padded = disjoint_union(make_family("theta", {2, 2, 3}), make_family("path", {2}));
  auto inner = contains_obstruction(padded);
  REQUIRE(inner.has_value());
  CHECK(inner->first.size() <= 6);
  CHECK(has_induced_minor(padded, k23));

  Graph wheel = make_family("wheel", {2, 2, 2});
  CHECK(contains_obstruction(wheel).has_value());
  CHECK(has_induced_minor(wheel, k23));
}

TEST_CASE("independent cycle packing") {
  Graph two = disjoint_union(make_family("cycle", {3}), make_family("cycle", {4}));
  auto found = find_independent_cycles(two, 2);
  REQUIRE(found.has_value());
  REQUIRE(found->size() == 2);
  VertexSet used;
  for (const auto& cyc : *found) {
    REQUIRE(cyc.size() >= 3);
    for (size_t i = 0; i < cyc.size(); ++i) {
      CHECK(two.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
      CHECK(!used.contains(cyc[i]));
      used.add(cyc[i]);
    }
  }
  for (const auto& a : (*found)[0])
    for (const auto& b : (*found)[1]) CHECK(!two.adjacent(a, b));

  CHECK(!find_independent_cycles(two, 3).has_value());
  CHECK(is_ok_free(two, 3));
  CHECK(!is_ok_free(two, 2));

  // the matching edges tie the prism triangles together, but stretched
  // prisms pull them apart
  CHECK(is_ok_free(make_family("prism", {1, 1, 1}), 2));
  CHECK(!is_ok_free(make_family("prism", {2, 2, 2}), 2));

  CHECK(is_ok_free(make_family("path", {6}), 1));
  CHECK(!is_ok_free(make_family("cycle", {3}), 1));
  CHECK(is_ok_free(make_family("theta", {2, 2, 2}), 2));
}

TEST_CASE("induced minor models") {
  Graph c5 = make_family("cycle", {5});
  CHECK(has_induced_minor(c5, pattern_graph("P4")));
  CHECK(has_induced_minor(make_family("cycle", {6}), pattern_graph("C3")));
  CHECK(!has_induced_minor(pattern_graph("K4"), pattern_graph("C4")));
  CHECK(!has_induced_minor(c5, pattern_graph("K4")));

  Graph theta = make_family("theta", {2, 2, 2});
  auto model = find_induced_minor(theta, pattern_graph("K2,3"));
  REQUIRE(model.has_value());
  REQUIRE(model->size() == 5);
  Graph pat = pattern_graph("K2,3");
  VertexSet seen;
  for (size_t i = 0; i < model->size(); ++i) {
    const VertexSet& bs = (*model)[i];
    CHECK(!bs.empty());
    CHECK(is_connected(induced_subgraph(theta, bs)));
    CHECK(!bs.intersects(seen));
    seen = VertexSet(seen.bits() | bs.bits());
  }
  for (size_t i = 0; i < model->size(); ++i)
    for (size_t j = i + 1; j < model->size(); ++j) {
      bool touch = false;
      for (int u : (*model)[i])
        for (int v : (*model)[j]) touch = touch || theta.adjacent(u, v);
      CHECK(touch == pat.adjacent(static_cast<int>(i), static_cast<int>(j)));
    }

  // subdividing never creates a K_{2,3} induced minor that was not there
  CHECK(!has_induced_minor(subdivide_all(make_family("cycle", {4})), pattern_graph("K2,3")));
}
