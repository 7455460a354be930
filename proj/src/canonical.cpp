#include "tia/canonical.hpp"

#include <algorithm>
#include <array>

#include "tia/graph6.hpp"

namespace tia {

namespace {

constexpr uint64_t kUnset = ~uint64_t{0};

struct CanonSearch {
  const Graph* g = nullptr;
  int n = 0;
  // column j holds the adjacency bits between position j and positions 0..j-1,
  // first position most significant; minimized lexicographically
  std::array<uint64_t, kMaxVertices> best_cols{};
  std::array<int, kMaxVertices> best_perm{};
  std::array<int, kMaxVertices> perm{};
  bool have_perm = false;

  void run() {
    best_cols.fill(kUnset);
    dfs(0, VertexSet::full(n));
  }

  void dfs(int depth, VertexSet unused) {
    if (depth == n) {
      if (!have_perm) {
        best_perm = perm;
        have_perm = true;
      }
      return;
    }
    for (int v : unused) {
      uint64_t col = 0;
      for (int i = 0; i < depth; ++i)
        col = (col << 1) | (g->adjacent(perm[i], v) ? 1 : 0);
      if (col > best_cols[depth]) continue;
      if (col < best_cols[depth]) {
        best_cols[depth] = col;
        for (int j = depth + 1; j < n; ++j) best_cols[j] = kUnset;
        have_perm = false;
      }
      perm[depth] = v;
      VertexSet rest = unused;
      rest.remove(v);
      dfs(depth + 1, rest);
    }
  }
};

}  // namespace

Graph canonical_graph(const Graph& g) {
  int n = g.vertex_count();
  if (n > caps().iso_cap)
    throw CapExceeded("canonical form on " + std::to_string(n) + " vertices exceeds cap " +
                      std::to_string(caps().iso_cap));
  if (n <= 1) return g;
  CanonSearch search;
  search.g = &g;
  search.n = n;
  search.run();
  Graph h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(search.best_perm[i], search.best_perm[j])) h.add_edge(i, j);
  return h;
}

std::string canonical_form(const Graph& g) { return graph6_encode(canonical_graph(g)); }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.vertex_count(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace tia
