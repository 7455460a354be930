#include "tia/graph.hpp"

#include <algorithm>
#include <array>

namespace tia {

Caps& caps() {
  static Caps c;
  return c;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : (neighbors(u) - VertexSet::full(u + 1)))
      out.emplace_back(u, v);
  return out;
}

VertexSet Graph::neighborhood_of(VertexSet s) const {
  VertexSet nb;
  for (int v : s) nb |= neighbors(v);
  return nb - s;
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  Graph h(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  std::vector<int> verts = s.to_vector();
  Graph h(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (g.adjacent(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

Graph delete_vertices(const Graph& g, VertexSet s) {
  return induced_subgraph(g, g.vertices() - s);
}

Graph line_graph(const Graph& g) {
  auto es = g.edges();
  Graph h(static_cast<int>(es.size()));
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j) {
      auto [a, b] = es[i];
      auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return h;
}

Graph join(const Graph& a, const Graph& b) {
  int na = a.vertex_count(), nb = b.vertex_count();
  Graph h = disjoint_union(a, b);
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < nb; ++v) h.add_edge(u, na + v);
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  int na = a.vertex_count(), nb = b.vertex_count();
  Graph h(na + nb);
  for (auto [u, v] : a.edges()) h.add_edge(u, v);
  for (auto [u, v] : b.edges()) h.add_edge(na + u, na + v);
  return h;
}

Graph subdivide_edge(const Graph& g, int u, int v) {
  if (!g.adjacent(u, v))
    throw PreconditionFailed("subdivide_edge: not an edge",
                             std::to_string(u) + "-" + std::to_string(v));
  int n = g.vertex_count();
  Graph h(n + 1);
  for (auto [a, b] : g.edges())
    if (!((a == u && b == v) || (a == v && b == u))) h.add_edge(a, b);
  h.add_edge(u, n);
  h.add_edge(v, n);
  return h;
}

Graph subdivide_all(const Graph& g) {
  int n = g.vertex_count();
  auto es = g.edges();
  Graph h(n + static_cast<int>(es.size()));
  for (size_t i = 0; i < es.size(); ++i) {
    h.add_edge(es[i].first, n + static_cast<int>(i));
    h.add_edge(es[i].second, n + static_cast<int>(i));
  }
  return h;
}

Graph contract_edge(const Graph& g, int u, int v) {
  if (!g.adjacent(u, v))
    throw PreconditionFailed("contract_edge: not an edge",
                             std::to_string(u) + "-" + std::to_string(v));
  int lo = std::min(u, v), hi = std::max(u, v);
  int n = g.vertex_count();
  // old label -> new label (hi removed, lo absorbs)
  auto relabel = [&](int w) { return w < hi ? w : w - 1; };
  Graph h(n - 1);
  for (auto [a, b] : g.edges()) {
    if ((a == lo && b == hi) || (a == hi && b == lo)) continue;
    int x = (a == hi) ? lo : relabel(a);
    int y = (b == hi) ? lo : relabel(b);
    if (x != y && !h.adjacent(x, y)) h.add_edge(x, y);
  }
  return h;
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet s) {
  std::vector<VertexSet> out;
  VertexSet todo = s;
  while (!todo.empty()) {
    VertexSet comp = VertexSet::single(todo.first());
    for (;;) {
      VertexSet grow = (g.neighborhood_of(comp) & s) - comp;
      if (grow.empty()) break;
      comp |= grow;
    }
    out.push_back(comp);
    todo -= comp;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  return components_within(g, g.vertices());
}

bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || components(g).size() == 1;
}

bool is_forest(const Graph& g) { return girth(g) == kInfiniteGirth; }

int cycle_rank(const Graph& g) {
  return g.edge_count() - g.vertex_count() + static_cast<int>(components(g).size());
}

namespace {

// BFS from root inside s; returns (dist, parent) arrays, -1 where unreached
void bfs_within(const Graph& g, VertexSet s, int root, std::array<int, kMaxVertices>& dist,
                std::array<int, kMaxVertices>& parent) {
  dist.fill(-1);
  parent.fill(-1);
  std::vector<int> queue{root};
  dist[root] = 0;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (int y : (g.neighbors(x) & s))
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        parent[y] = x;
        queue.push_back(y);
      }
  }
}

std::vector<int> ancestor_path(const std::array<int, kMaxVertices>& parent, int v) {
  std::vector<int> path{v};
  while (parent[path.back()] >= 0) path.push_back(parent[path.back()]);
  return path;
}

// closed cycle sequence from the two tree paths of a non-tree edge (x,y)
std::vector<int> extract_cycle(const std::array<int, kMaxVertices>& parent, int x, int y) {
  std::vector<int> px = ancestor_path(parent, x);
  std::vector<int> py = ancestor_path(parent, y);
  // strip the common suffix down to the lowest common ancestor
  while (px.size() >= 2 && py.size() >= 2 && px[px.size() - 2] == py[py.size() - 2]) {
    px.pop_back();
    py.pop_back();
  }
  // px ends and py ends at the lca now
  std::vector<int> cycle(px.begin(), px.end());
  for (size_t i = py.size() - 1; i + 1 >= 2; --i) cycle.push_back(py[i - 1]);
  return cycle;  // x .. lca .. y, closed by edge yx
}

std::vector<int> canonical_rotation(std::vector<int> cyc) {
  size_t k = cyc.size();
  size_t at = 0;
  for (size_t i = 1; i < k; ++i)
    if (cyc[i] < cyc[at]) at = i;
  std::vector<int> fwd(k), rev(k);
  for (size_t i = 0; i < k; ++i) fwd[i] = cyc[(at + i) % k];
  for (size_t i = 0; i < k; ++i) rev[i] = cyc[(at + k - i) % k];
  return std::min(fwd, rev);
}

}  // namespace

std::optional<std::vector<int>> shortest_cycle_within(const Graph& g, VertexSet s) {
  int best_len = kInfiniteGirth;
  std::optional<std::vector<int>> best;
  std::array<int, kMaxVertices> dist{}, parent{};
  for (int root : s) {
    bfs_within(g, s, root, dist, parent);
    for (int x : s) {
      if (dist[x] < 0) continue;
      for (int y : (g.neighbors(x) & s)) {
        if (y <= x || dist[y] < 0 || parent[x] == y || parent[y] == x) continue;
        std::vector<int> cyc = extract_cycle(parent, x, y);
        int len = static_cast<int>(cyc.size());
        if (len < best_len) {
          best_len = len;
          best = canonical_rotation(cyc);
        } else if (len == best_len && best) {
          std::vector<int> cand = canonical_rotation(cyc);
          if (cand < *best) best = cand;
        }
      }
    }
  }
  return best;
}

std::optional<std::vector<int>> shortest_cycle(const Graph& g) {
  return shortest_cycle_within(g, g.vertices());
}

int girth_within(const Graph& g, VertexSet s) {
  auto cyc = shortest_cycle_within(g, s);
  return cyc ? static_cast<int>(cyc->size()) : kInfiniteGirth;
}

int girth(const Graph& g) { return girth_within(g, g.vertices()); }

}  // namespace tia
