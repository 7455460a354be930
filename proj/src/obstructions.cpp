#include "tia/obstructions.hpp"

#include <algorithm>
#include <sstream>

#include "tia/subsets.hpp"

namespace tia {

bool ObstructionMatch::qualifying() const {
  if (kind == "theta" || kind == "pyramid") return true;
  if (kind == "prism") return long_prism;
  if (kind == "wheel") return broken;
  return false;
}

std::string ObstructionMatch::describe() const {
  std::ostringstream out;
  out << kind << '(';
  for (size_t i = 0; i < lengths.size(); ++i) {
    if (i) out << ',';
    out << lengths[i];
  }
  out << ')';
  if (kind == "prism") out << (long_prism ? " long" : " not long");
  if (kind == "wheel") out << (broken ? " broken" : " not broken");
  return out.str();
}

namespace {

// follows a chain of degree-2 vertices from cur (entered via prev) until it
// leaves `interior`; fails if the chain branches or revisits
std::optional<std::pair<std::vector<int>, int>> walk_chain(const Graph& g, int prev, int cur,
                                                           VertexSet interior) {
  std::vector<int> inner;
  while (interior.contains(cur)) {
    if (g.degree(cur) != 2) return std::nullopt;
    VertexSet nb = g.neighbors(cur);
    nb.remove(prev);
    if (nb.size() != 1) return std::nullopt;
    inner.push_back(cur);
    prev = cur;
    cur = nb.first();
  }
  return std::make_pair(inner, cur);
}

VertexSet degree_three_set(const Graph& g, bool& others_two) {
  VertexSet d3;
  others_two = true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 3)
      d3.add(v);
    else if (g.degree(v) != 2)
      others_two = false;
  }
  return d3;
}

bool is_triangle_set(const Graph& g, VertexSet s) {
  if (s.size() != 3) return false;
  auto vs = s.to_vector();
  return g.adjacent(vs[0], vs[1]) && g.adjacent(vs[0], vs[2]) && g.adjacent(vs[1], vs[2]);
}

std::optional<ObstructionMatch> match_theta(const Graph& g) {
  bool others_two = false;
  VertexSet d3 = degree_three_set(g, others_two);
  if (!others_two || d3.size() != 2) return std::nullopt;
  int a = d3.first();
  VertexSet rest = d3;
  rest.remove(a);
  int b = rest.first();
  if (g.adjacent(a, b)) return std::nullopt;
  VertexSet interior = g.vertices() - d3;
  ObstructionMatch m;
  m.kind = "theta";
  int used = 0;
  for (int x : g.neighbors(a)) {
    auto chain = walk_chain(g, a, x, interior);
    if (!chain || chain->second != b || chain->first.empty()) return std::nullopt;
    std::vector<int> path{a};
    path.insert(path.end(), chain->first.begin(), chain->first.end());
    path.push_back(b);
    used += static_cast<int>(chain->first.size());
    m.lengths.push_back(static_cast<int>(path.size()) - 1);
    m.paths.push_back(path);
  }
  if (used != interior.size()) return std::nullopt;
  std::sort(m.lengths.begin(), m.lengths.end());
  return m;
}

std::optional<ObstructionMatch> match_prism(const Graph& g) {
  bool others_two = false;
  VertexSet d3 = degree_three_set(g, others_two);
  if (!others_two || d3.size() != 6) return std::nullopt;
  std::vector<int> d3v = d3.to_vector();
  std::optional<ObstructionMatch> found;
  // the first triangle always holds the smallest degree-3 vertex
  for_each_subset(5, 2, [&](const std::vector<int>& pick) {
    VertexSet ta = VertexSet::single(d3v[0]);
    ta.add(d3v[static_cast<size_t>(pick[0] + 1)]);
    ta.add(d3v[static_cast<size_t>(pick[1] + 1)]);
    VertexSet tb = d3 - ta;
    if (!is_triangle_set(g, ta) || !is_triangle_set(g, tb)) return false;
    VertexSet interior = g.vertices() - d3;
    ObstructionMatch m;
    m.kind = "prism";
    VertexSet ends_seen;
    int used = 0;
    for (int a : ta) {
      VertexSet out = g.neighbors(a) - ta;
      if (out.size() != 1) return false;
      auto chain = walk_chain(g, a, out.first(), interior);
      if (!chain || !tb.contains(chain->second) || ends_seen.contains(chain->second))
        return false;
      ends_seen.add(chain->second);
      std::vector<int> path{a};
      path.insert(path.end(), chain->first.begin(), chain->first.end());
      path.push_back(chain->second);
      used += static_cast<int>(chain->first.size());
      m.lengths.push_back(static_cast<int>(path.size()) - 1);
      m.paths.push_back(path);
    }
    if (used != interior.size()) return false;
    std::sort(m.lengths.begin(), m.lengths.end());
    m.long_prism = m.lengths.back() >= 2;
    found = m;
    return true;
  });
  return found;
}

std::optional<ObstructionMatch> match_pyramid(const Graph& g) {
  bool others_two = false;
  VertexSet d3 = degree_three_set(g, others_two);
  if (!others_two || d3.size() != 4) return std::nullopt;
  for (int apex : d3) {
    VertexSet base = d3 - VertexSet::single(apex);
    if (!is_triangle_set(g, base)) continue;
    VertexSet interior = g.vertices() - d3;
    ObstructionMatch m;
    m.kind = "pyramid";
    m.apex = apex;
    VertexSet ends_seen;
    int used = 0, short_paths = 0;
    bool ok = true;
    for (int x : g.neighbors(apex)) {
      std::vector<int> path{apex};
      int end;
      if (base.contains(x)) {
        ++short_paths;
        end = x;
      } else {
        auto chain = walk_chain(g, apex, x, interior);
        if (!chain || !base.contains(chain->second)) {
          ok = false;
          break;
        }
        path.insert(path.end(), chain->first.begin(), chain->first.end());
        used += static_cast<int>(chain->first.size());
        end = chain->second;
      }
      if (ends_seen.contains(end)) {
        ok = false;
        break;
      }
      ends_seen.add(end);
      path.push_back(end);
      m.lengths.push_back(static_cast<int>(path.size()) - 1);
      m.paths.push_back(path);
    }
    if (!ok || used != interior.size() || short_paths > 1) continue;
    std::sort(m.lengths.begin(), m.lengths.end());
    return m;
  }
  return std::nullopt;
}

std::vector<int> canonical_cyclic(std::vector<int> seq) {
  std::vector<int> best = seq;
  for (int dir = 0; dir < 2; ++dir) {
    for (size_t r = 0; r < seq.size(); ++r) {
      std::vector<int> rot(seq.begin() + static_cast<long>(r), seq.end());
      rot.insert(rot.end(), seq.begin(), seq.begin() + static_cast<long>(r));
      if (rot < best) best = rot;
    }
    std::reverse(seq.begin(), seq.end());
  }
  return best;
}

std::vector<ObstructionMatch> match_wheels(const Graph& g) {
  std::vector<ObstructionMatch> out;
  int n = g.vertex_count();
  for (int center = 0; center < n; ++center) {
    if (g.degree(center) < 3) continue;
    VertexSet rim_set = g.vertices() - VertexSet::single(center);
    if (rim_set.size() < 4) continue;
    bool cycle = true;
    for (int v : rim_set)
      if ((g.neighbors(v) & rim_set).size() != 2) {
        cycle = false;
        break;
      }
    if (!cycle || components_within(g, rim_set).size() != 1) continue;
    // rim in cyclic order from its smallest vertex
    int start = rim_set.first();
    std::vector<int> rim{start};
    int prev = start, cur = (g.neighbors(start) & rim_set).first();
    while (cur != start) {
      rim.push_back(cur);
      VertexSet nb = g.neighbors(cur) & rim_set;
      nb.remove(prev);
      prev = cur;
      cur = nb.first();
    }
    std::vector<int> spokes;
    for (size_t i = 0; i < rim.size(); ++i)
      if (g.adjacent(center, rim[i])) spokes.push_back(static_cast<int>(i));
    std::vector<int> sectors;
    for (size_t i = 0; i < spokes.size(); ++i) {
      int from = spokes[i];
      int to = spokes[(i + 1) % spokes.size()];
      int len = to - from;
      if (len <= 0) len += static_cast<int>(rim.size());
      sectors.push_back(len);
    }
    ObstructionMatch m;
    m.kind = "wheel";
    m.apex = center;
    m.rim = rim;
    m.lengths = canonical_cyclic(sectors);
    int long_sectors = 0;
    for (int s : sectors)
      if (s >= 2) ++long_sectors;
    m.broken = long_sectors >= 2;
    out.push_back(m);
  }
  return out;
}

}  // namespace

std::vector<ObstructionMatch> recognize_obstruction(const Graph& g) {
  std::vector<ObstructionMatch> out;
  if (auto m = match_prism(g)) out.push_back(*m);
  if (auto m = match_pyramid(g)) out.push_back(*m);
  if (auto m = match_theta(g)) out.push_back(*m);
  for (auto& m : match_wheels(g)) out.push_back(m);
  return out;
}

std::optional<std::pair<VertexSet, ObstructionMatch>> contains_obstruction(const Graph& g) {
  int n = g.vertex_count();
  if (n > caps().size_cap)
    throw CapExceeded("obstruction scan on " + std::to_string(n) + " vertices exceeds cap " +
                      std::to_string(caps().size_cap));
  std::optional<std::pair<VertexSet, ObstructionMatch>> found;
  for (int k = 5; k <= n && !found; ++k) {
    for_each_subset(n, k, [&](const std::vector<int>& s) {
      VertexSet set = VertexSet::of(s);
      for (ObstructionMatch& m : recognize_obstruction(induced_subgraph(g, set))) {
        if (!m.qualifying()) continue;
        // map role vertices back to the labels of g
        auto remap = [&](int v) { return s[static_cast<size_t>(v)]; };
        for (auto& path : m.paths)
          for (int& v : path) v = remap(v);
        for (int& v : m.rim) v = remap(v);
        if (m.apex >= 0) m.apex = remap(m.apex);
        found = std::make_pair(set, m);
        return true;
      }
      return false;
    });
  }
  return found;
}

namespace {

struct CycleBudget {
  long long left;
  void spend() {
    if (--left < 0) throw CapExceeded("independent-cycle search budget exhausted");
  }
};

// chordless cycles within mask, smallest vertex first, dedup by requiring
// second vertex < last; emit returns true to stop
template <typename Fn>
bool chordless_cycles(const Graph& g, VertexSet mask, CycleBudget& budget, Fn&& emit) {
  std::vector<int> path;
  auto extend = [&](auto&& self) -> bool {
    budget.spend();
    int root = path.front(), last = path.back();
    VertexSet cand = g.neighbors(last) & mask;
    for (int w : cand) {
      if (w <= root) continue;
      bool on_path = false, chord = false;
      for (size_t i = 0; i + 1 < path.size(); ++i) {
        if (path[i] == w) on_path = true;
        if (i > 0 && g.adjacent(w, path[i])) chord = true;
      }
      if (on_path) continue;
      bool closes = g.adjacent(w, root);
      if (closes && path.size() >= 2 && !chord && w > path[1]) {
        path.push_back(w);
        bool stop = emit(static_cast<const std::vector<int>&>(path));
        path.pop_back();
        if (stop) return true;
      }
      if (!chord && !(closes && path.size() >= 2)) {
        // extending through w keeps the path induced
        if (path.size() == 1 || !closes) {
          path.push_back(w);
          if (self(self)) return true;
          path.pop_back();
        }
      }
    }
    return false;
  };
  for (int v : mask) {
    path.assign(1, v);
    if (extend(extend)) return true;
  }
  return false;
}

bool pack_cycles(const Graph& g, VertexSet mask, int k, CycleBudget& budget,
                 std::vector<std::vector<int>>& out) {
  if (k == 0) return true;
  bool done = false;
  chordless_cycles(g, mask, budget, [&](const std::vector<int>& cyc) {
    VertexSet closed;
    for (int v : cyc) closed |= g.closed_neighbors(v);
    out.push_back(cyc);
    if (pack_cycles(g, mask - closed, k - 1, budget, out)) {
      done = true;
      return true;
    }
    out.pop_back();
    return false;
  });
  return done;
}

}  // namespace

std::optional<std::vector<std::vector<int>>> find_independent_cycles(const Graph& g, int k) {
  if (k < 1) throw PreconditionFailed("cycle packing needs k >= 1");
  CycleBudget budget{4'000'000};
  std::vector<std::vector<int>> out;
  if (pack_cycles(g, g.vertices(), k, budget, out)) return out;
  return std::nullopt;
}

bool is_ok_free(const Graph& g, int k) { return !find_independent_cycles(g, k).has_value(); }

namespace {

struct MinorSearch {
  const Graph* g;
  const Graph* pattern;
  int n, k;
  std::vector<int> label;
  std::vector<VertexSet> sets;
  int unassigned_left;
  int empty_sets;

  bool dfs(int v) {
    if (v == n) return finish();
    // pruning: every empty branch set still needs a vertex
    if (unassigned_left < empty_sets) return false;
    for (int c = 0; c < k; ++c) {
      bool clash = false;
      for (int u : g->neighbors(v)) {
        int lu = u < v ? label[static_cast<size_t>(u)] : -1;
        if (lu >= 0 && lu != c && !pattern->adjacent(c, lu)) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      label[static_cast<size_t>(v)] = c;
      if (sets[static_cast<size_t>(c)].empty()) --empty_sets;
      sets[static_cast<size_t>(c)].add(v);
      --unassigned_left;
      if (dfs(v + 1)) return true;
      ++unassigned_left;
      sets[static_cast<size_t>(c)].remove(v);
      if (sets[static_cast<size_t>(c)].empty()) ++empty_sets;
      label[static_cast<size_t>(v)] = -1;
    }
    --unassigned_left;
    if (dfs(v + 1)) return true;
    ++unassigned_left;
    return false;
  }

  bool finish() {
    for (int c = 0; c < k; ++c) {
      if (sets[static_cast<size_t>(c)].empty()) return false;
      if (components_within(*g, sets[static_cast<size_t>(c)]).size() != 1) return false;
    }
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (pattern->adjacent(a, b) &&
            !g->neighborhood_of(sets[static_cast<size_t>(a)]).intersects(sets[static_cast<size_t>(b)]))
          return false;
    return true;
  }
};

}  // namespace

std::optional<std::vector<VertexSet>> find_induced_minor(const Graph& g, const Graph& pattern) {
  int n = g.vertex_count(), k = pattern.vertex_count();
  if (n > caps().minor_cap)
    throw CapExceeded("induced minor search on " + std::to_string(n) +
                      " vertices exceeds cap " + std::to_string(caps().minor_cap));
  if (k == 0) return std::vector<VertexSet>{};
  if (k > n) return std::nullopt;
  MinorSearch search{&g,
                     &pattern,
                     n,
                     k,
                     std::vector<int>(static_cast<size_t>(n), -1),
                     std::vector<VertexSet>(static_cast<size_t>(k)),
                     n,
                     k};
  if (search.dfs(0)) return search.sets;
  return std::nullopt;
}

bool has_induced_minor(const Graph& g, const Graph& pattern) {
  return find_induced_minor(g, pattern).has_value();
}

}  // namespace tia
