#include "tia/oracles.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_map>

namespace tia {

namespace {

void check_size(const Graph& g, const char* who) {
  if (g.vertex_count() > caps().size_cap)
    throw CapExceeded(std::string(who) + " on " + std::to_string(g.vertex_count()) +
                      " vertices exceeds cap " + std::to_string(caps().size_cap));
}

int degree_within(const Graph& g, int v, VertexSet p) { return (g.neighbors(v) & p).size(); }

int alpha_mask(const Graph& g, VertexSet p) {
  if (p.empty()) return 0;
  int pivot = -1, pivot_deg = -1;
  for (int v : p) {
    int d = degree_within(g, v, p);
    if (d > pivot_deg) {
      pivot_deg = d;
      pivot = v;
    }
  }
  if (pivot_deg <= 1) {
    int edges = 0;
    for (int v : p) edges += degree_within(g, v, p);
    return p.size() - edges / 2;
  }
  int without = alpha_mask(g, p - VertexSet::single(pivot));
  int with = 1 + alpha_mask(g, p - g.closed_neighbors(pivot));
  return std::max(with, without);
}

struct CliqueSearch {
  const Graph* g;
  int best = 0;
  void expand(int have, VertexSet p) {
    if (p.empty()) {
      best = std::max(best, have);
      return;
    }
    while (!p.empty()) {
      if (have + p.size() <= best) return;
      int v = p.first();
      expand(have + 1, p & g->neighbors(v));
      p.remove(v);
    }
  }
};

int omega_mask(const Graph& g, VertexSet p) {
  CliqueSearch search{&g, 0};
  search.expand(0, p);
  return search.best;
}

// backtracking k-colorability, vertices in descending-degree order
struct ColorSearch {
  const Graph* g;
  int n = 0, k = 0;
  std::vector<int> order, color;

  bool assign(int idx, int used) {
    if (idx == n) return true;
    int v = order[static_cast<size_t>(idx)];
    int limit = std::min(k - 1, used);  // new color only as the next index
    for (int c = 0; c <= limit; ++c) {
      bool ok = true;
      for (int u : g->neighbors(v))
        if (color[static_cast<size_t>(u)] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[static_cast<size_t>(v)] = c;
      if (assign(idx + 1, std::max(used, c + 1))) return true;
      color[static_cast<size_t>(v)] = -1;
    }
    return false;
  }

  bool feasible(int colors) {
    k = colors;
    color.assign(static_cast<size_t>(n), -1);
    return assign(0, 0);
  }
};

// backtracking cover of all vertices by at most k cliques, built greedily in
// vertex order; independent of the coloring routine above
struct CliqueCoverSearch {
  const Graph* g;
  int n = 0, k = 0;
  std::vector<VertexSet> classes;

  bool place(int v) {
    if (v == n) return true;
    int open = static_cast<int>(classes.size());
    for (int i = 0; i < open; ++i) {
      if (classes[static_cast<size_t>(i)].subset_of(g->neighbors(v))) {
        classes[static_cast<size_t>(i)].add(v);
        if (place(v + 1)) return true;
        classes[static_cast<size_t>(i)].remove(v);
      }
    }
    if (open < k) {
      classes.push_back(VertexSet::single(v));
      if (place(v + 1)) return true;
      classes.pop_back();
    }
    return false;
  }

  bool feasible(int parts) {
    k = parts;
    classes.clear();
    return place(0);
  }
};

}  // namespace

int independence_number(const Graph& g) {
  check_size(g, "independence number");
  return alpha_mask(g, g.vertices());
}

int clique_number(const Graph& g) {
  check_size(g, "clique number");
  return omega_mask(g, g.vertices());
}

int chromatic_number(const Graph& g) {
  check_size(g, "chromatic number");
  int n = g.vertex_count();
  if (n == 0) return 0;
  ColorSearch search;
  search.g = &g;
  search.n = n;
  for (int v = 0; v < n; ++v) search.order.push_back(v);
  std::sort(search.order.begin(), search.order.end(), [&](int a, int b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
  });
  for (int k = std::max(1, clique_number(g));; ++k)
    if (search.feasible(k)) return k;
}

int clique_cover_number(const Graph& g) {
  check_size(g, "clique cover number");
  int n = g.vertex_count();
  if (n == 0) return 0;
  CliqueCoverSearch search;
  search.g = &g;
  search.n = n;
  for (int k = std::max(1, independence_number(g));; ++k)
    if (search.feasible(k)) return k;
}

VertexSet maximum_independent_set(const Graph& g) {
  check_size(g, "maximum independent set");
  int target = alpha_mask(g, g.vertices());
  VertexSet chosen, allowed = g.vertices();
  for (int v = 0; v < g.vertex_count() && chosen.size() < target; ++v) {
    if (!allowed.contains(v)) continue;
    VertexSet rest = allowed - g.closed_neighbors(v);
    if (chosen.size() + 1 + alpha_mask(g, rest) >= target) {
      chosen.add(v);
      allowed = rest;
    }
  }
  return chosen;
}

VertexSet maximum_clique(const Graph& g) {
  check_size(g, "maximum clique");
  int target = omega_mask(g, g.vertices());
  VertexSet chosen, allowed = g.vertices();
  for (int v = 0; v < g.vertex_count() && chosen.size() < target; ++v) {
    if (!allowed.contains(v)) continue;
    VertexSet rest = allowed & g.neighbors(v);
    if (chosen.size() + 1 + omega_mask(g, rest) >= target) {
      chosen.add(v);
      allowed = rest;
    }
  }
  return chosen;
}

int induced_biclique_number(const Graph& g) {
  check_size(g, "induced biclique number");
  int n = g.vertex_count();
  if (g.edge_count() == 0) return 0;
  int alpha = alpha_mask(g, g.vertices());
  int smax = std::min(n / 2, alpha);

  // enumerate independent sets of size s ascending from `from`, then test the
  // common neighborhood for an independent set of size s
  struct Search {
    const Graph* g;
    int s;
    bool grow(VertexSet part, VertexSet common, int from) {
      if (part.size() == s) return alpha_mask(*g, common - part) >= s;
      for (int v = from; v < g->vertex_count(); ++v) {
        if ((part & g->neighbors(v)) != VertexSet()) continue;
        VertexSet c2 = part.empty() ? g->neighbors(v) : (common & g->neighbors(v));
        if (c2.size() < s) continue;
        VertexSet p2 = part;
        p2.add(v);
        if (grow(p2, c2, v + 1)) return true;
      }
      return false;
    }
  };
  for (int s = smax; s >= 1; --s) {
    Search search{&g, s};
    if (search.grow(VertexSet(), VertexSet(), 0)) return s;
  }
  return 0;
}

namespace {

bool fvs_feasible(const Graph& g, VertexSet mask, int budget) {
  auto cyc = shortest_cycle_within(g, mask);
  if (!cyc) return true;
  if (budget == 0) return false;
  std::vector<int> branch = *cyc;
  std::sort(branch.begin(), branch.end());
  for (int v : branch)
    if (fvs_feasible(g, mask - VertexSet::single(v), budget - 1)) return true;
  return false;
}

int fvs_size(const Graph& g, VertexSet mask) {
  for (int k = 0;; ++k)
    if (fvs_feasible(g, mask, k)) return k;
}

}  // namespace

VertexSet minimum_feedback_vertex_set(const Graph& g) {
  check_size(g, "feedback vertex set");
  int target = fvs_size(g, g.vertices());
  VertexSet chosen, mask = g.vertices();
  for (int v = 0; v < g.vertex_count() && chosen.size() < target; ++v) {
    VertexSet without = mask - VertexSet::single(v);
    if (fvs_size(g, without) == target - chosen.size() - 1) {
      chosen.add(v);
      mask = without;
    }
  }
  return chosen;
}

std::vector<int> mcs_elimination_order(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> weight(static_cast<size_t>(n), 0);
  std::vector<char> numbered(static_cast<size_t>(n), 0);
  std::vector<int> visit;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!numbered[static_cast<size_t>(v)] &&
          (pick < 0 || weight[static_cast<size_t>(v)] > weight[static_cast<size_t>(pick)]))
        pick = v;
    numbered[static_cast<size_t>(pick)] = 1;
    visit.push_back(pick);
    for (int u : g.neighbors(pick))
      if (!numbered[static_cast<size_t>(u)]) ++weight[static_cast<size_t>(u)];
  }
  std::reverse(visit.begin(), visit.end());
  return visit;  // elimination order: first entry eliminated first
}

bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order) {
  int n = g.vertex_count();
  std::vector<int> pos(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
  for (int i = 0; i < n; ++i) {
    int v = order[static_cast<size_t>(i)];
    VertexSet later;
    for (int u : g.neighbors(v))
      if (pos[static_cast<size_t>(u)] > i) later.add(u);
    if (later.empty()) continue;
    int u = -1;
    for (int w : later)
      if (u < 0 || pos[static_cast<size_t>(w)] < pos[static_cast<size_t>(u)]) u = w;
    later.remove(u);
    if (!later.subset_of(g.neighbors(u))) return false;
  }
  return true;
}

bool is_chordal_graph(const Graph& g) {
  return is_perfect_elimination_order(g, mcs_elimination_order(g));
}

TreeDecomposition chordal_clique_tree(const Graph& g) {
  std::vector<int> order = mcs_elimination_order(g);
  if (!is_perfect_elimination_order(g, order))
    throw PreconditionFailed("chordal clique tree requested for a non-chordal graph");
  return canonicalize_decomposition(decomposition_from_elimination_order(g, order));
}

// -- elimination-order subset DP -----------------------------------------

namespace {

struct EliminationDP {
  const Graph* g;
  int n;
  // cost of a bag, memoized by vertex set
  std::unordered_map<uint64_t, int>* cost_memo;
  int (*cost_fn)(const Graph&, VertexSet);

  std::vector<int8_t> dp;

  int cost(VertexSet bag) {
    auto it = cost_memo->find(bag.bits());
    if (it != cost_memo->end()) return it->second;
    int c = cost_fn(*g, bag);
    cost_memo->emplace(bag.bits(), c);
    return c;
  }

  // bags for every v in `remaining`, given the rest eliminated
  void bags_for(VertexSet remaining, std::array<VertexSet, kMaxVertices>& bag) {
    VertexSet eliminated = g->vertices() - remaining;
    // components of the eliminated part and their neighborhoods
    std::array<VertexSet, kMaxVertices> comp_nbr;
    int comps = 0;
    VertexSet todo = eliminated;
    while (!todo.empty()) {
      VertexSet comp = VertexSet::single(todo.first());
      for (;;) {
        VertexSet grow = (g->neighborhood_of(comp) & eliminated) - comp;
        if (grow.empty()) break;
        comp |= grow;
      }
      comp_nbr[static_cast<size_t>(comps++)] = g->neighborhood_of(comp);
      todo -= comp;
    }
    for (int v : remaining) {
      VertexSet b = VertexSet::single(v) | (g->neighbors(v) & remaining);
      for (int c = 0; c < comps; ++c)
        if (comp_nbr[static_cast<size_t>(c)].contains(v))
          b |= comp_nbr[static_cast<size_t>(c)] & remaining;
      bag[static_cast<size_t>(v)] = b;
    }
  }

  int solve() {
    dp.assign(size_t{1} << n, 0);
    std::array<VertexSet, kMaxVertices> bag;
    for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
      VertexSet remaining(mask);
      bags_for(remaining, bag);
      int best = INT8_MAX;
      for (int v : remaining) {
        int c = cost(bag[static_cast<size_t>(v)]);
        int rest = dp[mask & ~(uint64_t{1} << v)];
        best = std::min(best, std::max(c, rest));
      }
      dp[mask] = static_cast<int8_t>(best);
    }
    return dp[(uint64_t{1} << n) - 1];
  }

  std::vector<int> reconstruct() {
    std::vector<int> order;
    VertexSet remaining = g->vertices();
    std::array<VertexSet, kMaxVertices> bag;
    while (!remaining.empty()) {
      uint64_t mask = remaining.bits();
      bags_for(remaining, bag);
      for (int v : remaining) {
        int c = cost(bag[static_cast<size_t>(v)]);
        int rest = dp[mask & ~(uint64_t{1} << v)];
        if (std::max(c, rest) == dp[mask]) {
          order.push_back(v);
          remaining.remove(v);
          break;
        }
      }
    }
    return order;
  }
};

int bag_alpha(const Graph& g, VertexSet bag) { return alpha_mask(g, bag); }
int bag_theta(const Graph& g, VertexSet bag) {
  return clique_cover_number(induced_subgraph(g, bag));
}
int bag_size_cost(const Graph& g, VertexSet bag) {
  (void)g;
  return bag.size();
}

DecompositionValue run_elimination_dp(const Graph& g, int (*cost_fn)(const Graph&, VertexSet),
                                      int cap, const char* who) {
  int n = g.vertex_count();
  if (n > cap)
    throw CapExceeded(std::string(who) + " on " + std::to_string(n) +
                      " vertices exceeds cap " + std::to_string(cap));
  if (n == 0) {
    TreeDecomposition td;
    td.host = g;
    td.bags.push_back(VertexSet());
    return {0, td};
  }
  std::unordered_map<uint64_t, int> memo;
  EliminationDP dp{&g, n, &memo, cost_fn, {}};
  int value = dp.solve();
  TreeDecomposition td = canonicalize_decomposition(
      decomposition_from_elimination_order(g, dp.reconstruct()));
  return {value, td};
}

}  // namespace

DecompositionValue tree_independence_number(const Graph& g) {
  return run_elimination_dp(g, bag_alpha, caps().oracle_cap, "tree independence number");
}

DecompositionValue tree_clique_cover_number(const Graph& g) {
  return run_elimination_dp(g, bag_theta, caps().oracle_cap, "tree clique cover number");
}

int treewidth(const Graph& g) {
  if (g.vertex_count() == 0) return -1;
  return run_elimination_dp(g, bag_size_cost, caps().treewidth_cap, "treewidth").value - 1;
}

TreeDecomposition treewidth_decomposition(const Graph& g) {
  return run_elimination_dp(g, bag_size_cost, caps().treewidth_cap, "treewidth").decomposition;
}

SplitPartition splitness(const Graph& g) {
  int n = g.vertex_count();
  int cap = std::min(caps().size_cap, 24);
  if (n > cap)
    throw CapExceeded("splitness on " + std::to_string(n) + " vertices exceeds cap " +
                      std::to_string(cap));
  // subset tables: alpha over g, and alpha over the complement (= omega)
  size_t states = size_t{1} << n;
  std::vector<int8_t> alpha_tab(states, 0), omega_tab(states, 0);
  for (uint64_t mask = 1; mask < states; ++mask) {
    int v = __builtin_ctzll(mask);
    uint64_t rest = mask & ~(uint64_t{1} << v);
    alpha_tab[mask] = std::max<int8_t>(
        alpha_tab[rest],
        static_cast<int8_t>(1 + alpha_tab[mask & ~g.closed_neighbors(v).bits()]));
    omega_tab[mask] = std::max<int8_t>(
        omega_tab[rest], static_cast<int8_t>(1 + omega_tab[mask & g.neighbors(v).bits()]));
  }
  SplitPartition best;
  best.k = INT8_MAX;
  for (uint64_t a = 0; a < states; ++a) {
    uint64_t b = (states - 1) & ~a;
    int k = std::max<int>(omega_tab[a], alpha_tab[b]);
    if (k < best.k) {
      best.k = k;
      best.clique_side = VertexSet(a);
      best.independent_side = VertexSet(b);
    }
  }
  return best;
}

}  // namespace tia
