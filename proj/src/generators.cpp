#include "tia/generators.hpp"

#include <mutex>
#include <random>
#include <set>
#include <utility>

#include "tia/canonical.hpp"
#include "tia/graph6.hpp"
#include "tia/oracles.hpp"
#include "tia/patterns.hpp"

namespace tia {

namespace {

void want(bool ok, const std::string& clause) {
  if (!ok) throw PreconditionFailed(clause);
}

// chain of `len` edges from u to v; interiors taken from `next` upward
void add_path(Graph& g, int u, int v, int len, int& next) {
  int prev = u;
  for (int i = 1; i < len; ++i) {
    g.add_edge(prev, next);
    prev = next++;
  }
  g.add_edge(prev, v);
}

int sum_of(const std::vector<int>& xs) {
  int s = 0;
  for (int x : xs) s += x;
  return s;
}

}  // namespace

Graph make_family(const std::string& family, const std::vector<int>& params) {
  if (family == "prism") {
    want(params.size() == 3, "prism takes three path lengths");
    for (int l : params) want(l >= 1, "prism paths must have length at least 1");
    Graph g(6 + sum_of(params) - 3);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    g.add_edge(3, 5);
    g.add_edge(4, 5);
    int next = 6;
    for (int i = 0; i < 3; ++i) add_path(g, i, 3 + i, params[static_cast<size_t>(i)], next);
    return g;
  }
  if (family == "pyramid") {
    want(params.size() == 3, "pyramid takes three path lengths");
    for (int l : params) want(l >= 1, "pyramid paths must have length at least 1");
    int shorts = 0;
    for (int l : params) shorts += l == 1;
    want(shorts <= 1, "pyramid needs two paths of length at least 2");
    Graph g(4 + sum_of(params) - 3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    int next = 4;
    for (int i = 0; i < 3; ++i) add_path(g, 0, 1 + i, params[static_cast<size_t>(i)], next);
    return g;
  }
  if (family == "theta") {
    want(params.size() == 3, "theta takes three path lengths");
    for (int l : params) want(l >= 2, "theta paths must have length at least 2");
    Graph g(2 + sum_of(params) - 3);
    int next = 2;
    for (int i = 0; i < 3; ++i) add_path(g, 0, 1, params[static_cast<size_t>(i)], next);
    return g;
  }
  if (family == "wheel") {
    want(params.size() >= 3, "wheel needs at least three sectors");
    for (int s : params) want(s >= 1, "wheel sectors must have length at least 1");
    int rim = sum_of(params);
    want(rim >= 4, "wheel rim must be a hole: total length at least 4");
    Graph g(rim + 1);
    for (int i = 0; i < rim; ++i) g.add_edge(i, (i + 1) % rim);
    int pos = 0;
    for (size_t i = 0; i < params.size(); ++i) {
      g.add_edge(rim, pos);
      pos += params[i];
    }
    return g;
  }
  if (family == "g_t") {
    want(params.size() == 1 && params[0] >= 1, "g_t takes one parameter t >= 1");
    int t = params[0];
    Graph g(2 * t + 1);
    for (int i = 1; i <= t; ++i)
      for (int j = i + 1; j <= t; ++j) g.add_edge(i, j);
    for (int i = 1; i <= t; ++i) {
      g.add_edge(0, t + i);
      g.add_edge(t + i, i);
    }
    return g;
  }
  if (family == "complete_bipartite") {
    want(params.size() == 2 && params[0] >= 0 && params[1] >= 0,
         "complete_bipartite takes two nonnegative side sizes");
    Graph g(params[0] + params[1]);
    for (int i = 0; i < params[0]; ++i)
      for (int j = 0; j < params[1]; ++j) g.add_edge(i, params[0] + j);
    return g;
  }
  if (family == "complete_multipartite") {
    want(!params.empty(), "complete_multipartite takes positive part sizes");
    for (int s : params) want(s >= 1, "complete_multipartite takes positive part sizes");
    Graph g(sum_of(params));
    int off_i = 0;
    for (size_t a = 0; a < params.size(); ++a) {
      int off_j = off_i + params[a];
      for (size_t b = a + 1; b < params.size(); ++b) {
        for (int i = 0; i < params[a]; ++i)
          for (int j = 0; j < params[b]; ++j) g.add_edge(off_i + i, off_j + j);
        off_j += params[b];
      }
      off_i += params[a];
    }
    return g;
  }
  if (family == "clique_partition") {
    want(!params.empty(), "clique_partition takes positive clique sizes");
    for (int s : params) want(s >= 1, "clique_partition takes positive clique sizes");
    Graph g(sum_of(params));
    int off = 0;
    for (int s : params) {
      for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) g.add_edge(off + i, off + j);
      off += s;
    }
    return g;
  }
  if (family == "path") {
    want(params.size() == 1 && params[0] >= 0, "path takes one nonnegative vertex count");
    Graph g(params[0]);
    for (int i = 0; i + 1 < params[0]; ++i) g.add_edge(i, i + 1);
    return g;
  }
  if (family == "cycle") {
    want(params.size() == 1, "cycle takes one vertex count");
    want(params[0] >= 3, "cycle needs at least three vertices");
    Graph g(params[0]);
    for (int i = 0; i < params[0]; ++i) g.add_edge(i, (i + 1) % params[0]);
    return g;
  }
  if (family == "star") {
    want(params.size() == 1 && params[0] >= 0, "star takes one nonnegative leaf count");
    Graph g(params[0] + 1);
    for (int i = 1; i <= params[0]; ++i) g.add_edge(0, i);
    return g;
  }
  throw PreconditionFailed("unknown graph family \"" + family + "\"");
}

const std::vector<Graph>& all_graphs_on(int n) {
  if (n < 0) throw Error("negative vertex count");
  if (n > caps().enum_cap)
    throw CapExceeded("enumeration on " + std::to_string(n) + " vertices exceeds cap " +
                      std::to_string(caps().enum_cap));
  static std::mutex mu;
  static std::vector<std::vector<Graph>> levels;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(levels.size()) <= n) {
    int k = static_cast<int>(levels.size());
    std::vector<Graph> level;
    if (k == 0) {
      level.emplace_back(0);
    } else {
      std::set<std::string> seen;
      for (const Graph& g : levels[static_cast<size_t>(k - 1)]) {
        for (uint64_t mask = 0; mask < (uint64_t{1} << (k - 1)); ++mask) {
          Graph h(k);
          for (auto [u, v] : g.edges()) h.add_edge(u, v);
          for (int v = 0; v < k - 1; ++v)
            if ((mask >> v) & 1) h.add_edge(v, k - 1);
          seen.insert(canonical_form(h));
        }
      }
      level.reserve(seen.size());
      for (const std::string& s : seen) level.push_back(graph6_decode(s));
    }
    levels.push_back(std::move(level));
  }
  return levels[static_cast<size_t>(n)];
}

EnumerationStream::EnumerationStream(int n, std::string class_expression)
    : level_(&all_graphs_on(n)), filter_(std::move(class_expression)) {}

std::optional<Graph> EnumerationStream::next() {
  while (pos_ < level_->size()) {
    const Graph& g = (*level_)[pos_++];
    if (filter_.empty() || in_class(g, filter_)) {
      ++emitted_;
      return g;
    }
  }
  return std::nullopt;
}

Graph random_in_class(int n, const std::string& class_expression, uint64_t seed) {
  if (n < 0) throw Error("negative vertex count");
  if (n > caps().random_cap)
    throw CapExceeded("random generation on " + std::to_string(n) + " vertices exceeds cap " +
                      std::to_string(caps().random_cap));
  std::mt19937_64 rng(seed);
  const int budget = 20000;
  // each attempt draws its own edge-probability model; accepted samples then
  // cover the whole density range the class admits instead of only the sparse end
  for (int attempt = 0; attempt < budget; ++attempt) {
    double mean_degree = 0.2 + 3.8 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    double p = n > 1 ? mean_degree / (n - 1) : 0.0;
    Graph g(n);
    if (p >= 1.0) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    } else {
      // cast keeps the draw identical across platforms
      auto threshold = static_cast<uint64_t>(p * 18446744073709551616.0);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng() < threshold) g.add_edge(i, j);
    }
    if (class_expression.empty() || in_class(g, class_expression)) return g;
  }
  throw Error("no graph on " + std::to_string(n) + " vertices in class \"" + class_expression +
              "\" after " + std::to_string(budget) + " attempts (seed " + std::to_string(seed) +
              ")");
}

SubdivisionReport subdivision_lower_bound_check(const Graph& g) {
  SubdivisionReport r;
  r.tw_before = treewidth(g);
  Graph sub = subdivide_all(g);
  r.tw_after = treewidth(sub);
  r.tree_alpha_after = tree_independence_number(sub).value;
  r.inequality_holds = r.tw_after <= 2 * r.tree_alpha_after - 1;
  return r;
}

}  // namespace tia
