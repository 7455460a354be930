#include "tia/decomposition.hpp"

#include <algorithm>
#include <sstream>

#include "tia/oracles.hpp"

namespace tia {

namespace {

std::vector<std::vector<int>> tree_adjacency(const TreeDecomposition& td) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(td.node_count()));
  for (auto [a, b] : td.tree_edges) {
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  return adj;
}

}  // namespace

ValidationResult validate_decomposition(const TreeDecomposition& td) {
  int k = td.node_count();
  int n = td.host.vertex_count();
  if (k == 0) return {false, "decomposition has no nodes"};
  for (const VertexSet& bag : td.bags)
    if (!bag.subset_of(td.host.vertices()))
      return {false, "bag contains a vertex outside the host graph"};
  if (static_cast<int>(td.tree_edges.size()) != k - 1)
    return {false, "tree has " + std::to_string(td.tree_edges.size()) + " edges, expected " +
                       std::to_string(k - 1)};
  for (auto [a, b] : td.tree_edges)
    if (a < 0 || a >= k || b < 0 || b >= k || a == b)
      return {false, "tree edge endpoints out of range"};
  // connectivity (with k-1 edges this also implies acyclicity)
  {
    std::vector<std::vector<int>> adj = tree_adjacency(td);
    std::vector<char> seen(static_cast<size_t>(k), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi)
      for (int nb : adj[static_cast<size_t>(queue[qi])])
        if (!seen[static_cast<size_t>(nb)]) {
          seen[static_cast<size_t>(nb)] = 1;
          queue.push_back(nb);
        }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      return {false, "tree edges do not connect the nodes"};
  }
  VertexSet covered;
  for (const VertexSet& bag : td.bags) covered |= bag;
  if (covered != td.host.vertices()) {
    int v = (td.host.vertices() - covered).first();
    return {false, "uncovered vertex " + std::to_string(v)};
  }
  for (auto [u, v] : td.host.edges()) {
    bool ok = false;
    for (const VertexSet& bag : td.bags)
      if (bag.contains(u) && bag.contains(v)) {
        ok = true;
        break;
      }
    if (!ok) return {false, "uncovered edge " + std::to_string(u) + "-" + std::to_string(v)};
  }
  // traces must induce subtrees
  std::vector<std::vector<int>> adj = tree_adjacency(td);
  for (int v = 0; v < n; ++v) {
    int start = -1, count = 0;
    for (int i = 0; i < k; ++i)
      if (td.bags[static_cast<size_t>(i)].contains(v)) {
        if (start < 0) start = i;
        ++count;
      }
    std::vector<char> seen(static_cast<size_t>(k), 0);
    std::vector<int> queue{start};
    seen[static_cast<size_t>(start)] = 1;
    int reached = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      ++reached;
      for (int nb : adj[static_cast<size_t>(queue[qi])])
        if (!seen[static_cast<size_t>(nb)] && td.bags[static_cast<size_t>(nb)].contains(v)) {
          seen[static_cast<size_t>(nb)] = 1;
          queue.push_back(nb);
        }
    }
    if (reached != count) return {false, "disconnected trace for vertex " + std::to_string(v)};
  }
  return {true, ""};
}

int independence_of_decomposition(const TreeDecomposition& td) {
  int best = 0;
  for (const VertexSet& bag : td.bags)
    best = std::max(best, independence_number(induced_subgraph(td.host, bag)));
  return best;
}

int clique_cover_of_decomposition(const TreeDecomposition& td) {
  int best = 0;
  for (const VertexSet& bag : td.bags)
    best = std::max(best, clique_cover_number(induced_subgraph(td.host, bag)));
  return best;
}

int width_of_decomposition(const TreeDecomposition& td) {
  int best = -1;
  for (const VertexSet& bag : td.bags) best = std::max(best, bag.size());
  return td.bags.empty() ? -1 : best - 1;
}

TreeDecomposition canonicalize_decomposition(const TreeDecomposition& td) {
  std::vector<VertexSet> bags = td.bags;
  std::vector<std::pair<int, int>> edges = td.tree_edges;

  // contract tree edges whose bags nest
  for (bool changed = true; changed;) {
    changed = false;
    std::sort(edges.begin(), edges.end());
    for (size_t i = 0; i < edges.size(); ++i) {
      auto [a, b] = edges[i];
      int drop, keep;
      if (bags[static_cast<size_t>(a)] == bags[static_cast<size_t>(b)]) {
        keep = std::min(a, b);
        drop = std::max(a, b);
      } else if (bags[static_cast<size_t>(a)].subset_of(bags[static_cast<size_t>(b)])) {
        drop = a;
        keep = b;
      } else if (bags[static_cast<size_t>(b)].subset_of(bags[static_cast<size_t>(a)])) {
        drop = b;
        keep = a;
      } else {
        continue;
      }
      edges.erase(edges.begin() + static_cast<long>(i));
      for (auto& [x, y] : edges) {
        if (x == drop) x = keep;
        if (y == drop) y = keep;
      }
      bags.erase(bags.begin() + drop);
      for (auto& [x, y] : edges) {
        if (x > drop) --x;
        if (y > drop) --y;
      }
      changed = true;
      break;
    }
  }

  // renumber by sorted bag contents
  int k = static_cast<int>(bags.size());
  std::vector<int> index(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) index[static_cast<size_t>(i)] = i;
  std::sort(index.begin(), index.end(), [&](int x, int y) {
    auto vx = bags[static_cast<size_t>(x)].to_vector();
    auto vy = bags[static_cast<size_t>(y)].to_vector();
    return vx < vy || (vx == vy && x < y);
  });
  std::vector<int> where(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) where[static_cast<size_t>(index[static_cast<size_t>(i)])] = i;

  TreeDecomposition out;
  out.host = td.host;
  out.bags.resize(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) out.bags[static_cast<size_t>(where[static_cast<size_t>(i)])] = bags[static_cast<size_t>(i)];
  for (auto [a, b] : edges) {
    int x = where[static_cast<size_t>(a)], y = where[static_cast<size_t>(b)];
    out.tree_edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(out.tree_edges.begin(), out.tree_edges.end());
  return out;
}

TreeDecomposition trivial_decomposition(const Graph& g) {
  TreeDecomposition td;
  td.host = g;
  td.bags.push_back(g.vertices());
  return td;
}

TreeDecomposition decomposition_from_elimination_order(const Graph& g,
                                                       const std::vector<int>& order) {
  int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n)
    throw PreconditionFailed("elimination order must list every vertex once");
  TreeDecomposition td;
  td.host = g;
  if (n == 0) {
    td.bags.push_back(VertexSet());
    return td;
  }
  std::vector<int> pos(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;

  VertexSet eliminated;
  for (int i = 0; i < n; ++i) {
    int v = order[static_cast<size_t>(i)];
    VertexSet comp = VertexSet::single(v);
    for (;;) {
      VertexSet grow = (g.neighborhood_of(comp) & eliminated) - comp;
      if (grow.empty()) break;
      comp |= grow;
    }
    VertexSet bag = VertexSet::single(v) | (g.neighborhood_of(comp) - eliminated);
    td.bags.push_back(bag);
    eliminated.add(v);
  }
  for (int i = 0; i < n; ++i) {
    VertexSet rest = td.bags[static_cast<size_t>(i)];
    rest.remove(order[static_cast<size_t>(i)]);
    int parent = -1;
    for (int w : rest) {
      int p = pos[static_cast<size_t>(w)];
      if (parent < 0 || p < parent) parent = p;
    }
    if (parent < 0 && i + 1 < n) parent = i + 1;
    if (parent >= 0) td.tree_edges.emplace_back(i, parent);
  }
  return td;
}

std::string write_td(const TreeDecomposition& td) {
  std::ostringstream out;
  int max_bag = 0;
  for (const VertexSet& bag : td.bags) max_bag = std::max(max_bag, bag.size());
  out << "s td " << td.node_count() << " " << max_bag << " " << td.host.vertex_count() << "\n";
  for (int i = 0; i < td.node_count(); ++i) {
    out << "b " << (i + 1);
    for (int v : td.bags[static_cast<size_t>(i)]) out << " " << (v + 1);
    out << "\n";
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : td.tree_edges) edges.emplace_back(std::min(a, b) + 1, std::max(a, b) + 1);
  std::sort(edges.begin(), edges.end());
  for (auto [a, b] : edges) out << a << " " << b << "\n";
  return out.str();
}

TreeDecomposition read_td(const std::string& text, const Graph& host) {
  std::istringstream in(text);
  std::string line;
  long line_no = 0;
  bool have_header = false;
  int bag_count = 0, n = 0;
  TreeDecomposition td;
  td.host = host;
  std::vector<char> bag_seen;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "s") {
      std::string kind;
      int max_bag = 0;
      if (have_header) throw FormatError("second s-line", line_no);
      if (!(ls >> kind >> bag_count >> max_bag >> n) || kind != "td")
        throw FormatError("malformed s-line", line_no);
      if (bag_count < 0 || n < 0) throw FormatError("negative counts in s-line", line_no);
      if (n != host.vertex_count())
        throw FormatError("decomposition is over " + std::to_string(n) +
                              " vertices but the graph has " +
                              std::to_string(host.vertex_count()),
                          line_no);
      have_header = true;
      td.bags.assign(static_cast<size_t>(bag_count), VertexSet());
      bag_seen.assign(static_cast<size_t>(bag_count), 0);
      continue;
    }
    if (!have_header) throw FormatError("content before s-line", line_no);
    if (tok == "b") {
      int id = 0;
      if (!(ls >> id) || id < 1 || id > bag_count) throw FormatError("bad bag id", line_no);
      if (bag_seen[static_cast<size_t>(id - 1)]) throw FormatError("duplicate bag id", line_no);
      bag_seen[static_cast<size_t>(id - 1)] = 1;
      int v = 0;
      while (ls >> v) {
        if (v < 1 || v > n) throw FormatError("bag vertex out of range", line_no);
        td.bags[static_cast<size_t>(id - 1)].add(v - 1);
      }
      continue;
    }
    int a = 0, b = 0;
    try {
      a = std::stoi(tok);
    } catch (...) {
      throw FormatError("unexpected token '" + tok + "'", line_no);
    }
    if (!(ls >> b)) throw FormatError("tree edge needs two node ids", line_no);
    if (a < 1 || a > bag_count || b < 1 || b > bag_count || a == b)
      throw FormatError("tree edge endpoints out of range", line_no);
    td.tree_edges.emplace_back(a - 1, b - 1);
  }
  if (!have_header) throw FormatError("missing s-line");
  return td;
}

}  // namespace tia
