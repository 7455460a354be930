#include "tia/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tia/canonical.hpp"
#include "tia/obstructions.hpp"
#include "tia/oracles.hpp"
#include "tia/subsets.hpp"

namespace tia {

namespace {

Graph make_path(int k) {
  Graph g(k);
  for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_cycle(int k) {
  Graph g = make_path(k);
  g.add_edge(0, k - 1);
  return g;
}

Graph make_complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph make_multipartite(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) n += p;
  Graph g(n);
  int a = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    int b = a + parts[i];
    for (int u = a; u < b; ++u)
      for (int v = b; v < n; ++v) g.add_edge(u, v);
    a = b;
  }
  return g;
}

Graph named_pattern(const std::string& name) {
  if (name == "claw") return make_multipartite({1, 3});
  if (name == "paw")
    return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  if (name == "diamond")
    return Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  if (name == "gem") return join(make_path(4), Graph(1));
  if (name == "bull")
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
  if (name == "house") return complement(make_path(5));
  if (name == "butterfly")
    return Graph::from_edges(5, {{0, 1}, {0, 4}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  if (name == "net")
    return Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
  throw FormatError("unrecognized pattern '" + name + "'");
}

int parse_int(const std::string& s, size_t& pos) {
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw FormatError("expected a number in pattern '" + s + "'");
  return std::stoi(s.substr(start, pos - start));
}

Graph parse_atom(const std::string& token) {
  std::string lower = token;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (!lower.empty() && std::isalpha(static_cast<unsigned char>(lower[0])) &&
      lower.size() > 2)
    if (lower == "claw" || lower == "paw" || lower == "diamond" || lower == "gem" ||
        lower == "bull" || lower == "house" || lower == "butterfly" || lower == "net")
      return named_pattern(lower);
  if (token.empty()) throw FormatError("empty pattern");
  char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
  size_t pos = 1;
  if (kind == 'P' || kind == 'C' || kind == 'W') {
    int k = parse_int(token, pos);
    if (pos != token.size()) throw FormatError("unrecognized pattern '" + token + "'");
    if (kind == 'P') {
      if (k < 1) throw FormatError("path needs at least one vertex");
      return make_path(k);
    }
    if (k < 3) throw FormatError("cycle needs at least three vertices");
    return kind == 'C' ? make_cycle(k) : join(make_cycle(k), Graph(1));
  }
  if (kind == 'K') {
    bool minus_edge = false;
    std::string body = token.substr(1);
    if (body.size() >= 2 && body.substr(body.size() - 2) == "-e") {
      minus_edge = true;
      body = body.substr(0, body.size() - 2);
    }
    std::vector<int> parts;
    size_t p = 0;
    for (;;) {
      parts.push_back(parse_int(body, p));
      if (parts.back() < 1) throw FormatError("part sizes must be positive in '" + token + "'");
      if (p == body.size()) break;
      if (body[p] != ',') throw FormatError("unrecognized pattern '" + token + "'");
      ++p;
    }
    if (parts.size() == 1) {
      int n = parts[0];
      if (!minus_edge) return make_complete(n);
      if (n < 2) throw FormatError("'" + token + "' needs at least two vertices");
      Graph g = make_complete(n);
      g.remove_edge(0, 1);
      return g;
    }
    if (minus_edge) throw FormatError("'-e' only applies to complete graphs");
    return make_multipartite(parts);
  }
  throw FormatError("unrecognized pattern '" + token + "'");
}

Graph parse_term(const std::string& token) {
  size_t pos = 0;
  int copies = 1;
  if (!token.empty() && std::isdigit(static_cast<unsigned char>(token[0]))) {
    copies = parse_int(token, pos);
    if (copies < 1) throw FormatError("multiplier must be positive in '" + token + "'");
  }
  Graph atom = parse_atom(token.substr(pos));
  Graph out = atom;
  for (int i = 1; i < copies; ++i) out = disjoint_union(out, atom);
  return out;
}

}  // namespace

Graph pattern_graph(const std::string& expression) {
  std::string cleaned;
  for (char c : expression)
    if (c != ' ' && c != '_' && c != '{' && c != '}') cleaned.push_back(c);
  if (cleaned.empty()) throw FormatError("empty pattern expression");
  std::optional<Graph> out;
  size_t start = 0;
  while (start <= cleaned.size()) {
    size_t plus = cleaned.find('+', start);
    std::string token =
        cleaned.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    Graph term = parse_term(token);
    out = out ? disjoint_union(*out, term) : term;
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return *out;
}

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

// spanning monomorphism of `pattern` into g restricted to `s`
bool embeds_spanning(const Graph& g, const std::vector<int>& s, const Graph& pattern) {
  int k = pattern.vertex_count();
  std::vector<int> order(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return pattern.degree(a) != pattern.degree(b) ? pattern.degree(a) > pattern.degree(b)
                                                  : a < b;
  });
  std::vector<int> image(static_cast<size_t>(k), -1);
  std::vector<char> used(s.size(), 0);
  auto rec = [&](auto&& self, int idx) -> bool {
    if (idx == k) return true;
    int pv = order[static_cast<size_t>(idx)];
    for (size_t i = 0; i < s.size(); ++i) {
      if (used[i]) continue;
      int gv = s[i];
      if (g.degree(gv) < pattern.degree(pv)) continue;
      bool ok = true;
      for (int j = 0; j < idx && ok; ++j) {
        int pu = order[static_cast<size_t>(j)];
        if (pattern.adjacent(pv, pu) && !g.adjacent(gv, image[static_cast<size_t>(pu)]))
          ok = false;
      }
      if (!ok) continue;
      used[i] = 1;
      image[static_cast<size_t>(pv)] = gv;
      if (self(self, idx + 1)) return true;
      used[i] = 0;
      image[static_cast<size_t>(pv)] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

std::optional<VertexSet> find_induced(const Graph& g, const Graph& pattern) {
  int k = pattern.vertex_count();
  if (k == 0) return VertexSet();
  if (k > g.vertex_count()) return std::nullopt;
  std::vector<int> pdeg = sorted_degrees(pattern);
  std::string pform = canonical_form(pattern);
  std::optional<VertexSet> hit;
  for_each_subset(g.vertex_count(), k, [&](const std::vector<int>& s) {
    VertexSet set = VertexSet::of(s);
    Graph ind = induced_subgraph(g, set);
    if (sorted_degrees(ind) != pdeg) return false;
    if (canonical_form(ind) != pform) return false;
    hit = set;
    return true;
  });
  return hit;
}

bool contains_induced(const Graph& g, const Graph& pattern) {
  return find_induced(g, pattern).has_value();
}

std::optional<VertexSet> find_subgraph(const Graph& g, const Graph& pattern) {
  int k = pattern.vertex_count();
  if (k == 0) return VertexSet();
  if (k > g.vertex_count()) return std::nullopt;
  std::optional<VertexSet> hit;
  for_each_subset(g.vertex_count(), k, [&](const std::vector<int>& s) {
    if (!embeds_spanning(g, s, pattern)) return false;
    hit = VertexSet::of(s);
    return true;
  });
  return hit;
}

bool contains_subgraph(const Graph& g, const Graph& pattern) {
  return find_subgraph(g, pattern).has_value();
}

bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges())
    if (!(g.neighbors(u) & g.neighbors(v)).empty()) return false;
  return true;
}

std::optional<std::vector<int>> odd_cycle(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(static_cast<size_t>(n), -1), parent(static_cast<size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (color[static_cast<size_t>(root)] != -1) continue;
    color[static_cast<size_t>(root)] = 0;
    std::vector<int> queue{root};
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int v : g.neighbors(u)) {
        if (color[static_cast<size_t>(v)] == -1) {
          color[static_cast<size_t>(v)] = color[static_cast<size_t>(u)] ^ 1;
          parent[static_cast<size_t>(v)] = u;
          queue.push_back(v);
        } else if (color[static_cast<size_t>(v)] == color[static_cast<size_t>(u)]) {
          // walk both vertices up to their lowest common ancestor
          std::vector<int> pu{u}, pv{v};
          while (pu.back() != -1) pu.push_back(parent[static_cast<size_t>(pu.back())]);
          while (pv.back() != -1) pv.push_back(parent[static_cast<size_t>(pv.back())]);
          pu.pop_back();
          pv.pop_back();
          while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
            pu.pop_back();
            pv.pop_back();
          }
          std::vector<int> cycle(pu.begin(), pu.end());
          for (size_t i = pv.size() - 1; i > 0; --i) cycle.push_back(pv[i - 1]);
          return cycle;
        }
      }
    }
  }
  return std::nullopt;
}

bool is_bipartite(const Graph& g) { return !odd_cycle(g).has_value(); }

std::optional<std::vector<int>> multipartite_parts(const Graph& g) {
  Graph co = complement(g);
  std::vector<int> sizes;
  for (const VertexSet& comp : components(co)) {
    Graph part = induced_subgraph(co, comp);
    int k = part.vertex_count();
    if (part.edge_count() != k * (k - 1) / 2) return std::nullopt;
    sizes.push_back(k);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  if (g.vertex_count() == 0) sizes.clear();
  return sizes;
}

bool is_complete_multipartite(const Graph& g) { return multipartite_parts(g).has_value(); }

bool is_paw_free_structured(const Graph& g) {
  for (const VertexSet& comp : components(g)) {
    Graph part = induced_subgraph(g, comp);
    if (!is_triangle_free(part) && !is_complete_multipartite(part)) return false;
  }
  return true;
}

bool is_k1t_free(const Graph& g, int t) {
  if (t < 1) throw PreconditionFailed("star size must be at least 1");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (independence_number(induced_subgraph(g, g.neighbors(v))) >= t) return false;
  return true;
}

std::optional<std::vector<int>> find_k1t(const Graph& g, int t) {
  if (t < 1) throw PreconditionFailed("star size must be at least 1");
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> nbrs = g.neighbors(v).to_vector();
    if (static_cast<int>(nbrs.size()) < t) continue;
    std::optional<std::vector<int>> leaves;
    for_each_subset(static_cast<int>(nbrs.size()), t, [&](const std::vector<int>& pick) {
      for (size_t i = 0; i < pick.size(); ++i)
        for (size_t j = i + 1; j < pick.size(); ++j)
          if (g.adjacent(nbrs[static_cast<size_t>(pick[i])], nbrs[static_cast<size_t>(pick[j])]))
            return false;
      std::vector<int> out;
      for (int idx : pick) out.push_back(nbrs[static_cast<size_t>(idx)]);
      leaves = out;
      return true;
    });
    if (leaves) {
      std::vector<int> witness{v};
      witness.insert(witness.end(), leaves->begin(), leaves->end());
      return witness;
    }
  }
  return std::nullopt;
}

namespace {

std::string format_set(VertexSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int v : s) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

std::string format_cycle(const std::vector<int>& cyc) {
  std::ostringstream out;
  for (size_t i = 0; i < cyc.size(); ++i) {
    if (i) out << '-';
    out << cyc[i];
  }
  return out.str();
}

bool ends_with(const std::string& s, const std::string& suffix, std::string& head) {
  if (s.size() <= suffix.size() || s.substr(s.size() - suffix.size()) != suffix) return false;
  head = s.substr(0, s.size() - suffix.size());
  return true;
}

// K1,<t> after normalization, for the structural star check
std::optional<int> star_pattern_size(const std::string& name) {
  std::string cleaned;
  for (char c : name)
    if (c != ' ' && c != '_' && c != '{' && c != '}') cleaned.push_back(c);
  if (cleaned.size() < 4 || (cleaned[0] != 'K' && cleaned[0] != 'k') || cleaned[1] != '1' ||
      cleaned[2] != ',')
    return std::nullopt;
  for (size_t i = 3; i < cleaned.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(cleaned[i]))) return std::nullopt;
  return std::stoi(cleaned.substr(3));
}

ClassAtomResult evaluate_atom(const Graph& g, const std::string& atom) {
  ClassAtomResult res;
  res.atom = atom;
  std::string head;
  if (atom == "chordal") {
    res.holds = is_chordal_graph(g);
    if (!res.holds)
      for (int k = 4; k <= g.vertex_count() && res.witness.empty(); ++k)
        if (auto hole = find_induced(g, pattern_graph("C" + std::to_string(k))))
          res.witness = "induced C" + std::to_string(k) + " on " + format_set(*hole);
    return res;
  }
  if (atom == "bipartite") {
    auto cyc = odd_cycle(g);
    res.holds = !cyc.has_value();
    if (cyc) res.witness = "odd cycle " + format_cycle(*cyc);
    return res;
  }
  if (atom == "connected") {
    res.holds = is_connected(g);
    if (!res.holds) res.witness = "component " + format_set(components(g).front());
    return res;
  }
  if (atom == "has-edge") {
    res.holds = g.edge_count() > 0;
    if (!res.holds) res.witness = "graph has no edges";
    return res;
  }
  if (atom == "complete-multipartite") {
    auto hit = find_induced(g, pattern_graph("K2+K1"));
    res.holds = !hit.has_value();
    if (hit) res.witness = "induced K2+K1 on " + format_set(*hit);
    return res;
  }
  if (atom == "triangle-free") {
    res.holds = is_triangle_free(g);
    if (!res.holds) res.witness = "induced K3 on " + format_set(*find_induced(g, make_complete(3)));
    return res;
  }
  if (atom.size() > 1 && (atom[0] == 'O' || atom[0] == 'o') &&
      ends_with(atom, "-free", head) &&
      std::all_of(head.begin() + 1, head.end(),
                  [](unsigned char c) { return std::isdigit(c); })) {
    int k = std::stoi(head.substr(1));
    auto cycles = find_independent_cycles(g, k);
    res.holds = !cycles.has_value();
    if (cycles) {
      std::string w;
      for (const auto& c : *cycles) {
        if (!w.empty()) w += " ; ";
        w += format_cycle(c);
      }
      res.witness = std::to_string(k) + " independent cycles: " + w;
    }
    return res;
  }
  if (ends_with(atom, "-induced-minor-free", head)) {
    auto model = find_induced_minor(g, pattern_graph(head));
    res.holds = !model.has_value();
    if (model) {
      std::string w;
      for (const VertexSet& part : *model) {
        if (!w.empty()) w += ' ';
        w += format_set(part);
      }
      res.witness = head + " induced minor with branch sets " + w;
    }
    return res;
  }
  if (ends_with(atom, "-subgraph-free", head)) {
    auto hit = find_subgraph(g, pattern_graph(head));
    res.holds = !hit.has_value();
    if (hit) res.witness = head + " subgraph on " + format_set(*hit);
    return res;
  }
  if (ends_with(atom, "-free", head)) {
    if (auto t = star_pattern_size(head)) {
      auto star = find_k1t(g, *t);
      res.holds = !star.has_value();
      if (star) {
        VertexSet leaves;
        for (size_t i = 1; i < star->size(); ++i) leaves.add((*star)[i]);
        res.witness = "star center " + std::to_string((*star)[0]) + " leaves " + format_set(leaves);
      }
      return res;
    }
    auto hit = find_induced(g, pattern_graph(head));
    res.holds = !hit.has_value();
    if (hit) res.witness = "induced " + head + " on " + format_set(*hit);
    return res;
  }
  throw FormatError("unrecognized class atom '" + atom + "'");
}

std::vector<std::string> split_atoms(const std::string& expression) {
  std::vector<std::string> atoms;
  size_t start = 0;
  while (start <= expression.size()) {
    size_t amp = expression.find('&', start);
    std::string token = expression.substr(
        start, amp == std::string::npos ? std::string::npos : amp - start);
    size_t a = token.find_first_not_of(' ');
    size_t b = token.find_last_not_of(' ');
    if (a == std::string::npos) throw FormatError("empty class atom");
    atoms.push_back(token.substr(a, b - a + 1));
    if (amp == std::string::npos) break;
    start = amp + 1;
  }
  if (atoms.empty()) throw FormatError("empty class expression");
  return atoms;
}

}  // namespace

bool ClassReport::all_hold() const {
  for (const auto& a : atoms)
    if (!a.holds) return false;
  return true;
}

ClassReport classify(const Graph& g, const std::string& expression) {
  ClassReport report;
  report.expression = expression;
  for (const std::string& atom : split_atoms(expression))
    report.atoms.push_back(evaluate_atom(g, atom));
  return report;
}

bool in_class(const Graph& g, const std::string& expression) {
  for (const std::string& atom : split_atoms(expression))
    if (!evaluate_atom(g, atom).holds) return false;
  return true;
}

}  // namespace tia
