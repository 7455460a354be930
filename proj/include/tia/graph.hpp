#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Core graph type: simple undirected graphs on at most kMaxVertices vertices,
// adjacency kept as one 64-bit row per vertex.

#ifndef TIA_MAX_VERTICES
#define TIA_MAX_VERTICES 64
#endif

namespace tia {

inline constexpr int kMaxVertices = TIA_MAX_VERTICES;
static_assert(kMaxVertices >= 4 && kMaxVertices <= 64,
              "vertex cap must fit a 64-bit adjacency row");

// girth() result on acyclic graphs
inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// input exceeds a configured size cap
struct CapExceeded : Error {
  using Error::Error;
};

// operation contract violated by the input; carries a short witness text
struct PreconditionFailed : Error {
  std::string witness;
  explicit PreconditionFailed(const std::string& what, std::string w = "")
      : Error(what), witness(std::move(w)) {}
};

struct FormatError : Error {
  long line = 0;
  explicit FormatError(const std::string& what, long line_no = 0)
      : Error(what), line(line_no) {}
};

// Runtime caps for the expensive routines. Defaults are desk scale;
// config files / CLI flags may raise them.
struct Caps {
  int size_cap = 32;       // NP oracles: alpha, omega, chi, theta, ibn, fvs, splitness
  int treewidth_cap = 24;  // subset-DP treewidth
  int oracle_cap = 10;     // tree independence / tree clique cover DP
  int minor_cap = 9;       // induced-minor host size
  int enum_cap = 8;        // exhaustive enumeration
  int iso_cap = 10;        // canonical form / isomorphism
  int random_cap = 32;     // random_in_class
};

Caps& caps();

class VertexSet {
 public:
  constexpr VertexSet() = default;
  explicit constexpr VertexSet(uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }
  static VertexSet of(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }
  static VertexSet full(int n) {
    return n == 64 ? VertexSet(~uint64_t{0}) : VertexSet((uint64_t{1} << n) - 1);
  }
  static VertexSet single(int v) { return VertexSet(uint64_t{1} << v); }

  bool contains(int v) const { return (bits_ >> v) & 1; }
  void add(int v) { bits_ |= uint64_t{1} << v; }
  void remove(int v) { bits_ &= ~(uint64_t{1} << v); }
  int size() const { return __builtin_popcountll(bits_); }
  bool empty() const { return bits_ == 0; }
  uint64_t bits() const { return bits_; }

  int first() const { return bits_ ? __builtin_ctzll(bits_) : -1; }

  bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  bool operator==(const VertexSet&) const = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (uint64_t b = bits_; b; b &= b - 1) out.push_back(__builtin_ctzll(b));
    return out;
  }

  // range-for over members, ascending
  struct iterator {
    uint64_t rest;
    int operator*() const { return __builtin_ctzll(rest); }
    iterator& operator++() { rest &= rest - 1; return *this; }
    bool operator!=(const iterator& o) const { return rest != o.rest; }
  };
  iterator begin() const { return {bits_}; }
  iterator end() const { return {0}; }

 private:
  uint64_t bits_ = 0;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices)
      throw CapExceeded("vertex count " + std::to_string(n) + " outside [0," +
                        std::to_string(kMaxVertices) + "]");
  }
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> es) {
    Graph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
  }

  int vertex_count() const { return n_; }
  int edge_count() const;

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error("self-loop rejected");
    adj_[u] |= uint64_t{1} << v;
    adj_[v] |= uint64_t{1} << u;
  }
  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~(uint64_t{1} << v);
    adj_[v] &= ~(uint64_t{1} << u);
  }

  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  VertexSet closed_neighbors(int v) const {
    return VertexSet(adj_[v] | (uint64_t{1} << v));
  }
  int degree(int v) const { return __builtin_popcountll(adj_[v]); }
  int max_degree() const;

  VertexSet vertices() const { return VertexSet::full(n_); }
  std::vector<std::pair<int, int>> edges() const;  // lexicographic

  // neighbors of any member of s, minus s itself
  VertexSet neighborhood_of(VertexSet s) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw Error("vertex " + std::to_string(v) + " out of range");
  }
  int n_ = 0;
  std::vector<uint64_t> adj_;
};

// -- constructions ------------------------------------------------------

Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, VertexSet s);  // relabels ascending
Graph delete_vertices(const Graph& g, VertexSet s);

// vertices of the line graph are edges(g) in lexicographic order
Graph line_graph(const Graph& g);

Graph join(const Graph& a, const Graph& b);            // b's labels shifted by a.n
Graph disjoint_union(const Graph& a, const Graph& b);  // b's labels shifted by a.n

// replace edge uv by a path u-w-v; w gets the next fresh label n
Graph subdivide_edge(const Graph& g, int u, int v);
// subdivide every edge once; subdivision vertices appended in edge order
Graph subdivide_all(const Graph& g);

// contract edge uv into min(u,v); labels above max(u,v) shift down by one
Graph contract_edge(const Graph& g, int u, int v);

// -- structure ----------------------------------------------------------

// connected components as vertex sets, sorted by smallest member
std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> components_within(const Graph& g, VertexSet s);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);

// length of a shortest cycle, kInfiniteGirth on forests
int girth(const Graph& g);
int girth_within(const Graph& g, VertexSet s);

// |E| - |V| + #components
int cycle_rank(const Graph& g);

// a shortest cycle as a closed vertex sequence (first vertex not repeated);
// deterministic: lowest starting vertex achieving the girth, then
// lexicographically smallest traversal. nullopt on forests.
std::optional<std::vector<int>> shortest_cycle(const Graph& g);
std::optional<std::vector<int>> shortest_cycle_within(const Graph& g, VertexSet s);

}  // namespace tia
