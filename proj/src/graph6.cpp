#include "tia/graph6.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace tia {

namespace {

constexpr int kBias = 63;

void append_number(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  // 63..258047: '~' then 18 bits in three sextets
  out.push_back('~');
  out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
  out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
  out.push_back(static_cast<char>((n & 63) + kBias));
}

// reads N(n); advances pos
int parse_number(const std::string& s, size_t& pos) {
  if (pos >= s.size()) throw FormatError("truncated graph6 data");
  unsigned char c = static_cast<unsigned char>(s[pos]);
  if (c < kBias || c > 126) throw FormatError("byte outside graph6 range");
  if (c != '~') {
    ++pos;
    return c - kBias;
  }
  if (pos + 3 >= s.size()) throw FormatError("truncated graph6 vertex count");
  if (s[pos + 1] == '~') throw FormatError("graph6 vertex count beyond supported range");
  int n = 0;
  for (int i = 1; i <= 3; ++i) {
    unsigned char d = static_cast<unsigned char>(s[pos + i]);
    if (d < kBias || d > 126) throw FormatError("byte outside graph6 range");
    n = (n << 6) | (d - kBias);
  }
  pos += 4;
  return n;
}

class BitWriter {
 public:
  void push(int bit) {
    if (shift_ == 0) {
      bytes_.push_back(0);
      shift_ = 6;
    }
    --shift_;
    if (bit) bytes_.back() |= 1 << shift_;
  }
  // pads with the given bit to a sextet boundary
  void pad(int bit) {
    while (shift_ != 0) push(bit);
  }
  int pending_padding() const { return shift_; }
  std::string to_string() const {
    std::string out;
    for (unsigned char b : bytes_) out.push_back(static_cast<char>(b + kBias));
    return out;
  }

 private:
  std::vector<unsigned char> bytes_;
  int shift_ = 0;
};

class BitReader {
 public:
  BitReader(const std::string& s, size_t pos) {
    for (size_t i = pos; i < s.size(); ++i) {
      unsigned char c = static_cast<unsigned char>(s[i]);
      if (c < kBias || c > 126) throw FormatError("byte outside graph6 range");
      bytes_.push_back(static_cast<unsigned char>(c - kBias));
    }
  }
  long bits_left() const { return static_cast<long>(bytes_.size()) * 6 - used_; }
  int take() {
    int byte = used_ / 6, shift = 5 - used_ % 6;
    ++used_;
    return (bytes_[static_cast<size_t>(byte)] >> shift) & 1;
  }
  int take(int k) {
    int v = 0;
    while (k-- > 0) v = (v << 1) | take();
    return v;
  }

 private:
  std::vector<unsigned char> bytes_;
  long used_ = 0;
};

std::string strip_header(const std::string& line) {
  const std::string g6 = ">>graph6<<", s6 = ">>sparse6<<";
  if (line.rfind(g6, 0) == 0) return line.substr(g6.size());
  if (line.rfind(s6, 0) == 0) return line.substr(s6.size());
  return line;
}

int bits_for(int x) {  // bits needed to write x in binary, at least 1
  int k = 1;
  while ((x >> k) != 0) ++k;
  return k;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  append_number(out, n);
  BitWriter bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push(g.adjacent(i, j) ? 1 : 0);
  bits.pad(0);
  return out + bits.to_string();
}

Graph graph6_decode(const std::string& raw) {
  std::string line = strip_header(raw);
  if (!line.empty() && line[0] == ':') throw FormatError("sparse6 data passed to graph6 decoder");
  size_t pos = 0;
  int n = parse_number(line, pos);
  if (n > kMaxVertices)
    throw CapExceeded("graph6 line describes " + std::to_string(n) + " vertices, cap is " +
                      std::to_string(kMaxVertices));
  long need = static_cast<long>(n) * (n - 1) / 2;
  long have = static_cast<long>(line.size() - pos) * 6;
  if (have < need || have - need >= 6) throw FormatError("graph6 line has wrong length");
  BitReader bits(line, pos);
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits.take()) g.add_edge(i, j);
  while (bits.bits_left() > 0)
    if (bits.take()) throw FormatError("nonzero padding in graph6 line");
  return g;
}

std::string sparse6_encode(const Graph& g) {
  int n = g.vertex_count();
  std::string out = ":";
  append_number(out, n);
  int k = n >= 2 ? bits_for(n - 1) : 1;
  auto es = g.edges();
  std::sort(es.begin(), es.end(), [](auto a, auto b) {
    return std::make_pair(a.second, a.first) < std::make_pair(b.second, b.first);
  });

  BitWriter bits;
  auto push_k = [&](int x) {
    for (int i = k - 1; i >= 0; --i) bits.push((x >> i) & 1);
  };
  int v = 0;
  for (auto [u, w] : es) {  // u < w, ascending by w
    if (w == v) {
      bits.push(0);
      push_k(u);
    } else if (w == v + 1) {
      bits.push(1);
      push_k(u);
      v = w;
    } else {
      bits.push(1);
      push_k(w);
      bits.push(0);
      push_k(u);
      v = w;
    }
  }
  // all-ones padding would decode as a loop on n-1 exactly when n = 2^k and
  // the stream stops at v = n-2 with room for a full (b,x) pair
  if (k < 6 && n == (1 << k) && bits.pending_padding() >= k + 1 && v == n - 2) bits.push(0);
  bits.pad(1);
  return out + bits.to_string();
}

Graph sparse6_decode(const std::string& raw) {
  std::string line = strip_header(raw);
  if (line.empty() || line[0] != ':') throw FormatError("sparse6 line must start with ':'");
  size_t pos = 1;
  int n = parse_number(line, pos);
  if (n > kMaxVertices)
    throw CapExceeded("sparse6 line describes " + std::to_string(n) + " vertices, cap is " +
                      std::to_string(kMaxVertices));
  int k = n >= 2 ? bits_for(n - 1) : 1;
  BitReader bits(line, pos);
  Graph g(n);
  int v = 0;
  while (bits.bits_left() >= k + 1) {
    int b = bits.take();
    int x = bits.take(k);
    if (b) ++v;
    if (v >= n) break;
    if (x > v) {
      v = x;
    } else if (x != v) {
      if (!g.adjacent(x, v)) g.add_edge(x, v);
    }
    if (v >= n) break;
  }
  return g;
}

Graph decode_graph_line(const std::string& line) {
  std::string s = strip_header(line);
  if (!s.empty() && s[0] == ':') return sparse6_decode(s);
  if (!s.empty() && s[0] == ';') throw FormatError("incremental sparse6 not supported");
  return graph6_decode(s);
}

Graph edge_list_decode(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  long line_no = 0;
  int declared_n = -1;
  std::vector<std::pair<int, int>> edges;
  int max_v = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "n") {
      if (!(ls >> declared_n) || declared_n < 0) throw FormatError("bad vertex count", line_no);
      continue;
    }
    int u = 0, v = 0;
    try {
      u = std::stoi(tok);
    } catch (...) {
      throw FormatError("expected vertex number, got '" + tok + "'", line_no);
    }
    if (!(ls >> v)) throw FormatError("edge line needs two endpoints", line_no);
    std::string extra;
    if (ls >> extra) throw FormatError("trailing tokens on edge line", line_no);
    if (u < 0 || v < 0 || u == v) throw FormatError("bad edge endpoints", line_no);
    edges.emplace_back(u, v);
    max_v = std::max({max_v, u, v});
  }
  int n = std::max(declared_n, max_v + 1);
  if (n < 0) n = 0;
  if (n > kMaxVertices) throw CapExceeded("edge list describes " + std::to_string(n) + " vertices");
  Graph g(n);
  for (auto [u, v] : edges)
    if (!g.adjacent(u, v)) g.add_edge(u, v);
  return g;
}

std::string edge_list_encode(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

std::vector<Graph> read_graphs(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  // sniff: edge-list files start with a digit, 'n', or a '#' comment
  size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\r' || text[i] == '\t'))
    ++i;
  if (i < text.size() && (isdigit(static_cast<unsigned char>(text[i])) || text[i] == 'n' || text[i] == '#'))
    return {edge_list_decode(text)};

  std::vector<Graph> out;
  std::istringstream lines(text);
  std::string line;
  long line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(decode_graph_line(line));
    } catch (FormatError& e) {
      throw FormatError(std::string(e.what()), line_no);
    }
  }
  return out;
}

std::vector<Graph> read_graphs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_graphs(in);
}

}  // namespace tia
