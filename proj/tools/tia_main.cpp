#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tia/canonical.hpp"
#include "tia/decomposers.hpp"
#include "tia/decomposition.hpp"
#include "tia/generators.hpp"
#include "tia/graph6.hpp"
#include "tia/oracles.hpp"
#include "tia/patterns.hpp"
#include "tia/sweep.hpp"

using namespace tia;

namespace {

std::vector<Graph> load_graphs(const std::string& path) {
  if (path.empty() || path == "-") return read_graphs(std::cin);
  return read_graphs_file(path);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error("cannot open output file " + out_path);
  f << text;
}

std::string iso_now() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

std::string run_classify(const std::vector<Graph>& graphs, int t, int k, int s) {
  std::vector<std::string> exprs = {
      "chordal",
      "triangle-free",
      "complete-multipartite",
      "paw-free",
      "P3+P1-free",
      "P4+P1-free&C4-free",
      "P5-free",
      "P6-free",
      "K" + std::to_string(t) + "," + std::to_string(t) + "-free",
      "K1," + std::to_string(t) + "-free",
      "2K2-free&gem-free",
      "O" + std::to_string(k) + "-free",
      "2K1," + std::to_string(s) + "-subgraph-free",
      "K2,3-induced-minor-free",
      "K3+K1-free&K2+3K1-free&C4+2K1-free",
  };
  std::ostringstream os;
  for (size_t i = 0; i < graphs.size(); ++i) {
    os << "graph " << (i + 1) << " " << graph6_encode(graphs[i]) << "\n";
    for (const std::string& e : exprs) {
      ClassReport rep = classify(graphs[i], e);
      std::string witness;
      for (const auto& a : rep.atoms)
        if (!a.holds && !a.witness.empty()) {
          witness = a.witness;
          break;
        }
      os << e << "=" << bool_text(rep.all_hold()) << " witness=[" << witness << "]\n";
    }
    os << "\n";
  }
  return os.str();
}

void render_bounded(std::ostringstream& os, const BoundedDecomposition& b) {
  os << "value " << b.bound_value << "\n";
  os << "# theorem=" << b.provenance << " bound=" << b.bound_value << " paper_bound="
     << b.paper_bound << "\n";
  os << write_td(b.td);
}

std::string run_tree_alpha(const std::vector<Graph>& graphs, const std::string& mode, int k,
                           int t) {
  std::ostringstream os;
  for (size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    os << "c graph " << (i + 1) << " " << graph6_encode(g) << "\n";
    if (mode == "exact") {
      DecompositionValue dv = tree_independence_number(g);
      os << "value " << dv.value << "\n";
      os << "# theorem=exact bound=" << dv.value << " paper_bound=" << dv.value << "\n";
      os << write_td(dv.decomposition);
    } else if (mode == "p3p1") {
      render_bounded(os, p3p1_decomposition(g));
    } else if (mode == "star") {
      VertexSet cover = g.vertices() - maximum_independent_set(g);
      render_bounded(os, star_decomposition(g, cover));
    } else if (mode == "split") {
      render_bounded(os, split_decomposition(g, splitness(g)));
    } else {
      render_bounded(os, fvs_decomposition(g, fvs_witness(g, k, t)));
    }
  }
  return os.str();
}

std::string run_tree_theta(const std::vector<Graph>& graphs, const std::string& mode) {
  std::ostringstream os;
  for (size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    os << "c graph " << (i + 1) << " " << graph6_encode(g) << "\n";
    if (mode == "exact") {
      DecompositionValue dv = tree_clique_cover_number(g);
      os << "value " << dv.value << "\n";
      os << "# theorem=exact bound=" << dv.value << " paper_bound=" << dv.value << "\n";
      os << write_td(dv.decomposition);
    } else {
      render_bounded(os, tree_theta_3_decomposition(g));
    }
  }
  return os.str();
}

std::string render_sweep(const SweepReport& r, bool no_timestamp) {
  std::ostringstream os;
  os << "sweep " << r.tag << "\n";
  os << "params n_max=" << r.params.n_max << " t=" << r.params.t << " s=" << r.params.s
     << " k=" << r.params.k << "\n";
  os << "graphs_checked " << r.graphs_checked << "\n";
  os << "violations " << r.violations.size() << "\n";
  for (const auto& v : r.violations) os << "violation " << v.graph6 << " " << v.diagnostic << "\n";
  os << "notes " << r.notes.size() << "\n";
  for (const auto& n : r.notes) os << "note " << n << "\n";
  if (!no_timestamp) {
    os << "elapsed_seconds " << r.elapsed_seconds << "\n";
    os << "timestamp " << iso_now() << "\n";
  }
  return os.str();
}

std::string run_probe_gap(int n_max, bool no_timestamp) {
  Graph p5 = pattern_graph("P5");
  int checked = 0;
  int in_class = 0;
  int max_gap = -1;
  std::string witness;
  for (int n = 1; n <= n_max; ++n)
    for (const Graph& g : all_graphs_on(n)) {
      ++checked;
      if (contains_induced(g, p5)) continue;
      ++in_class;
      int gap = tree_independence_number(g).value - induced_biclique_number(g);
      if (gap > max_gap) {
        max_gap = gap;
        witness = graph6_encode(g);
      }
    }
  std::ostringstream os;
  os << "probe q7.3-p5-gap\n";
  os << "params n_max=" << n_max << "\n";
  os << "graphs_checked " << checked << "\n";
  os << "p5_free_graphs " << in_class << "\n";
  os << "max_gap " << max_gap << "\n";
  os << "witness " << witness << "\n";
  if (!no_timestamp) os << "timestamp " << iso_now() << "\n";
  return os.str();
}

std::string run_probe_clique_chordal(int n_max, bool no_timestamp) {
  Graph p4p1 = pattern_graph("P4+P1");
  Graph c4 = pattern_graph("C4");
  int checked = 0;
  int in_class = 0;
  std::vector<std::string> counterexamples;
  for (int n = 1; n <= n_max; ++n)
    for (const Graph& g : all_graphs_on(n)) {
      ++checked;
      if (contains_induced(g, p4p1) || contains_induced(g, c4)) continue;
      ++in_class;
      bool found = false;
      for (uint64_t mask = 0; mask < (uint64_t{1} << n) && !found; ++mask) {
        VertexSet k(mask);
        bool clique = true;
        for (int v : k)
          if ((k - VertexSet::single(v)) != (g.neighbors(v) & k)) {
            clique = false;
            break;
          }
        if (clique && is_chordal_graph(induced_subgraph(g, g.vertices() - k))) found = true;
      }
      if (!found) counterexamples.push_back(graph6_encode(g));
    }
  std::ostringstream os;
  os << "probe q7.4-clique-chordal\n";
  os << "params n_max=" << n_max << "\n";
  os << "graphs_checked " << checked << "\n";
  os << "class_graphs " << in_class << "\n";
  os << "counterexamples " << counterexamples.size() << "\n";
  for (const auto& s : counterexamples) os << "counterexample " << s << "\n";
  if (!no_timestamp) os << "timestamp " << iso_now() << "\n";
  return os.str();
}

std::string run_subdivision_check(const std::vector<Graph>& graphs) {
  std::ostringstream os;
  for (size_t i = 0; i < graphs.size(); ++i) {
    SubdivisionReport r = subdivision_lower_bound_check(graphs[i]);
    os << "graph " << (i + 1) << " " << graph6_encode(graphs[i]) << "\n";
    os << "tw_before " << r.tw_before << "\n";
    os << "tw_after " << r.tw_after << "\n";
    os << "tree_alpha_after " << r.tree_alpha_after << "\n";
    os << "inequality_holds " << bool_text(r.inequality_holds) << "\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tree-independence toolkit"};
  app.set_config("--config", "", "key=value configuration file");
  app.require_subcommand(1);

  Caps cap_values = caps();
  app.add_option("--size_cap", cap_values.size_cap)->group("caps");
  app.add_option("--treewidth_cap", cap_values.treewidth_cap)->group("caps");
  app.add_option("--oracle_cap", cap_values.oracle_cap)->group("caps");
  app.add_option("--minor_cap", cap_values.minor_cap)->group("caps");
  app.add_option("--enum_cap", cap_values.enum_cap)->group("caps");
  app.add_option("--iso_cap", cap_values.iso_cap)->group("caps");
  app.add_option("--random_cap", cap_values.random_cap)->group("caps");

  // classify
  auto* c_cmd = app.add_subcommand("classify", "class membership report per input graph");
  std::string c_in, c_out;
  int c_t = 3, c_k = 2, c_s = 2;
  c_cmd->add_option("input", c_in, "graph file (graph6/sparse6 lines), - for stdin");
  c_cmd->add_option("--out", c_out, "write the report here instead of stdout");
  c_cmd->add_option("--t", c_t, "biclique/star parameter");
  c_cmd->add_option("--k", c_k, "independent-cycles parameter");
  c_cmd->add_option("--s", c_s, "double-star parameter");

  // tree-alpha
  auto* a_cmd = app.add_subcommand("tree-alpha", "independence measure with a decomposition");
  std::string a_in, a_out, a_mode = "exact";
  int a_k = 2, a_t = 3;
  a_cmd->add_option("input", a_in, "graph file, - for stdin");
  a_cmd->add_option("--mode", a_mode, "exact | p3p1 | star | split | fvs")
      ->check(CLI::IsMember({"exact", "p3p1", "star", "split", "fvs"}));
  a_cmd->add_option("--out", a_out, "write here instead of stdout");
  a_cmd->add_option("--k", a_k, "cycle-packing bound (fvs mode)");
  a_cmd->add_option("--t", a_t, "star bound (fvs mode)");

  // tree-theta
  auto* h_cmd = app.add_subcommand("tree-theta", "clique cover measure with a decomposition");
  std::string h_in, h_out, h_mode = "exact";
  h_cmd->add_option("input", h_in, "graph file, - for stdin");
  h_cmd->add_option("--mode", h_mode, "exact | theta3")
      ->check(CLI::IsMember({"exact", "theta3"}));
  h_cmd->add_option("--out", h_out, "write here instead of stdout");

  // verify-td
  auto* v_cmd = app.add_subcommand("verify-td", "validate a decomposition against a graph");
  std::string v_in, v_td, v_out;
  v_cmd->add_option("input", v_in, "graph file, - for stdin");
  v_cmd->add_option("--td", v_td, "PACE .td file")->required();
  v_cmd->add_option("--out", v_out, "write here instead of stdout");

  // sweep
  auto* s_cmd = app.add_subcommand("sweep", "check one registered assertion on all small graphs");
  std::string s_tag, s_out;
  int s_n = 5, s_t = 3, s_s = 2, s_k = 2;
  bool s_list = false, s_serial = false, s_nots = false;
  s_cmd->add_option("assertion", s_tag, "registered assertion tag")
      ->check(CLI::IsMember(sweep_tags()));
  s_cmd->add_flag("--list", s_list, "list registered assertions and exit");
  s_cmd->add_option("--n", s_n, "largest vertex count");
  s_cmd->add_option("--t", s_t, "biclique parameter");
  s_cmd->add_option("--s", s_s, "double-star parameter");
  s_cmd->add_option("--k", s_k, "cycle-packing parameter");
  s_cmd->add_option("--out", s_out, "write the report here instead of stdout");
  s_cmd->add_flag("--serial", s_serial, "use the serial reference engine");
  s_cmd->add_flag("--no-timestamp", s_nots, "omit timing lines for reproducible output");

  // probe
  auto* p_cmd = app.add_subcommand("probe", "observational reports on open questions");
  std::string p_q, p_out;
  int p_n = 5;
  bool p_nots = false;
  p_cmd->add_option("question", p_q, "q7.3-p5-gap | q7.4-clique-chordal")
      ->required()
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, std::string>{{"q7.3", "q7.3-p5-gap"},
                                             {"q7.4", "q7.4-clique-chordal"},
                                             {"q7.3-p5-gap", "q7.3-p5-gap"},
                                             {"q7.4-clique-chordal", "q7.4-clique-chordal"}}));
  p_cmd->add_option("--n", p_n, "largest vertex count");
  p_cmd->add_option("--out", p_out, "write here instead of stdout");
  p_cmd->add_flag("--no-timestamp", p_nots, "omit the timestamp line");

  // gen
  auto* g_cmd = app.add_subcommand("gen", "emit one family graph as graph6");
  std::string g_family, g_out;
  std::vector<int> g_params;
  g_cmd->add_option("family", g_family, "family name")->required();
  g_cmd->add_option("params", g_params, "integer parameters");
  g_cmd->add_option("--out", g_out, "write here instead of stdout");

  // enum
  auto* e_cmd = app.add_subcommand("enum", "stream all graphs on n vertices as graph6");
  int e_n = 0;
  std::string e_filter, e_out;
  e_cmd->add_option("--n", e_n, "vertex count")->required();
  e_cmd->add_option("--filter", e_filter, "class expression filter");
  e_cmd->add_option("--out", e_out, "write here instead of stdout");

  // random
  auto* r_cmd = app.add_subcommand("random", "seeded random graph inside a class");
  int r_n = 0;
  std::string r_filter, r_out;
  uint64_t r_seed = 1;
  r_cmd->add_option("--n", r_n, "vertex count")->required();
  r_cmd->add_option("--filter", r_filter, "class expression");
  r_cmd->add_option("--seed", r_seed, "random seed");
  r_cmd->add_option("--out", r_out, "write here instead of stdout");

  // subdivision-check
  auto* d_cmd = app.add_subcommand("subdivision-check",
                                   "treewidth before and after subdividing every edge");
  std::string d_in, d_out;
  d_cmd->add_option("input", d_in, "graph file, - for stdin");
  d_cmd->add_option("--out", d_out, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    caps() = cap_values;

    if (c_cmd->parsed()) {
      emit(run_classify(load_graphs(c_in), c_t, c_k, c_s), c_out);
      return 0;
    }
    if (a_cmd->parsed()) {
      emit(run_tree_alpha(load_graphs(a_in), a_mode, a_k, a_t), a_out);
      return 0;
    }
    if (h_cmd->parsed()) {
      emit(run_tree_theta(load_graphs(h_in), h_mode), h_out);
      return 0;
    }
    if (v_cmd->parsed()) {
      std::vector<Graph> gs = load_graphs(v_in);
      if (gs.empty()) throw PreconditionFailed("no graph supplied");
      std::ifstream f(v_td);
      if (!f) throw Error("cannot open td file " + v_td);
      std::stringstream buf;
      buf << f.rdbuf();
      TreeDecomposition td = read_td(buf.str(), gs.front());
      ValidationResult val = validate_decomposition(td);
      std::ostringstream os;
      os << "valid " << bool_text(val.valid) << "\n";
      if (!val.valid) {
        os << "violation " << val.violation << "\n";
        emit(os.str(), v_out);
        return 3;
      }
      os << "alpha " << independence_of_decomposition(td) << "\n";
      os << "theta " << clique_cover_of_decomposition(td) << "\n";
      os << "width " << width_of_decomposition(td) << "\n";
      emit(os.str(), v_out);
      return 0;
    }
    if (s_cmd->parsed()) {
      if (s_list) {
        std::ostringstream os;
        for (const std::string& tag : sweep_tags()) os << tag << "  " << describe_sweep(tag) << "\n";
        emit(os.str(), s_out);
        return 0;
      }
      if (s_tag.empty()) {
        std::cerr << "sweep: an assertion tag is required (use --list to see them)\n";
        return 1;
      }
      SweepParams params;
      params.n_max = s_n;
      params.t = s_t;
      params.s = s_s;
      params.k = s_k;
      SweepReport rep = s_serial ? run_sweep_serial(s_tag, params) : run_sweep(s_tag, params);
      emit(render_sweep(rep, s_nots), s_out);
      return rep.violations.empty() ? 0 : 4;
    }
    if (p_cmd->parsed()) {
      emit(p_q == "q7.3-p5-gap" ? run_probe_gap(p_n, p_nots)
                                : run_probe_clique_chordal(p_n, p_nots),
           p_out);
      return 0;
    }
    if (g_cmd->parsed()) {
      emit(graph6_encode(make_family(g_family, g_params)) + "\n", g_out);
      return 0;
    }
    if (e_cmd->parsed()) {
      EnumerationStream stream(e_n, e_filter);
      std::ostringstream os;
      while (auto g = stream.next()) os << graph6_encode(*g) << "\n";
      emit(os.str(), e_out);
      return 0;
    }
    if (r_cmd->parsed()) {
      emit(graph6_encode(random_in_class(r_n, r_filter, r_seed)) + "\n", r_out);
      return 0;
    }
    if (d_cmd->parsed()) {
      emit(run_subdivision_check(load_graphs(d_in)), d_out);
      return 0;
    }
  } catch (const FormatError& e) {
    std::cerr << "parse error: " << e.what();
    if (e.line > 0) std::cerr << " (line " << e.line << ")";
    std::cerr << "\n";
    return 2;
  } catch (const PreconditionFailed& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 3;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
