#include "tia/sweep.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tia/canonical.hpp"
#include "tia/decomposers.hpp"
#include "tia/generators.hpp"
#include "tia/graph6.hpp"
#include "tia/obstructions.hpp"
#include "tia/oracles.hpp"
#include "tia/patterns.hpp"

namespace tia {

namespace {

struct SweepItem {
  Graph graph;
  std::string label;  // provenance for diagnostics, may be empty
  int aux = 0;
};

struct Outcome {
  std::optional<std::string> violation;
  std::optional<std::string> note;
  std::optional<std::string> fatal;
};

Outcome ok() { return {}; }

Outcome bad(std::string text) {
  Outcome o;
  o.violation = std::move(text);
  return o;
}

Outcome info(std::string text) {
  Outcome o;
  o.note = std::move(text);
  return o;
}

struct Assertion {
  std::string description;
  std::function<std::vector<SweepItem>(const SweepParams&)> inputs;
  std::function<Outcome(const SweepItem&, const SweepParams&)> check;
  std::function<std::vector<std::string>(std::vector<std::string>, const SweepParams&)> post;
};

std::vector<SweepItem> levels_up_to(int n_max) {
  std::vector<SweepItem> out;
  for (int n = 1; n <= n_max; ++n)
    for (const Graph& g : all_graphs_on(n)) out.push_back({g, "", 0});
  return out;
}

// shared parsed patterns; safe to call from parallel checks
const Graph& pat(const std::string& expr) {
  static std::map<std::string, Graph> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = cache.try_emplace(expr);
  if (fresh) it->second = pattern_graph(expr);
  return it->second;
}

std::string text(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

int p3p1_formula(const Graph& g) {
  if (contains_induced(g, pat("C4"))) return induced_biclique_number(g);
  if (contains_induced(g, pat("C5"))) return 2;
  return 1;
}

long long binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  long long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

bool cyclic_min(const std::vector<int>& xs) {
  size_t k = xs.size();
  const std::vector<int> rev(xs.rbegin(), xs.rend());
  for (size_t r = 0; r < k; ++r) {
    for (const std::vector<int>* side : {&xs, &rev}) {
      if (r == 0 && side == &xs) continue;
      std::vector<int> rot;
      for (size_t i = 0; i < k; ++i) rot.push_back((*side)[(i + r) % k]);
      if (rot < xs) return false;
    }
  }
  return true;
}

std::string family_label(const std::string& fam, const std::vector<int>& ps) {
  std::string out = fam + "(";
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ps[i]);
  }
  return out + ")";
}

std::map<std::string, Assertion> build_registry() {
  std::map<std::string, Assertion> reg;
  auto levels = [](const SweepParams& p) { return levels_up_to(p.n_max); };

  reg["lemma2.3"] = {
      "a graph is chordal exactly when its independence measure is at most 1",
      levels,
      [](const SweepItem& it, const SweepParams&) {
        bool ch = is_chordal_graph(it.graph);
        int ta = tree_independence_number(it.graph).value;
        if (ch == (ta <= 1)) return ok();
        return bad(ch ? "chordal but the measure is " + std::to_string(ta)
                      : "not chordal but the measure is " + std::to_string(ta));
      },
      {}};

  reg["cor2.5"] = {
      "complements of line graphs avoid the three small obstructions",
      levels,
      [](const SweepItem& it, const SweepParams&) {
        Graph co = complement(line_graph(it.graph));
        for (const char* name : {"K3+K1", "K2+3K1", "C4+2K1"}) {
          if (auto hit = find_induced(co, pat(name)))
            return bad("co-line graph has an induced " + std::string(name) + " on " + text(*hit));
        }
        return ok();
      },
      {}};

  reg["prop3.4"] = {
      "complements of line graphs pack no two independent cycles",
      levels,
      [](const SweepItem& it, const SweepParams&) {
        if (find_independent_cycles(complement(line_graph(it.graph)), 2))
          return bad("co-line graph packs two independent cycles");
        return ok();
      },
      {}};

  reg["thm1.3-implications"] = {
      "star covers of co-line graphs: subgraph test, cover slice, construction",
      levels,
      [](const SweepItem& it, const SweepParams& p) {
        const Graph& h = it.graph;
        Graph star2 = pattern_graph("2K1," + std::to_string(p.s));
        Graph co = complement(line_graph(h));
        if (contains_subgraph(h, star2)) {
          Graph kss = make_family("complete_bipartite", {p.s, p.s});
          if (!contains_induced(co, kss))
            return bad("two disjoint stars present but the co-line graph has no induced "
                       "complete bipartite pair of side " +
                       std::to_string(p.s));
          return ok();
        }
        int best_v = -1;
        int best_deg = 0;
        for (int v = 0; v < h.vertex_count(); ++v) {
          int d = induced_subgraph(h, h.vertices() - VertexSet::single(v)).max_degree();
          if (best_v < 0 || d < best_deg) {
            best_v = v;
            best_deg = d;
          }
        }
        if (best_v >= 0 && best_deg > 2 * p.s)
          return bad("every single-vertex deletion leaves maximum degree " +
                     std::to_string(best_deg) + " above 2s");
        VertexSet cover;
        if (best_v >= 0) {
          auto es = h.edges();
          for (size_t i = 0; i < es.size(); ++i)
            if (es[i].first != best_v && es[i].second != best_v)
              cover.add(static_cast<int>(i));
        }
        if (independence_number(induced_subgraph(co, cover)) > 2 * p.s)
          return bad("edges avoiding the heavy vertex form a slice with independence above 2s");
        auto dec = star_decomposition(co, cover);
        if (dec.bound_value > 2 * p.s + 1)
          return bad("star construction measures " + std::to_string(dec.bound_value) +
                     ", above 2s+1");
        return ok();
      },
      {}};

  reg["thm1.3-degree-claim"] = {
      "without two disjoint stars, at most one vertex has degree above 2s",
      levels,
      [](const SweepItem& it, const SweepParams& p) {
        const Graph& h = it.graph;
        if (contains_subgraph(h, pattern_graph("2K1," + std::to_string(p.s)))) return ok();
        int high = 0;
        for (int v = 0; v < h.vertex_count(); ++v) high += h.degree(v) > 2 * p.s;
        if (high <= 1) return ok();
        std::string msg =
            std::to_string(high) + " vertices of degree above " + std::to_string(2 * p.s);
        if (p.s >= 4) return bad(msg);
        return info("recorded (s below 4): " + graph6_encode(h) + " has " + msg);
      },
      {}};

  reg["lemma5.1"] = {
      "the independence measure is at least the induced biclique number",
      levels,
      [](const SweepItem& it, const SweepParams&) {
        int ibn = induced_biclique_number(it.graph);
        int ta = tree_independence_number(it.graph).value;
        if (ta >= ibn) return ok();
        return bad("measure " + std::to_string(ta) + " below the biclique number " +
                   std::to_string(ibn));
      },
      {}};

  reg["thm1.5"] = {
      "exact independence measure of graphs without P_3+P_1: oracle, formula, construction",
      levels,
      [](const SweepItem& it, const SweepParams&) {
        const Graph& g = it.graph;
        if (contains_induced(g, pat("P3+P1"))) return ok();
        if (g.edge_count() == 0) return ok();
        int fv = p3p1_formula(g);
        int ta = tree_independence_number(g).value;
        if (ta != fv)
          return bad("oracle value " + std::to_string(ta) + " differs from the formula value " +
                     std::to_string(fv));
        auto dec = p3p1_decomposition(g);
        if (dec.bound_value != ta)
          return bad("constructed value " + std::to_string(dec.bound_value) +
                     " differs from the oracle value " + std::to_string(ta));
        return ok();
      },
      {}};

  reg["cor5.4"] = {
      "graphs without P_3+P_1 and without K_{t,t} have measure at most t",
      levels,
      [](const SweepItem& it, const SweepParams& p) {
        const Graph& g = it.graph;
        if (contains_induced(g, pat("P3+P1"))) return ok();
        if (contains_induced(g, make_family("complete_bipartite", {p.t, p.t}))) return ok();
        int ta = tree_independence_number(g).value;
        if (ta <= p.t) return ok();
        return bad("measure " + std::to_string(ta) + " above t = " + std::to_string(p.t));
      },
      {}};

  reg["lemma6.1-equivalence"] = {
      "recognized obstructions appear exactly when K_{2,3} is an induced minor",
      levels,
      [](const SweepItem& it, const SweepParams&) {
        auto hit = contains_obstruction(it.graph);
        bool im = has_induced_minor(it.graph, pat("K2,3"));
        if (hit.has_value() == im) return ok();
        if (hit)
          return bad("obstruction " + hit->second.describe() + " on " + text(hit->first) +
                     " but no K_{2,3} induced minor");
        return bad("K_{2,3} induced minor present but no obstruction recognized");
      },
      {}};

  reg["cor6.3"] = {
      "graphs without P_4+P_1 and C_4 have no K_{2,3} induced minor",
      levels,
      [](const SweepItem& it, const SweepParams&) {
        const Graph& g = it.graph;
        if (contains_induced(g, pat("P4+P1")) || contains_induced(g, pat("C4"))) return ok();
        if (!has_induced_minor(g, pat("K2,3"))) return ok();
        return bad("K_{2,3} induced minor in a {P_4+P_1, C_4}-free graph");
      },
      {}};

  reg["prop6.4"] = {
      "graphs without a K_{2,3} induced minor have measure at most 3",
      levels,
      [](const SweepItem& it, const SweepParams&) {
        if (has_induced_minor(it.graph, pat("K2,3"))) return ok();
        int ta = tree_independence_number(it.graph).value;
        if (ta <= 3) return ok();
        return bad("measure " + std::to_string(ta) + " above 3 without a K_{2,3} induced minor");
      },
      {}};

  reg["thm1.6"] = {
      "graphs without P_4+P_1 and C_4 have clique cover measure at most 3",
      levels,
      [](const SweepItem& it, const SweepParams&) {
        const Graph& g = it.graph;
        if (contains_induced(g, pat("P4+P1")) || contains_induced(g, pat("C4"))) return ok();
        int ta = tree_independence_number(g).value;
        int tt = tree_clique_cover_number(g).value;
        auto dec = tree_theta_3_decomposition(g);
        if (ta > 3) return bad("independence measure " + std::to_string(ta) + " above 3");
        if (tt > 3) return bad("clique cover measure " + std::to_string(tt) + " above 3");
        if (dec.bound_value > 3)
          return bad("constructed clique cover value " + std::to_string(dec.bound_value) +
                     " above 3");
        return ok();
      },
      {}};

  reg["lemma6.6"] = {
      "graphs without 2K_2 and gem need at most max(omega, 3) colors",
      levels,
      [](const SweepItem& it, const SweepParams&) {
        const Graph& g = it.graph;
        if (contains_induced(g, pat("2K2")) || contains_induced(g, pat("gem"))) return ok();
        int chi = chromatic_number(g);
        int w = clique_number(g);
        if (chi <= std::max(w, 3)) return ok();
        return bad("needs " + std::to_string(chi) + " colors with clique number " +
                   std::to_string(w));
      },
      {}};

  reg["obs5.3"] = {
      "the independence number of a join is the larger side's",
      [](const SweepParams& p) {
        std::vector<SweepItem> out;
        for (int n1 = 1; n1 + 1 <= p.n_max; ++n1)
          for (int n2 = n1; n1 + n2 <= p.n_max; ++n2) {
            const auto& l1 = all_graphs_on(n1);
            const auto& l2 = all_graphs_on(n2);
            for (size_t i = 0; i < l1.size(); ++i)
              for (size_t j = (n1 == n2 ? i : size_t{0}); j < l2.size(); ++j)
                out.push_back({join(l1[i], l2[j]),
                               graph6_encode(l1[i]) + " join " + graph6_encode(l2[j]),
                               n1});
          }
        return out;
      },
      [](const SweepItem& it, const SweepParams&) {
        VertexSet a = VertexSet::full(it.aux);
        VertexSet b = it.graph.vertices() - a;
        int a1 = independence_number(induced_subgraph(it.graph, a));
        int a2 = independence_number(induced_subgraph(it.graph, b));
        int aj = independence_number(it.graph);
        if (aj == std::max(a1, a2)) return ok();
        return bad("join has independence " + std::to_string(aj) + ", sides give " +
                   std::to_string(a1) + " and " + std::to_string(a2));
      },
      {}};

  reg["prop4.4-inequality"] = {
      "bipartite graphs: treewidth at most twice the measure minus one",
      levels,
      [](const SweepItem& it, const SweepParams&) {
        if (!is_bipartite(it.graph)) return ok();
        int tw = treewidth(it.graph);
        int ta = tree_independence_number(it.graph).value;
        if (tw <= 2 * ta - 1) return ok();
        return bad("treewidth " + std::to_string(tw) + " above 2*" + std::to_string(ta) + "-1");
      },
      {}};

  reg["lemma2.1"] = {
      "treewidth at most binom(omega + measure, omega) - 2",
      levels,
      [](const SweepItem& it, const SweepParams&) {
        int w = clique_number(it.graph);
        int ta = tree_independence_number(it.graph).value;
        int tw = treewidth(it.graph);
        long long bound = binom(w + ta, w) - 2;
        if (tw <= bound) return ok();
        return bad("treewidth " + std::to_string(tw) + " above the Ramsey-type bound " +
                   std::to_string(bound));
      },
      {}};

  reg["thm3.1-splitness"] = {
      "records the splitness histogram; the split construction is exercised on the way",
      levels,
      [](const SweepItem& it, const SweepParams&) {
        SplitPartition part = splitness(it.graph);
        auto dec = split_decomposition(it.graph, part);
        (void)dec;
        return info("k=" + std::to_string(part.k));
      },
      [](std::vector<std::string> notes, const SweepParams&) {
        std::map<int, int> hist;
        for (const std::string& s : notes) ++hist[std::stoi(s.substr(2))];
        std::vector<std::string> out;
        for (auto [k, c] : hist)
          out.push_back("splitness " + std::to_string(k) + ": " + std::to_string(c) + " graphs");
        return out;
      }};

  reg["lemma6.2"] = {
      "every generated obstruction contains an induced P_4+P_1 or C_4",
      [](const SweepParams&) {
        std::vector<SweepItem> out;
        auto add = [&out](const std::string& fam, const std::vector<int>& ps) {
          out.push_back({make_family(fam, ps), family_label(fam, ps), 0});
        };
        for (int a = 1; a <= 7; ++a)
          for (int b = a; b <= 7; ++b)
            for (int c = std::max(b, 2); a + b + c <= 7; ++c) add("prism", {a, b, c});
        for (int a = 1; a <= 9; ++a)
          for (int b = std::max(a, 2); b <= 9; ++b)
            for (int c = b; a + b + c <= 9; ++c) add("pyramid", {a, b, c});
        for (int a = 2; a <= 11; ++a)
          for (int b = a; b <= 11; ++b)
            for (int c = b; a + b + c <= 11; ++c) add("theta", {a, b, c});
        std::vector<int> cur;
        auto wheels = [&](auto&& self, int left) -> void {
          if (left == 0) {
            int big = 0;
            for (int s : cur) big += s >= 2;
            if (cur.size() >= 3 && big >= 2 && cyclic_min(cur)) add("wheel", cur);
            return;
          }
          for (int nxt = 1; nxt <= left; ++nxt) {
            cur.push_back(nxt);
            self(self, left - nxt);
            cur.pop_back();
          }
        };
        for (int rim = 4; rim <= 9; ++rim) wheels(wheels, rim);
        return out;
      },
      [](const SweepItem& it, const SweepParams&) {
        if (contains_induced(it.graph, pat("P4+P1")) || contains_induced(it.graph, pat("C4")))
          return ok();
        return bad("avoids induced P_4+P_1 and C_4");
      },
      {}};

  return reg;
}

const std::map<std::string, Assertion>& registry() {
  static const std::map<std::string, Assertion> reg = build_registry();
  return reg;
}

SweepReport run_impl(const std::string& tag, const SweepParams& p, bool parallel) {
  if (p.n_max < 0) throw PreconditionFailed("n_max must be nonnegative");
  if (p.t < 1) throw PreconditionFailed("t must be at least 1");
  if (p.s < 2) throw PreconditionFailed("s must be at least 2");
  if (p.k < 1) throw PreconditionFailed("k must be at least 1");
  const auto& reg = registry();
  auto found = reg.find(tag);
  if (found == reg.end())
    throw PreconditionFailed("unknown sweep assertion \"" + tag + "\"");
  const Assertion& a = found->second;

  std::vector<SweepItem> items = a.inputs(p);
  std::vector<Outcome> outcomes(items.size());
  auto body = [&](size_t i) {
    try {
      outcomes[i] = a.check(items[i], p);
    } catch (const std::exception& e) {
      outcomes[i].fatal = e.what();
    }
  };

  auto t0 = std::chrono::steady_clock::now();
  if (parallel) {
#ifdef _OPENMP
    if (const char* env = std::getenv("TIA_WORKERS")) {
      int w = std::atoi(env);
      if (w > 0) omp_set_num_threads(w);
    }
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(items.size()); ++i)
      body(static_cast<size_t>(i));
#else
    for (size_t i = 0; i < items.size(); ++i) body(i);
#endif
  } else {
    for (size_t i = 0; i < items.size(); ++i) body(i);
  }
  auto t1 = std::chrono::steady_clock::now();

  SweepReport report;
  report.tag = tag;
  report.params = p;
  report.graphs_checked = static_cast<int>(items.size());
  report.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();

  std::vector<std::string> notes;
  std::vector<std::array<std::string, 3>> rows;
  for (size_t i = 0; i < items.size(); ++i) {
    if (outcomes[i].fatal) throw Error("sweep " + tag + ": " + *outcomes[i].fatal);
    if (outcomes[i].note) notes.push_back(*outcomes[i].note);
    if (outcomes[i].violation) {
      std::string diag = items[i].label.empty() ? *outcomes[i].violation
                                                : items[i].label + ": " + *outcomes[i].violation;
      rows.push_back({canonical_form(items[i].graph), graph6_encode(items[i].graph), diag});
    }
  }
  std::sort(rows.begin(), rows.end());
  for (auto& r : rows) report.violations.push_back({r[1], r[2]});
  report.notes = a.post ? a.post(std::move(notes), p) : std::move(notes);
  return report;
}

}  // namespace

std::vector<std::string> sweep_tags() {
  std::vector<std::string> out;
  for (const auto& [tag, a] : registry()) out.push_back(tag);
  return out;
}

std::string describe_sweep(const std::string& tag) {
  const auto& reg = registry();
  auto found = reg.find(tag);
  if (found == reg.end())
    throw PreconditionFailed("unknown sweep assertion \"" + tag + "\"");
  return found->second.description;
}

SweepReport run_sweep(const std::string& tag, const SweepParams& params) {
  return run_impl(tag, params, true);
}

SweepReport run_sweep_serial(const std::string& tag, const SweepParams& params) {
  return run_impl(tag, params, false);
}

}  // namespace tia
