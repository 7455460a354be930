#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>
#include <vector>

#include "tia/sweep.hpp"

using namespace tia;

// Runs every registered sweep twice, serial reference first, and checks the
// reports agree before printing the timing comparison.

static bool same(const SweepReport& a, const SweepReport& b) {
  if (a.graphs_checked != b.graphs_checked) return false;
  if (a.violations.size() != b.violations.size()) return false;
  for (size_t i = 0; i < a.violations.size(); ++i)
    if (a.violations[i].graph6 != b.violations[i].graph6 ||
        a.violations[i].diagnostic != b.violations[i].diagnostic)
      return false;
  return a.notes == b.notes;
}

int main(int argc, char** argv) {
  if (argc > 1 && (std::string(argv[1]) == "-h" || std::string(argv[1]) == "--help")) {
    std::printf("usage: bench_sweep [n_max] [tag...]\n");
    std::printf("runs each sweep with the serial engine and the parallel one, checks the\n");
    std::printf("reports match, and prints the timing comparison (default n_max 6, all tags)\n");
    return 0;
  }
  int n_max = argc > 1 ? std::atoi(argv[1]) : 6;
  if (n_max < 1) {
    std::fprintf(stderr, "bench_sweep: n_max must be a positive integer\n");
    return 1;
  }
  std::vector<std::string> tags;
  if (argc > 2)
    tags.assign(argv + 2, argv + argc);
  else
    tags = sweep_tags();

  bool all_ok = true;
  for (const std::string& tag : tags) {
    SweepParams p;
    p.n_max = n_max;
    try {
      SweepReport serial = run_sweep_serial(tag, p);
      SweepReport parallel = run_sweep(tag, p);
      bool okay = same(serial, parallel);
      all_ok = all_ok && okay;
      double speedup =
          parallel.elapsed_seconds > 0 ? serial.elapsed_seconds / parallel.elapsed_seconds : 0.0;
      std::printf("%-24s n<=%d checked=%-6d serial=%8.3fs parallel=%8.3fs speedup=%5.2f agree=%s\n",
                  tag.c_str(), n_max, serial.graphs_checked, serial.elapsed_seconds,
                  parallel.elapsed_seconds, speedup, okay ? "yes" : "NO");
    } catch (const std::exception& e) {
      std::printf("%-24s failed: %s\n", tag.c_str(), e.what());
      all_ok = false;
    }
  }
  return all_ok ? 0 : 1;
}
