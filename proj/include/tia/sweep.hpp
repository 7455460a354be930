#pragma once

#include <string>
#include <vector>

#include "tia/graph.hpp"

// Assertion sweeps: each registered tag enumerates a deterministic input
// list (graphs up to n_max, root graphs for co-line-graph statements, join
// pairs, or generated obstruction families) and checks one implication per
// input. run_sweep fans the checks out with OpenMP; run_sweep_serial is the
// reference implementation and must produce an identical report.

namespace tia {

struct SweepParams {
  int n_max = 5;
  int t = 3;  // biclique side for cor5.4
  int s = 2;  // star size for the thm1.3 family
  int k = 2;  // reserved for cycle-packing variants
};

struct SweepViolation {
  std::string graph6;
  std::string diagnostic;
};

struct SweepReport {
  std::string tag;
  SweepParams params;
  int graphs_checked = 0;
  std::vector<SweepViolation> violations;  // sorted by canonical form
  std::vector<std::string> notes;          // observational output
  double elapsed_seconds = 0.0;
};

std::vector<std::string> sweep_tags();
std::string describe_sweep(const std::string& tag);

SweepReport run_sweep(const std::string& tag, const SweepParams& params);
SweepReport run_sweep_serial(const std::string& tag, const SweepParams& params);

}  // namespace tia
