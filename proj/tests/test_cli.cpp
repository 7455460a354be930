#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

// Drives the installed binary end to end. TIA_BIN comes from the build.

namespace {

struct RunResult {
  int rc = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args, const std::string& stdin_text = "") {
  static int counter = 0;
  std::string base = "/tmp/tia_cli_" + std::to_string(getpid()) + "_" + std::to_string(counter++);
  std::string in_path = base + ".in", out_path = base + ".out", err_path = base + ".err";
  {
    std::ofstream in(in_path);
    in << stdin_text;
  }
  std::string cmd = std::string(TIA_BIN) + " " + args + " < " + in_path + " > " + out_path +
                    " 2> " + err_path;
  int status = std::system(cmd.c_str());
  RunResult r;
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(in_path.c_str());
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream ss(text);
  std::string cur;
  while (std::getline(ss, cur))
    if (cur == line) return true;
  return false;
}

int line_count(const std::string& text) {
  int n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("usage errors") {
  CHECK(run("").rc == 1);
  CHECK(run("frobnicate").rc == 1);
  CHECK(run("sweep thm9.9").rc == 1);
  CHECK(run("probe nonsense").rc == 1);
  CHECK(run("tree-alpha --mode bogus", "Dhc\n").rc == 1);
  CHECK(run("--help").rc == 0);
  CHECK(run("sweep --list").rc == 0);
}

TEST_CASE("classify") {
  RunResult r = run("classify", "Dhc\n");
  CHECK(r.rc == 0);
  CHECK(r.out.find("graph 1 Dhc") == 0);
  CHECK(has_line(r.out, "chordal=false witness=[induced C5 on {0,1,2,3,4}]"));
  CHECK(has_line(r.out, "P3+P1-free=true witness=[]"));
  CHECK(has_line(r.out, "triangle-free=true witness=[]"));

  RunResult empty = run("classify", "");
  CHECK(empty.rc == 0);
  CHECK(empty.out.empty());

  RunResult bad = run("classify", "*nope*\n");
  CHECK(bad.rc == 2);
  CHECK(bad.err.find("line 1") != std::string::npos);
}

TEST_CASE("tree alpha modes") {
  RunResult exact = run("tree-alpha --mode exact", "Dhc\n");
  CHECK(exact.rc == 0);
  CHECK(has_line(exact.out, "c graph 1 Dhc"));
  CHECK(has_line(exact.out, "value 2"));
  CHECK(exact.out.find("# theorem=exact bound=2 paper_bound=2") != std::string::npos);
  CHECK(exact.out.find("s td ") != std::string::npos);

  RunResult p3p1 = run("tree-alpha --mode p3p1", "Dhc\n");
  CHECK(p3p1.rc == 0);
  CHECK(has_line(p3p1.out, "value 2"));
  CHECK(p3p1.out.find("theorem=thm1.5") != std::string::npos);

  // P5 is not (P3+P1)-free, so the exact-formula lane refuses it
  CHECK(run("tree-alpha --mode p3p1", "DhC\n").rc == 3);

  RunResult star = run("tree-alpha --mode star", "Dhc\n");
  CHECK(star.rc == 0);
  CHECK(star.out.find("theorem=thm1.3") != std::string::npos);

  RunResult split = run("tree-alpha --mode split", "Dhc\n");
  CHECK(split.rc == 0);
  CHECK(split.out.find("theorem=thm3.2") != std::string::npos);

  RunResult fvs = run("tree-alpha --mode fvs --k 2 --t 3", "Dhc\n");
  CHECK(fvs.rc == 0);
  CHECK(fvs.out.find("theorem=thm1.4") != std::string::npos);
  CHECK(fvs.out.find("paper_bound=21") != std::string::npos);

  // several graphs stream through in order
  RunResult multi = run("tree-alpha --mode exact", "Dhc\nC~\n");
  CHECK(multi.rc == 0);
  CHECK(has_line(multi.out, "c graph 2 C~"));
}

TEST_CASE("tree theta modes") {
  RunResult exact = run("tree-theta --mode exact", "Dhc\n");
  CHECK(exact.rc == 0);
  CHECK(has_line(exact.out, "value 2"));

  RunResult t3 = run("tree-theta --mode theta3", "Dhc\n");
  CHECK(t3.rc == 0);
  CHECK(t3.out.find("theorem=thm1.6") != std::string::npos);
  CHECK(t3.out.find("paper_bound=3") != std::string::npos);

  // C4 breaks the theta3 precondition
  CHECK(run("tree-theta --mode theta3", "Cr\n").rc == 3);
}

TEST_CASE("verify td") {
  std::string td = "s td 1 5 5\nb 1 1 2 3 4 5\n";
  std::ofstream("/tmp/tia_cli_whole.td") << td;
  RunResult ok = run("verify-td --td /tmp/tia_cli_whole.td", "Dhc\n");
  CHECK(ok.rc == 0);
  CHECK(has_line(ok.out, "valid true"));
  CHECK(has_line(ok.out, "alpha 2"));
  CHECK(has_line(ok.out, "theta 3"));
  CHECK(has_line(ok.out, "width 4"));

  std::ofstream("/tmp/tia_cli_bad.td") << "s td 2 2 5\nb 1 1 2\nb 2 3 4\n1 2\n";
  RunResult bad = run("verify-td --td /tmp/tia_cli_bad.td", "Dhc\n");
  CHECK(bad.rc == 3);
  CHECK(has_line(bad.out, "valid false"));
  CHECK(bad.out.find("violation ") != std::string::npos);
  std::remove("/tmp/tia_cli_whole.td");
  std::remove("/tmp/tia_cli_bad.td");
}

TEST_CASE("round trip through verify") {
  // decomposition printed by tree-alpha feeds back through verify-td
  RunResult td = run("tree-alpha --mode exact --out /tmp/tia_cli_rt.td", "D]o\n");
  CHECK(td.rc == 0);
  std::string text = slurp("/tmp/tia_cli_rt.td");
  std::string stripped;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty() && line[0] != '#' && line.rfind("value", 0) != 0) stripped += line + "\n";
  std::ofstream("/tmp/tia_cli_rt2.td") << stripped;
  RunResult ver = run("verify-td --td /tmp/tia_cli_rt2.td", "D]o\n");
  CHECK(ver.rc == 0);
  CHECK(has_line(ver.out, "valid true"));
  CHECK(has_line(ver.out, "alpha 2"));
  std::remove("/tmp/tia_cli_rt.td");
  std::remove("/tmp/tia_cli_rt2.td");
}

TEST_CASE("sweep command") {
  RunResult r = run("sweep lemma2.3 --n 5 --no-timestamp");
  CHECK(r.rc == 0);
  CHECK(has_line(r.out, "sweep lemma2.3"));
  CHECK(has_line(r.out, "params n_max=5 t=3 s=2 k=2"));
  CHECK(has_line(r.out, "graphs_checked 52"));
  CHECK(has_line(r.out, "violations 0"));
  CHECK(has_line(r.out, "notes 0"));

  RunResult again = run("sweep lemma2.3 --n 5 --no-timestamp");
  CHECK(again.out == r.out);  // reruns are byte identical

  RunResult stamped = run("sweep lemma2.3 --n 4");
  CHECK(stamped.rc == 0);
  CHECK(stamped.out.find("elapsed_seconds") != std::string::npos);
  CHECK(stamped.out.find("timestamp ") != std::string::npos);

  RunResult serial = run("sweep thm1.5 --n 5 --serial --no-timestamp");
  RunResult par = run("sweep thm1.5 --n 5 --no-timestamp");
  CHECK(serial.rc == 0);
  CHECK(serial.out == par.out);

  CHECK(run("sweep lemma2.3 --n 9").rc == 3);  // enumeration cap

  RunResult noted = run("sweep thm3.1-splitness --n 5 --no-timestamp");
  CHECK(has_line(noted.out, "note splitness 2: 15 graphs"));
}

TEST_CASE("probe command") {
  RunResult gap = run("probe q7.3 --n 5 --no-timestamp");
  CHECK(gap.rc == 0);
  CHECK(has_line(gap.out, "probe q7.3-p5-gap"));
  CHECK(gap.out.find("max_gap ") != std::string::npos);
  CHECK(gap.out.find("witness ") != std::string::npos);

  RunResult full = run("probe q7.3-p5-gap --n 5 --no-timestamp");
  CHECK(full.out == gap.out);

  RunResult cc = run("probe q7.4-clique-chordal --n 5 --no-timestamp");
  CHECK(cc.rc == 0);
  CHECK(has_line(cc.out, "counterexamples 0"));
}

TEST_CASE("gen enum random") {
  RunResult theta = run("gen theta 2 2 2");
  CHECK(theta.rc == 0);
  CHECK(theta.out == "D]o\n");
  CHECK(run("gen prism 1 1 0").rc == 3);
  CHECK(run("gen nosuch 3").rc == 3);

  RunResult en = run("enum --n 4");
  CHECK(en.rc == 0);
  CHECK(line_count(en.out) == 11);
  RunResult ch = run("enum --n 4 --filter chordal");
  CHECK(line_count(ch.out) == 10);
  CHECK(run("enum --n 9").rc == 3);
  CHECK(run("enum --n 4 --filter nonsense").rc == 2);

  RunResult r1 = run("random --n 12 --filter 'K1,3-free&O2-free' --seed 1");
  RunResult r2 = run("random --n 12 --filter 'K1,3-free&O2-free' --seed 1");
  CHECK(r1.rc == 0);
  CHECK(r1.out == r2.out);
  CHECK(line_count(r1.out) == 1);
}

TEST_CASE("subdivision check") {
  RunResult r = run("subdivision-check", "C~\n");
  CHECK(r.rc == 0);
  CHECK(has_line(r.out, "tw_before 3"));
  CHECK(has_line(r.out, "tw_after 3"));
  CHECK(has_line(r.out, "inequality_holds true"));
}

TEST_CASE("config file sets caps") {
  std::ofstream("/tmp/tia_cli_caps.ini") << "enum_cap=4\n";
  CHECK(run("--config /tmp/tia_cli_caps.ini enum --n 4").rc == 0);
  CHECK(run("--config /tmp/tia_cli_caps.ini enum --n 5").rc == 3);
  std::remove("/tmp/tia_cli_caps.ini");
}

TEST_CASE("output redirection") {
  RunResult r = run("sweep lemma2.3 --n 4 --no-timestamp --out /tmp/tia_cli_sweep.txt");
  CHECK(r.rc == 0);
  CHECK(r.out.empty());
  std::string text = slurp("/tmp/tia_cli_sweep.txt");
  CHECK(has_line(text, "graphs_checked 18"));
  std::remove("/tmp/tia_cli_sweep.txt");
}
