// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ipclab/generators.h"
#include "ipclab/ipc_complexity.h"
#include "ipclab/metric.h"
#include "ipclab/path_cover.h"
#include "ipclab/verify.h"

namespace {

using namespace ipclab;
using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Fmt(double x, int digits = 2) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << x;
  return os.str();
}

// Suite rows passed; otherwise the first failing row.
Outcome FromRows(const SuiteResult& r, const std::vector<size_t>& rows) {
  Outcome o{true, ""};
  for (size_t i : rows) {
    const CheckRow& row = r.rows.at(i);
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += row.name + ": " + row.detail;
    if (!row.passed) {
      o.pass = false;
      o.detail = row.name + ": " + row.detail;
      return o;
    }
  }
  return o;
}

std::vector<size_t> AllRows(const SuiteResult& r) {
  std::vector<size_t> rows(r.rows.size());
  for (size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return rows;
}

SuiteOptions Defaults() {
  SuiteOptions options;
  options.seed = 1;
  options.threads = 0;
  return options;
}

Outcome Criterion1() {
  const SuiteResult r = RunSuite("oracle-equivalence", Defaults());
  return FromRows(r, AllRows(r));
}

double TimeIpco(const Graph& g, int* value) {
  double best = 1e300;
  for (int rep = 0; rep < 3; ++rep) {
    const auto start = Clock::now();
    *value = ComputeIpco(g, 1).value;
    best = std::min(best, Seconds(start));
  }
  return best;
}

Outcome Criterion2() {
  constexpr double kDegree = 10.0;
  const Graph small = RandomConnected(150, kDegree / 149, 1);
  const Graph large = RandomConnected(300, kDegree / 299, 1);
  int v_small = 0, v_large = 0;
  const double t_small = TimeIpco(small, &v_small);
  const double t_large = TimeIpco(large, &v_large);
  const double ratio = t_large / std::max(t_small, 1e-9);
  Outcome o;
  o.pass = ratio <= 10.0 && t_large < 60.0;
  o.detail = "n=150 m=" + std::to_string(small.num_edges()) + " " +
             Fmt(t_small, 3) + "s; n=300 m=" +
             std::to_string(large.num_edges()) + " " + Fmt(t_large, 3) +
             "s; ratio " + Fmt(ratio) + " (<= 10), single-threaded, min of 3";
  return o;
}

Outcome Criterion3() {
  SuiteOptions options = Defaults();
  options.trials = 500;
  const SuiteResult r = RunSuite("hyperbolicity-bound", options);
  return FromRows(r, AllRows(r));
}

Outcome Criterion4() {
  Outcome o{true, ""};
  for (int k : {4, 5, 6}) {
    const ApexGraph bases[] = {XGraph(k), YGraph(k), ZGraph(k)};
    const char* names[] = {"X", "Y", "Z"};
    for (int f = 0; f < 3; ++f) {
      const ApexGraph g = Glue(bases[f], bases[f]);
      const int value = ComputeIpco(g.graph).value;
      std::string item = std::string(names[f]) + std::to_string(k) +
                         ": ipco " + std::to_string(value);
      bool ok = value >= k;
      if (k <= 5) {
        const HalfInteger delta = Hyperbolicity(AllPairsDistances(g.graph));
        ok = ok && delta >= HalfInteger::FromInt((k + 1) / 2 - 1);
        item += " delta " + delta.ToString();
      }
      o.pass = o.pass && ok;
      o.detail += (o.detail.empty() ? "" : ", ") + item;
    }
  }
  return o;
}

Outcome Criterion5() {
  const WCover w = WCover3kPlus1(4);
  const Graph& g = w.graph.graph;
  int smallest = g.num_vertices();
  for (Vertex r = 0; r < g.num_vertices(); ++r) {
    smallest = std::min(smallest, MinRootedCover(g, r).size());
  }
  const bool valid = ValidateCover(g, AllPairsDistances(g), w.cover).ok;
  const int approx = ApproxIsometricPathCover(g).size();
  Outcome o;
  o.pass = g.num_vertices() == 73 && smallest >= 16 && valid &&
           w.cover.size() == 13 && approx >= 16;
  o.detail = "n=" + std::to_string(g.num_vertices()) +
             "; min rooted cover over roots " + std::to_string(smallest) +
             " (>= 16); explicit cover " + std::to_string(w.cover.size()) +
             (valid ? " valid" : " INVALID") + "; approx " +
             std::to_string(approx) + " (>= 16), ratio " +
             Fmt(approx / 13.0) + " vs 16/13";
  return o;
}

Outcome Criterion6() {
  SuiteOptions options = Defaults();
  options.trials = 300;
  const SuiteResult r = RunSuite("approx-ratio", options);
  return FromRows(r, AllRows(r));
}

Outcome Criterion9() {
  const SuiteResult r = RunSuite("turtle", Defaults());
  return FromRows(r, AllRows(r));
}

struct Run {
  int code = -1;
  std::string out;
};

Run Cli(const std::string& args) {
  const std::string cmd = std::string(IPCLAB_CLI_PATH) + " " + args;
  Run run;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return run;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    run.out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

Outcome Criterion10() {
  const std::string graph = "/tmp/ipclab_acceptance_random.txt";
  if (Cli("gen random 120 0.05 --seed 7 -o " + graph).code != 0) {
    return {false, "could not generate input"};
  }
  std::vector<std::string> commands = {"ipco " + graph + " --witness"};
  for (std::string_view s : kSuiteNames) {
    commands.push_back("verify " + std::string(s));
  }
  Outcome o{true, ""};
  for (const auto& c : commands) {
    const Run one = Cli("--json --no-timing --threads 1 " + c);
    const Run eight = Cli("--json --no-timing --threads 8 " + c);
    const Run again = Cli("--json --no-timing --threads 8 " + c);
    const bool same = one.code == 0 && one.out == eight.out &&
                      eight.out == again.out && !one.out.empty();
    if (!same) {
      o.pass = false;
      o.detail = "differs: " + c;
      return o;
    }
  }
  o.detail = std::to_string(commands.size()) +
             " commands byte-identical at 1 and 8 threads and on repeat "
             "(timing_ms omitted)";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    const char* tolerance;
    double budget_s;
    std::function<Outcome()> run;
  };
  std::optional<SuiteResult> duality;
  auto duality_rows = [&](size_t row) {
    if (!duality) duality = RunSuite("duality", Defaults());
    return FromRows(*duality, {row});
  };
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence", "exact", 600, Criterion1},
      {2, "O(n^2 m) scaling", "ratio <= 10x, n=300 < 60 s", 600, Criterion2},
      {3, "ipco <= 4 delta + 3", "exact, zero violations", 600, Criterion3},
      {4, "glued X/Y/Z lower bounds", "exact", 300, Criterion4},
      {5, "glued W_4 lower bound", "exact", 120, Criterion5},
      {6, "approximation guarantee", "exact", 600, Criterion6},
      {7, "rooted cover = max antichain", "exact", 600,
       [&] { return duality_rows(0); }},
      {8, "antichain-length bound", "exact", 600,
       [&] { return duality_rows(1); }},
      {9, "fat-turtle extraction", "exact", 600, Criterion9},
      {10, "determinism", "byte-identical", 1200, Criterion10},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = Seconds(start);
    if (elapsed > c.budget_s) {
      o.pass = false;
      o.detail += "; over time budget";
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << " ("
              << c.name << ") [tolerance: " << c.tolerance << "; "
              << Fmt(elapsed, 1) << "s of " << c.budget_s << "s] "
              << o.detail << std::endl;
  }
  std::cout << (all ? "ALL PASS" : "SOME FAILED") << std::endl;
  return all ? 0 : 1;
}
