#include "ipclab/verify.h"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>

#include "ipclab/bfs_dag.h"
#include "ipclab/configurations.h"
#include "ipclab/generators.h"
#include "ipclab/ipc_complexity.h"
#include "ipclab/metric.h"
#include "ipclab/oracle.h"
#include "ipclab/parallel.h"
#include "ipclab/path_cover.h"

namespace ipclab {

namespace {

using Json = nlohmann::ordered_json;

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// The stream SplitMix64(seed) positioned after `draws` calls to Next().
SplitMix64 StreamAt(uint64_t seed, uint64_t draws) {
  return SplitMix64(seed + draws * kGolden);
}

std::string PathString(std::span<const Vertex> path) {
  std::string s;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(path[i]);
  }
  return s;
}

// Per-item outcome; row vectors are indexed like the suite's rows.
struct ItemResult {
  bool skipped = false;
  std::vector<int64_t> checked;
  std::vector<int64_t> failures;
  std::vector<std::string> first_failure;
  std::optional<Graph> graph;
  std::string label;

  explicit ItemResult(int rows)
      : checked(rows, 0), failures(rows, 0), first_failure(rows) {}

  void Check(int row, bool ok, const std::function<std::string()>& why) {
    ++checked[row];
    if (ok) return;
    if (failures[row]++ == 0) first_failure[row] = why();
  }
  bool failed() const {
    return std::any_of(failures.begin(), failures.end(),
                       [](int64_t f) { return f > 0; });
  }
};

// Runs `count` items in parallel and folds them in index order.
void RunItems(int count, const SuiteOptions& options,
              const std::vector<std::string>& row_names,
              const std::function<ItemResult(int)>& item, SuiteResult* out) {
  const int rows = static_cast<int>(row_names.size());
  std::vector<std::optional<ItemResult>> slots(count);
  ParallelFor(count, ResolveThreads(options.threads),
              [&](int i) { slots[i].emplace(item(i)); });
  std::vector<CheckRow> tallies(rows);
  for (int r = 0; r < rows; ++r) tallies[r].name = row_names[r];
  for (int i = 0; i < count; ++i) {
    const ItemResult& res = *slots[i];
    if (res.skipped) continue;
    for (int r = 0; r < rows; ++r) {
      tallies[r].checked += res.checked[r];
      if (res.failures[r] > 0 && tallies[r].failures == 0) {
        tallies[r].detail = res.label + ": " + res.first_failure[r];
      }
      tallies[r].failures += res.failures[r];
    }
    if (res.failed() && res.graph &&
        static_cast<int>(out->counterexamples.size()) <
            options.max_counterexamples) {
      out->counterexamples.push_back({res.label, *res.graph});
    }
  }
  for (auto& row : tallies) {
    row.passed = row.failures == 0;
    if (row.passed) {
      row.detail = std::to_string(row.checked) + " checks";
    } else {
      row.detail = std::to_string(row.failures) + " of " +
                   std::to_string(row.checked) + " failed; first " + row.detail;
    }
    out->rows.push_back(std::move(row));
  }
}

int Trials(const SuiteOptions& options, int fallback) {
  return options.trials >= 0 ? options.trials : fallback;
}

// ---- shared corpus ----------------------------------------------------

struct CorpusLayout {
  std::vector<int> first_index;  // first item index of each n, plus end
};

CorpusLayout Layout(int max_n) {
  CorpusLayout layout;
  int index = 0;
  for (int n = 1; n <= max_n; ++n) {
    layout.first_index.push_back(index);
    index += 1 << (n * (n - 1) / 2);
  }
  layout.first_index.push_back(index);
  return layout;
}

Graph GraphFromMask(int n, uint32_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1u) edges.emplace_back(u, v);
    }
  }
  return Graph::FromEdges(n, edges);
}

// Parameters of random trial i: draws 3i, 3i+1, 3i+2 of SplitMix64(seed)
// give n, the edge probability and the graph seed.
struct RandomSpec {
  int n;
  double p;
  uint64_t graph_seed;
};

RandomSpec RandomTrial(uint64_t seed, int i, int n_lo, int n_hi, double p_lo,
                       double p_hi) {
  SplitMix64 rng = StreamAt(seed, 3 * static_cast<uint64_t>(i));
  RandomSpec spec;
  spec.n = n_lo + static_cast<int>(rng.NextBelow(n_hi - n_lo + 1));
  spec.p = p_lo + (p_hi - p_lo) * rng.NextDouble();
  spec.graph_seed = rng.Next();
  return spec;
}

std::string RandomLabel(const char* prefix, int i, const RandomSpec& s) {
  std::ostringstream os;
  os << prefix << " trial " << i << " (n=" << s.n << ", p=" << s.p
     << ", seed=" << s.graph_seed << ")";
  return os.str();
}

// ---- oracle-equivalence -----------------------------------------------

ItemResult OracleItem(const Graph& g, std::string label) {
  ItemResult res(2);
  res.label = std::move(label);
  const int n = g.num_vertices();
  const DistanceMatrix dm = AllPairsDistances(g);
  const auto paths = oracle::EnumerateIsometricPaths(g, dm);
  int brute_min = n + 1;
  for (Vertex r = 0; r < n; ++r) {
    const BfsDag dag = BfsDag::Build(g, r);
    const auto& closure = dag.Closure();
    int brute = 1;
    for (size_t i = 0; i < paths.paths.size(); ++i) {
      if (!paths.maximal[i]) continue;
      brute = std::max(brute,
                       oracle::BruteForceMaxAntichain(closure, paths.paths[i]));
    }
    brute_min = std::min(brute_min, brute);
    const int dp = IpcoForRoot(g, dm, r).value;
    res.Check(0, dp == brute, [&] {
      return "root " + std::to_string(r) + ": dp " + std::to_string(dp) +
             " vs brute force " + std::to_string(brute);
    });
  }
  std::string error;
  int value = -1;
  try {
    value = ComputeIpco(g, dm, 1).value;
  } catch (const Error& e) {
    error = e.what();
  }
  res.Check(1, error.empty() && value == brute_min, [&] {
    return error.empty() ? "ipco " + std::to_string(value) +
                               " vs brute force " + std::to_string(brute_min)
                         : error;
  });
  if (res.failed()) res.graph = g;
  return res;
}

// ---- duality ----------------------------------------------------------

ItemResult DualityItem(const Graph& g, std::string label) {
  ItemResult res(3);
  res.label = std::move(label);
  const DistanceMatrix dm = AllPairsDistances(g);
  const auto paths = oracle::EnumerateIsometricPaths(g, dm);
  for (Vertex r = 0; r < g.num_vertices(); ++r) {
    const BfsDag dag = BfsDag::Build(g, r);
    const auto& closure = dag.Closure();
    for (const auto& p : paths.paths) {
      const int cover = oracle::MinRootedCoverOfSetBruteForce(closure, p);
      const int brute_ac = oracle::BruteForceMaxAntichain(closure, p);
      const AntichainWitness ac = MaxAntichain(dag, p);
      const int ac_size = static_cast<int>(ac.vertices.size());
      const auto where = [&] {
        return "root " + std::to_string(r) + ", path [" + PathString(p) + "]";
      };
      res.Check(0,
                cover == brute_ac && cover == ac_size &&
                    IsAntichain(dag, ac.vertices),
                [&] {
                  return where() + ": cover " + std::to_string(cover) +
                         ", antichain " + std::to_string(brute_ac) +
                         ", matching antichain " + std::to_string(ac_size);
                });
      const int length = static_cast<int>(p.size()) - 1;
      const int spread = std::abs(dag.level(p.front()) - dag.level(p.back()));
      res.Check(1, length >= spread + ac_size - 1, [&] {
        return where() + ": length " + std::to_string(length) +
               " < " + std::to_string(spread) + " + " +
               std::to_string(ac_size) + " - 1";
      });
      const bool single = SingleRootedCoverable(dag, g, dm, p);
      res.Check(2, single == (cover == 1), [&] {
        return where() + ": single-rooted test " +
               (single ? std::string("true") : std::string("false")) +
               ", brute-force cover " + std::to_string(cover);
      });
    }
  }
  if (res.failed()) res.graph = g;
  return res;
}

void RunCorpusSuite(const SuiteOptions& options, int rows_per_item,
                    const std::vector<std::string>& row_names,
                    ItemResult (*check)(const Graph&, std::string),
                    SuiteResult* out) {
  const int trials = Trials(options, 200);
  const int count = CorpusSize(options.max_n, trials);
  RunItems(count, options, row_names,
           [&](int i) {
             Graph g;
             std::string label;
             if (!CorpusGraph(options.max_n, trials, options.seed, i, &g,
                              &label)) {
               ItemResult skipped(rows_per_item);
               skipped.skipped = true;
               return skipped;
             }
             return check(g, std::move(label));
           },
           out);
}

// ---- hyperbolicity-bound ----------------------------------------------

Graph BoundTrialGraph(uint64_t seed, int i, std::string* label) {
  SplitMix64 rng = StreamAt(seed, 4 * static_cast<uint64_t>(i));
  const bool tree = rng.NextBelow(4) == 0;
  const int n = 4 + static_cast<int>(rng.NextBelow(37));  // 4..40
  const double degree = 2.5 + 5.5 * rng.NextDouble();
  const uint64_t graph_seed = rng.Next();
  std::ostringstream os;
  if (tree) {
    os << "trial " << i << " (tree n=" << n << ", seed=" << graph_seed << ")";
    *label = os.str();
    return RandomTree(n, graph_seed);
  }
  const double p = std::min(1.0, degree / (n - 1));
  os << "trial " << i << " (n=" << n << ", p=" << p << ", seed=" << graph_seed
     << ")";
  *label = os.str();
  return RandomConnected(n, p, graph_seed);
}

void HyperbolicityBoundSuite(const SuiteOptions& options, SuiteResult* out) {
  const int trials = Trials(options, 500);
  RunItems(trials, options,
           {"ipco <= 4 delta + 3", "four-point = Gromov-product form (n <= 20)"},
           [&](int i) {
             ItemResult res(2);
             const Graph g = BoundTrialGraph(options.seed, i, &res.label);
             const DistanceMatrix dm = AllPairsDistances(g);
             const HalfInteger delta = Hyperbolicity(dm);
             const int ipco = ComputeIpco(g, dm, 1).value;
             // ipco <= 4 delta + 3  <=>  ipco <= 2 * doubled + 3
             res.Check(0, ipco <= 2 * delta.doubled + 3, [&] {
               return "ipco " + std::to_string(ipco) + ", delta " +
                      delta.ToString();
             });
             if (g.num_vertices() <= 20) {
               const HalfInteger other = HyperbolicityByGromovProducts(dm);
               res.Check(1, other == delta, [&] {
                 return "four-point " + delta.ToString() + ", Gromov form " +
                        other.ToString();
               });
             }
             if (res.failed()) res.graph = g;
             return res;
           },
           out);
}

// ---- lower-bounds -----------------------------------------------------

struct Task {
  std::string name;
  std::function<void(CheckRow*, std::optional<Graph>*)> run;
};

void RunTasks(const std::vector<Task>& tasks, const SuiteOptions& options,
              SuiteResult* out) {
  const int count = static_cast<int>(tasks.size());
  std::vector<CheckRow> rows(count);
  std::vector<std::optional<Graph>> graphs(count);
  ParallelFor(count, ResolveThreads(options.threads), [&](int i) {
    rows[i].name = tasks[i].name;
    rows[i].checked = 1;
    try {
      tasks[i].run(&rows[i], &graphs[i]);
    } catch (const Error& e) {
      rows[i].passed = false;
      rows[i].detail = std::string(ErrorCodeName(e.code())) + ": " + e.what();
    }
    rows[i].failures = rows[i].passed ? 0 : 1;
  });
  for (int i = 0; i < count; ++i) {
    if (!rows[i].passed && graphs[i] &&
        static_cast<int>(out->counterexamples.size()) <
            options.max_counterexamples) {
      out->counterexamples.push_back({rows[i].name, *graphs[i]});
    }
    out->rows.push_back(std::move(rows[i]));
  }
}

ApexGraph GluedFamily(char family, int k) {
  ApexGraph base;
  switch (family) {
    case 'x': base = XGraph(k); break;
    case 'y': base = YGraph(k); break;
    case 'z': base = ZGraph(k); break;
    default: base = WGraph(k); break;
  }
  return Glue(base, base);
}

void LowerBoundsSuite(const SuiteOptions& options, SuiteResult* out) {
  std::vector<int> ks = options.ks;
  if (ks.empty()) ks = {4, 5, 6};
  std::vector<Task> tasks;
  const std::string families = "xyz";
  for (int k : ks) {
    for (char f : families) {
      const std::string tag =
          std::string("glued ") + static_cast<char>(f - 'a' + 'A') + "_" +
          std::to_string(k);
      tasks.push_back({tag + ": ipco >= " + std::to_string(k),
                       [f, k](CheckRow* row, std::optional<Graph>* graph) {
                         const ApexGraph g = GluedFamily(f, k);
                         const int value = ComputeIpco(g.graph, 1).value;
                         row->passed = value >= k;
                         row->detail = "ipco " + std::to_string(value) +
                                       ", n " +
                                       std::to_string(g.graph.num_vertices());
                         *graph = g.graph;
                       }});
      if (k <= 5) {
        const int bound = (k + 1) / 2 - 1;
        tasks.push_back(
            {tag + ": delta >= " + std::to_string(bound),
             [f, k, bound](CheckRow* row, std::optional<Graph>* graph) {
               const ApexGraph g = GluedFamily(f, k);
               const HalfInteger delta = Hyperbolicity(AllPairsDistances(g.graph));
               row->passed = delta >= HalfInteger::FromInt(bound);
               row->detail = "delta " + delta.ToString();
               *graph = g.graph;
             }});
      }
    }
    if (k <= 5) {
      tasks.push_back(
          {"glued W_" + std::to_string(k) + ": explicit cover of size " +
               std::to_string(3 * k + 1) + " validates",
           [k](CheckRow* row, std::optional<Graph>* graph) {
             const WCover w = WCover3kPlus1(k);
             const DistanceMatrix dm = AllPairsDistances(w.graph.graph);
             const CoverValidation v = ValidateCover(w.graph.graph, dm, w.cover);
             row->passed = v.ok && w.cover.size() == 3 * k + 1;
             row->detail = "size " + std::to_string(w.cover.size()) +
                           (v.ok ? ", valid" : ", invalid");
             *graph = w.graph.graph;
           }});
    }
    if (k == 4) {
      const int bound = k * k;
      tasks.push_back(
          {"glued W_4: min rooted cover >= 16 at every root",
           [bound](CheckRow* row, std::optional<Graph>* graph) {
             const ApexGraph g = GluedFamily('w', 4);
             int smallest = g.graph.num_vertices();
             Vertex arg = 0;
             for (Vertex r = 0; r < g.graph.num_vertices(); ++r) {
               const int size = MinRootedCover(g.graph, r).size();
               if (size < smallest) {
                 smallest = size;
                 arg = r;
               }
             }
             row->passed = smallest >= bound;
             row->detail = "minimum " + std::to_string(smallest) +
                           " at root " + std::to_string(arg);
             *graph = g.graph;
           }});
      tasks.push_back(
          {"glued W_4: approximation returns >= 16 paths",
           [bound](CheckRow* row, std::optional<Graph>* graph) {
             const ApexGraph g = GluedFamily('w', 4);
             const PathCover cover = ApproxIsometricPathCover(g.graph, 1);
             row->passed = cover.size() >= bound;
             row->detail = "size " + std::to_string(cover.size()) +
                           " vs explicit 13";
             *graph = g.graph;
           }});
    }
  }
  RunTasks(tasks, options, out);
}

// ---- approx-ratio -----------------------------------------------------

void ApproxRatioSuite(const SuiteOptions& options, SuiteResult* out) {
  const int trials = Trials(options, 300);
  RunItems(trials, options,
           {"exact <= approx", "approx <= ipco * exact",
            "both covers validate"},
           [&](int i) {
             ItemResult res(3);
             const RandomSpec spec =
                 RandomTrial(options.seed, i, 2, 8, 0.2, 0.8);
             res.label = RandomLabel("approx", i, spec);
             const Graph g = RandomConnected(spec.n, spec.p, spec.graph_seed);
             const DistanceMatrix dm = AllPairsDistances(g);
             const PathCover exact = oracle::ExactMinIsometricPathCover(g);
             const PathCover approx = ApproxIsometricPathCover(g, 1);
             const int ipco = ComputeIpco(g, dm, 1).value;
             const auto sizes = [&] {
               return "exact " + std::to_string(exact.size()) + ", approx " +
                      std::to_string(approx.size()) + ", ipco " +
                      std::to_string(ipco);
             };
             res.Check(0, exact.size() <= approx.size(), sizes);
             res.Check(1, approx.size() <= ipco * exact.size(), sizes);
             const bool valid = ValidateCover(g, dm, exact).ok &&
                                ValidateCover(g, dm, approx).ok;
             res.Check(2, valid, [] { return std::string("invalid cover"); });
             if (res.failed()) res.graph = g;
             return res;
           },
           out);
}

// ---- turtle -----------------------------------------------------------

constexpr Attachment kAttachments[] = {Attachment::kSingle,
                                       Attachment::kAdjacent,
                                       Attachment::kSpread};

void TurtleSuite(const SuiteOptions& options, SuiteResult* out) {
  // t in {1,2,3} x 9 attachment pairs x 2 gap/length settings.
  constexpr int kPerT = 9 * 2;
  RunItems(3 * kPerT, options,
           {"turtle verifies at t+1", "extracted configuration verifies at t",
            "kind matches the attachment case split"},
           [&](int i) {
             ItemResult res(3);
             const int t = 1 + i / kPerT;
             const int pattern = (i % kPerT) / 2;
             const int stretch = i % 2;
             FatTurtleSpec spec;
             spec.t = t + 1;
             spec.u_attach = kAttachments[pattern / 3];
             spec.v_attach = kAttachments[pattern % 3];
             spec.gap_c_prime = std::max(t + 1, 2) + stretch;
             spec.gap_c = std::max(t + 1, 2) + 2 * stretch;
             spec.path_len = t + 1 + stretch;
             res.label = "t=" + std::to_string(t) + " u=" +
                         std::string(AttachmentName(spec.u_attach)) + " v=" +
                         std::string(AttachmentName(spec.v_attach)) +
                         (stretch ? " stretched" : "");
             const GeneratedTurtle turtle = FatTurtle(spec);
             const Verdict tv = VerifyFatTurtle(turtle.graph, turtle.witness);
             res.Check(0, tv.ok, [&] { return "clause " + tv.first(); });
             if (tv.ok) {
               const ThreePathConfig c =
                   ExtractThreePathConfiguration(turtle.graph, turtle.witness);
               const Verdict cv = VerifyThreePathConfiguration(turtle.graph, c);
               res.Check(1, cv.ok && c.t == t, [&] { return cv.first(); });
               const ConfigKind want =
                   PredictedKind(spec.u_attach, spec.v_attach);
               res.Check(2, c.kind == want, [&] {
                 return "got " + std::string(ConfigKindName(c.kind)) +
                        ", expected " + std::string(ConfigKindName(want));
               });
             }
             if (res.failed()) res.graph = turtle.graph;
             return res;
           },
           out);

  const GeneratedTurtle fig = Figure2Turtle();
  std::vector<Task> tasks;
  tasks.push_back({"figure 2: 4-fat turtle verifies",
                   [&](CheckRow* row, std::optional<Graph>* graph) {
                     const Verdict v = VerifyFatTurtle(fig.graph, fig.witness);
                     row->passed = v.ok;
                     row->detail = v.ok ? "ok" : "clause " + v.first();
                     *graph = fig.graph;
                   }});
  tasks.push_back({"figure 2: rejected at t=6 by clause c",
                   [&](CheckRow* row, std::optional<Graph>* graph) {
                     FatTurtleWitness w = fig.witness;
                     w.t = 6;
                     const Verdict v = VerifyFatTurtle(fig.graph, w);
                     row->passed = !v.ok && v.first() == "c";
                     row->detail = v.ok ? "accepted" : "clause " + v.first();
                     *graph = fig.graph;
                   }});
  tasks.push_back(
      {"figure 2: extraction gives a verified 3-configuration",
       [&](CheckRow* row, std::optional<Graph>* graph) {
         const ThreePathConfig c =
             ExtractThreePathConfiguration(fig.graph, fig.witness);
         const Verdict v = VerifyThreePathConfiguration(fig.graph, c);
         row->passed = v.ok && c.t == 3;
         row->detail = std::to_string(c.t) + "-" +
                       std::string(ConfigKindName(c.kind)) +
                       (v.ok ? "" : ": " + v.first());
         *graph = fig.graph;
       }});
  RunTasks(tasks, options, out);
}

}  // namespace

int CorpusSize(int max_n, int random_trials) {
  return Layout(max_n).first_index.back() + random_trials;
}

bool CorpusGraph(int max_n, int random_trials, uint64_t seed, int index,
                 Graph* out, std::string* label) {
  const CorpusLayout layout = Layout(max_n);
  const int exhaustive = layout.first_index.back();
  if (index >= exhaustive) {
    const int trial = index - exhaustive;
    if (trial >= random_trials) {
      throw Error(ErrorCode::kInvalidParam, "corpus index out of range");
    }
    const RandomSpec spec = RandomTrial(seed, trial, 7, 9, 0.25, 0.75);
    *out = RandomConnected(spec.n, spec.p, spec.graph_seed);
    *label = RandomLabel("random", trial, spec);
    return true;
  }
  int n = 1;
  while (layout.first_index[n] <= index) ++n;
  const uint32_t mask = static_cast<uint32_t>(index - layout.first_index[n - 1]);
  Graph g = GraphFromMask(n, mask);
  if (!IsConnected(g)) return false;
  *out = std::move(g);
  *label = "n=" + std::to_string(n) + " edge mask " + std::to_string(mask);
  return true;
}

SuiteResult RunSuite(std::string_view suite, const SuiteOptions& options) {
  if (options.max_n < 0 || options.max_n > 7) {
    throw Error(ErrorCode::kInvalidParam, "max-n must be in [0, 7]");
  }
  SuiteResult out;
  out.suite = std::string(suite);
  const std::string range = "n<=" + std::to_string(options.max_n) +
                            " and random n in [7,9]";
  if (suite == "oracle-equivalence") {
    RunCorpusSuite(options, 2,
                   {"dp ipco_r = brute force, every root (" + range + ")",
                    "ipco = min over roots, witness certified"},
                   OracleItem, &out);
  } else if (suite == "duality") {
    RunCorpusSuite(options, 3,
                   {"min rooted cover = max antichain, every isometric path",
                    "|P| >= |d(r,x) - d(r,y)| + |A_r(P)| - 1",
                    "single rooted path iff cover is 1"},
                   DualityItem, &out);
  } else if (suite == "hyperbolicity-bound") {
    HyperbolicityBoundSuite(options, &out);
  } else if (suite == "lower-bounds") {
    for (int k : options.ks) {
      if (k < 4) throw Error(ErrorCode::kInvalidParam, "k must be >= 4");
    }
    LowerBoundsSuite(options, &out);
  } else if (suite == "approx-ratio") {
    ApproxRatioSuite(options, &out);
  } else if (suite == "turtle") {
    TurtleSuite(options, &out);
  } else {
    throw Error(ErrorCode::kInvalidParam,
                "unknown suite '" + std::string(suite) + "'");
  }
  out.passed = std::all_of(out.rows.begin(), out.rows.end(),
                           [](const CheckRow& r) { return r.passed; });
  return out;
}

Json ToJson(const SuiteResult& result) {
  Json j;
  j["suite"] = result.suite;
  j["passed"] = result.passed;
  Json rows = Json::array();
  for (const auto& r : result.rows) {
    Json row;
    row["check"] = r.name;
    row["passed"] = r.passed;
    row["checked"] = r.checked;
    row["failures"] = r.failures;
    row["detail"] = r.detail;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  Json ce = Json::array();
  for (const auto& c : result.counterexamples) {
    Json entry;
    entry["label"] = c.label;
    entry["n"] = c.graph.num_vertices();
    entry["edges"] = c.graph.Edges();
    ce.push_back(std::move(entry));
  }
  j["counterexamples"] = std::move(ce);
  return j;
}

std::string FormatTable(const SuiteResult& result) {
  std::ostringstream os;
  os << "suite " << result.suite << "\n";
  for (const auto& r : result.rows) {
    os << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  [" << r.detail
       << "]\n";
  }
  os << (result.passed ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace ipclab
