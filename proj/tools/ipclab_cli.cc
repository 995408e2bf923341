// ipclab: isometric path complexity, path covers, hyperbolicity, graph
// families and property suites from the command line.
//
// Exit codes: 0 ok/PASS, 1 FAIL, 2 parse error, 3 precondition, 4 resource
// cap.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ipclab/configurations.h"
#include "ipclab/generators.h"
#include "ipclab/graph.h"
#include "ipclab/ipc_complexity.h"
#include "ipclab/metric.h"
#include "ipclab/oracle.h"
#include "ipclab/parallel.h"
#include "ipclab/path_cover.h"
#include "ipclab/report.h"
#include "ipclab/verify.h"

namespace {

using namespace ipclab;
using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

enum ExitCode {
  kOk = 0,
  kFail = 1,
  kParse = 2,
  kPrecondition = 3,
  kResource = 4,
};

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateEdge:
    case ErrorCode::kSelfLoop:
    case ErrorCode::kMalformedLine:
    case ErrorCode::kIdOutOfRange:
      return kParse;
    case ErrorCode::kTooLarge:
    case ErrorCode::kTruncated:
      return kResource;
    case ErrorCode::kCertification:
      return kFail;
    default:
      return kPrecondition;
  }
}

struct Globals {
  bool json = false;
  int threads = 0;
  bool one_based = false;
  bool no_timing = false;
};

Globals g_opts;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void Emit(RunReport report, double ms, const std::string& text) {
  if (g_opts.json) {
    if (!g_opts.no_timing) report.timing_ms = ms;
    std::cout << ToJson(report).dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

Graph LoadGraph(const std::string& path) {
  ParseOptions options;
  options.one_based = g_opts.one_based;
  return ReadEdgeListFile(path, options);
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidParam, "cannot write " + path);
  out << contents;
}

std::string PathText(const std::vector<Vertex>& path) {
  const int shift = g_opts.one_based ? 1 : 0;
  std::string s;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(path[i] + shift);
  }
  return s;
}

// ---- ipco ---------------------------------------------------------------

struct IpcoArgs {
  std::string graph;
  std::optional<int> root;
  bool per_component = false;
  bool witness = false;
};

int RunIpco(const IpcoArgs& args) {
  const auto start = Clock::now();
  const Graph g = LoadGraph(args.graph);
  RunReport report{"ipco", g, Json::object(), std::nullopt};
  std::ostringstream text;
  if (args.root) {
    const Vertex r = *args.root - (g_opts.one_based ? 1 : 0);
    if (r < 0 || r >= g.num_vertices()) {
      throw Error(ErrorCode::kInvalidParam, "root out of range");
    }
    if (!IsConnected(g)) {
      throw Error(ErrorCode::kDisconnected, "graph is not connected");
    }
    const DistanceMatrix dm = AllPairsDistances(g, ResolveThreads(g_opts.threads));
    const RootComplexity rc = IpcoForRoot(g, dm, r);
    report.results["root"] = rc.root;
    report.results["ipco_r"] = rc.value;
    report.results["source"] = rc.source;
    report.results["terminal"] = rc.terminal;
    text << "ipco_r(root " << *args.root << ") = " << rc.value << "\n";
    if (args.witness) {
      const GammaTable table = ComputeGammaTable(g, dm, r, rc.source);
      const auto path = WitnessPath(g, table, rc.terminal);
      report.results["witness_path"] = path;
      text << "witness path: " << PathText(path) << "\n";
    }
  } else if (args.per_component) {
    const PerComponentReport pc = ComputeIpcoPerComponent(g, g_opts.threads);
    report.results = ToJson(pc);
    text << "ipco (max over " << pc.components.size()
         << " components) = " << pc.value << "\n";
    for (size_t i = 0; i < pc.components.size(); ++i) {
      text << "  component " << i << ": "
           << pc.components[i].vertices.size() << " vertices, ipco "
           << pc.components[i].report.value << "\n";
    }
  } else {
    const ComplexityReport cr = ComputeIpco(g, g_opts.threads);
    report.results = ToJson(cr);
    if (!args.witness) report.results.erase("witness");
    text << "ipco = " << cr.value << " (best root "
         << cr.best_root + (g_opts.one_based ? 1 : 0) << ")\n";
    if (args.witness) {
      text << "witness path (root "
           << cr.witness.root + (g_opts.one_based ? 1 : 0)
           << "): " << PathText(cr.witness.path) << "\n";
    }
  }
  Emit(std::move(report), MillisSince(start), text.str());
  return kOk;
}

// ---- cover --------------------------------------------------------------

struct CoverArgs {
  std::string graph;
  std::vector<std::string> mode;
  std::string output;
  int exact_limit = oracle::kDefaultExactCoverLimit;
};

int RunCover(const CoverArgs& args) {
  const auto start = Clock::now();
  const Graph g = LoadGraph(args.graph);
  if (!IsConnected(g)) {
    throw Error(ErrorCode::kDisconnected, "graph is not connected");
  }
  const std::string& mode = args.mode.at(0);
  PathCover cover;
  if (mode == "approx") {
    cover = ApproxIsometricPathCover(g, g_opts.threads);
  } else if (mode == "rooted") {
    if (args.mode.size() < 2) {
      throw Error(ErrorCode::kInvalidParam, "--mode rooted needs a root");
    }
    const Vertex r = std::stoi(args.mode[1]) - (g_opts.one_based ? 1 : 0);
    if (r < 0 || r >= g.num_vertices()) {
      throw Error(ErrorCode::kInvalidParam, "root out of range");
    }
    cover = MinRootedCover(g, r);
  } else if (mode == "exact") {
    cover = oracle::ExactMinIsometricPathCover(g, args.exact_limit);
  } else {
    throw Error(ErrorCode::kInvalidParam, "unknown mode '" + mode + "'");
  }
  const DistanceMatrix dm = AllPairsDistances(g, ResolveThreads(g_opts.threads));
  const CoverValidation validation = ValidateCover(g, dm, cover);
  if (!args.output.empty()) {
    WriteFile(args.output, WriteCover(cover, g_opts.one_based));
  }

  RunReport report{"cover " + mode, g, Json::object(), std::nullopt};
  report.results["mode"] = mode;
  report.results["cover"] = ToJson(cover);
  report.results["validation"] = ToJson(validation);
  std::ostringstream text;
  text << mode << " cover: " << cover.size() << " paths ("
       << (validation.ok ? "valid" : "INVALID") << ")\n";
  if (args.output.empty()) text << WriteCover(cover, g_opts.one_based);
  Emit(std::move(report), MillisSince(start), text.str());
  return validation.ok ? kOk : kFail;
}

// ---- hyperbolicity ------------------------------------------------------

struct HyperbolicityArgs {
  std::string graph;
  bool force = false;
};

int RunHyperbolicity(const HyperbolicityArgs& args) {
  const auto start = Clock::now();
  const Graph g = LoadGraph(args.graph);
  const int threads = ResolveThreads(g_opts.threads);
  HyperbolicityOptions options;
  options.force = args.force;
  options.threads = threads;
  if (!args.force && g.num_vertices() > options.vertex_cap) {
    throw Error(ErrorCode::kTooLarge,
                "hyperbolicity is capped at " +
                    std::to_string(options.vertex_cap) +
                    " vertices; pass --force");
  }
  const HalfInteger delta = Hyperbolicity(AllPairsDistances(g, threads), options);
  RunReport report{"hyperbolicity", g, Json::object(), std::nullopt};
  report.results["delta"] = delta.ToString();
  report.results["delta_doubled"] = delta.doubled;
  Emit(std::move(report), MillisSince(start),
       "delta = " + delta.ToString() + "\n");
  return kOk;
}

// ---- gen ----------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::vector<std::string> params;
  uint64_t seed = 1;
  std::string output;
  bool witness = false;
  bool z_clique_all = false;
};

struct Generated {
  Graph graph;
  Json witness = Json::object();
};

int IntParam(const GenArgs& a, size_t i, const char* name) {
  if (i >= a.params.size()) {
    throw Error(ErrorCode::kInvalidParam,
                "family '" + a.family + "' needs parameter <" + name + ">");
  }
  try {
    size_t used = 0;
    const int v = std::stoi(a.params[i], &used);
    if (used != a.params[i].size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidParam,
                std::string("bad integer for <") + name + ">: " + a.params[i]);
  }
}

double DoubleParam(const GenArgs& a, size_t i, const char* name) {
  if (i >= a.params.size()) {
    throw Error(ErrorCode::kInvalidParam,
                "family '" + a.family + "' needs parameter <" + name + ">");
  }
  try {
    return std::stod(a.params[i]);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidParam,
                std::string("bad number for <") + name + ">: " + a.params[i]);
  }
}

Attachment AttachParam(const GenArgs& a, size_t i) {
  if (i >= a.params.size()) return Attachment::kSingle;
  for (Attachment x : {Attachment::kSingle, Attachment::kAdjacent,
                       Attachment::kSpread}) {
    if (a.params[i] == AttachmentName(x)) return x;
  }
  throw Error(ErrorCode::kInvalidParam, "attachment must be single, adjacent "
                                        "or spread: " + a.params[i]);
}

Json ApexWitness(const ApexGraph& g) {
  Json j;
  j["apex"] = g.apex;
  j["k"] = g.k;
  return j;
}

Json ConfigWitness(const ThreePathConfig& c) {
  Json j;
  j["kind"] = std::string(ConfigKindName(c.kind));
  j["t"] = c.t;
  j["paths"] = c.paths;
  j["anchors"] = c.anchors;
  return j;
}

Json TurtleWitness(const FatTurtleWitness& w) {
  Json j;
  j["t"] = w.t;
  j["cycle"] = w.cycle;
  j["path"] = w.path;
  j["c"] = w.c;
  j["c_prime"] = w.c_prime;
  return j;
}

Generated Generate(const GenArgs& a) {
  const std::string& f = a.family;
  if (f == "path") return {PathGraph(IntParam(a, 0, "n"))};
  if (f == "cycle") return {Cycle(IntParam(a, 0, "n"))};
  if (f == "complete") return {Complete(IntParam(a, 0, "n"))};
  if (f == "star") return {Star(IntParam(a, 0, "leaves"))};
  if (f == "grid") return {Grid(IntParam(a, 0, "width"), IntParam(a, 1, "height"))};
  if (f == "random") {
    Json w;
    w["seed"] = a.seed;
    return {RandomConnected(IntParam(a, 0, "n"), DoubleParam(a, 1, "p"), a.seed),
            w};
  }
  if (f == "tree") {
    Json w;
    w["seed"] = a.seed;
    return {RandomTree(IntParam(a, 0, "n"), a.seed), w};
  }
  const bool glued = f.rfind("glued-", 0) == 0;
  const std::string base = glued ? f.substr(6) : f;
  if (base == "x" || base == "y" || base == "z" || base == "w") {
    const int k = IntParam(a, 0, "k");
    if (glued && base == "w") {
      const WCover wc = WCover3kPlus1(k);
      Json w = ApexWitness(wc.graph);
      w["cover"] = ToJson(wc.cover);
      return {wc.graph.graph, w};
    }
    ApexGraph g = base == "x"   ? XGraph(k)
                  : base == "y" ? YGraph(k)
                  : base == "z" ? ZGraph(k, a.z_clique_all)
                                : WGraph(k);
    if (glued) g = Glue(g, g);
    return {g.graph, ApexWitness(g)};
  }
  if (f == "theta" || f == "prism" || f == "pyramid") {
    const int t = IntParam(a, 0, "t");
    const GeneratedConfig c = f == "theta"   ? ThetaGraph(t)
                              : f == "prism" ? PrismGraph(t)
                                             : PyramidGraph(t);
    return {c.graph, ConfigWitness(c.config)};
  }
  if (f == "turtle") {
    FatTurtleSpec spec;
    spec.t = IntParam(a, 0, "t");
    spec.u_attach = AttachParam(a, 1);
    spec.v_attach = AttachParam(a, 2);
    const int gap = std::max(spec.t, 2);
    spec.gap_c_prime = a.params.size() > 3 ? IntParam(a, 3, "gap_c_prime") : gap;
    spec.gap_c = a.params.size() > 4 ? IntParam(a, 4, "gap_c") : gap;
    spec.path_len = a.params.size() > 5 ? IntParam(a, 5, "path_len") : spec.t;
    const GeneratedTurtle turtle = FatTurtle(spec);
    return {turtle.graph, TurtleWitness(turtle.witness)};
  }
  if (f == "figure2") {
    const GeneratedTurtle turtle = Figure2Turtle();
    return {turtle.graph, TurtleWitness(turtle.witness)};
  }
  throw Error(ErrorCode::kInvalidParam, "unknown family '" + f + "'");
}

int RunGen(const GenArgs& args) {
  const auto start = Clock::now();
  const Generated gen = Generate(args);
  const std::string edges = WriteEdgeList(gen.graph, g_opts.one_based);
  if (!args.output.empty()) {
    WriteFile(args.output, edges);
    if (args.witness) {
      WriteFile(args.output + ".witness.json", gen.witness.dump(2) + "\n");
    }
  }
  RunReport report{"gen " + args.family, gen.graph, Json::object(),
                   std::nullopt};
  report.results["family"] = args.family;
  report.results["params"] = args.params;
  if (args.witness) report.results["witness"] = gen.witness;
  if (args.output.empty() && !g_opts.json) {
    std::cout << edges;
    if (args.witness) std::cerr << gen.witness.dump(2) << "\n";
    return kOk;
  }
  if (args.output.empty()) report.results["edges"] = gen.graph.Edges();
  Emit(std::move(report), MillisSince(start),
       "wrote " + args.output + " (n=" +
           std::to_string(gen.graph.num_vertices()) +
           ", m=" + std::to_string(gen.graph.num_edges()) + ")\n");
  return kOk;
}

// ---- verify -------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  int trials = -1;
  uint64_t seed = 1;
  std::vector<int> ks;
  int max_n = 6;
  std::string counterexample_dir;
};

int RunVerify(const VerifyArgs& args) {
  const auto start = Clock::now();
  SuiteOptions options;
  options.trials = args.trials;
  options.seed = args.seed;
  options.ks = args.ks;
  options.max_n = args.max_n;
  options.threads = g_opts.threads;
  const SuiteResult result = RunSuite(args.suite, options);
  if (!args.counterexample_dir.empty()) {
    std::filesystem::create_directories(args.counterexample_dir);
    for (size_t i = 0; i < result.counterexamples.size(); ++i) {
      const auto& ce = result.counterexamples[i];
      const std::string path = args.counterexample_dir + "/" + args.suite +
                               "-" + std::to_string(i) + ".edges";
      WriteFile(path, "# " + ce.label + "\n" +
                          WriteEdgeList(ce.graph, g_opts.one_based));
    }
  }
  RunReport report{"verify " + args.suite, std::nullopt, ToJson(result),
                   std::nullopt};
  Emit(std::move(report), MillisSince(start), FormatTable(result));
  return result.passed ? kOk : kFail;
}

// ---- bench --------------------------------------------------------------

struct BenchArgs {
  std::vector<std::string> target;
  uint64_t seed = 1;
  int repeat = 1;
};

int RunBench(const BenchArgs& args) {
  Graph g;
  if (std::filesystem::is_regular_file(args.target.at(0))) {
    g = LoadGraph(args.target[0]);
  } else {
    GenArgs gen;
    gen.family = args.target[0];
    gen.params.assign(args.target.begin() + 1, args.target.end());
    gen.seed = args.seed;
    g = Generate(gen).graph;
  }
  double best = 0;
  ComplexityReport cr;
  for (int i = 0; i < std::max(1, args.repeat); ++i) {
    const auto start = Clock::now();
    cr = ComputeIpco(g, g_opts.threads);
    const double ms = MillisSince(start);
    best = i == 0 ? ms : std::min(best, ms);
  }
  RunReport report{"bench", g, Json::object(), std::nullopt};
  report.results["ipco"] = cr.value;
  report.results["best_root"] = cr.best_root;
  std::ostringstream text;
  text << "n=" << g.num_vertices() << " m=" << g.num_edges()
       << " ipco=" << cr.value << " time=" << best << " ms\n";
  Emit(std::move(report), best, text.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isometric path complexity toolkit"};
  app.require_subcommand(1);
  app.add_flag("--json", g_opts.json, "Print a JSON run report");
  app.add_option("--threads", g_opts.threads,
                 "Worker threads (default IPC_LAB_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--one-based", g_opts.one_based, "Vertex ids start at 1");
  app.add_flag("--no-timing", g_opts.no_timing,
               "Leave timing_ms out of JSON reports");

  IpcoArgs ipco;
  auto* ipco_cmd = app.add_subcommand("ipco", "Isometric path complexity");
  ipco_cmd->add_option("graph", ipco.graph, "Edge-list file")->required();
  ipco_cmd->add_option("--root", ipco.root, "Only this root");
  ipco_cmd->add_flag("--per-component", ipco.per_component,
                     "Accept disconnected input; max over components");
  ipco_cmd->add_flag("--witness", ipco.witness, "Include a witness path");

  CoverArgs cover;
  auto* cover_cmd = app.add_subcommand("cover", "Isometric path cover");
  cover_cmd->add_option("graph", cover.graph, "Edge-list file")->required();
  cover_cmd->add_option("--mode", cover.mode, "approx | rooted <r> | exact")
      ->expected(1, 2)
      ->required();
  cover_cmd->add_option("-o,--output", cover.output, "Write the cover here");
  cover_cmd->add_option("--exact-limit", cover.exact_limit,
                        "Vertex cap for exact mode");

  HyperbolicityArgs hyp;
  auto* hyp_cmd = app.add_subcommand("hyperbolicity", "Gromov hyperbolicity");
  hyp_cmd->add_option("graph", hyp.graph, "Edge-list file")->required();
  hyp_cmd->add_flag("--force", hyp.force, "Ignore the vertex cap");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph family");
  gen_cmd->add_option("family", gen.family,
                      "path cycle complete star grid random tree x y z w "
                      "glued-x glued-y glued-z glued-w theta prism pyramid "
                      "turtle figure2")
      ->required();
  gen_cmd->add_option("params", gen.params, "Family parameters");
  gen_cmd->add_option("--seed", gen.seed, "Seed for random families");
  gen_cmd->add_option("-o,--output", gen.output, "Output file");
  gen_cmd->add_flag("--witness", gen.witness,
                    "Emit the structural witness (FILE.witness.json with -o)");
  gen_cmd->add_flag("--z-clique-all", gen.z_clique_all,
                    "Z_k clique over all k+1 apex neighbors");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  verify_cmd->add_option("suite", verify.suite)
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kSuiteNames),
                                                     std::end(kSuiteNames))));
  verify_cmd->add_option("--trials", verify.trials, "Random trials");
  verify_cmd->add_option("--seed", verify.seed, "Seed");
  verify_cmd->add_option("--k", verify.ks, "k values for lower-bounds");
  verify_cmd->add_option("--max-n", verify.max_n,
                         "Exhaustive corpus size (default 6)");
  verify_cmd->add_option("--counterexample-dir", verify.counterexample_dir,
                         "Write failing graphs here");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time ipco");
  bench_cmd->add_option("target", bench.target, "Graph file or family params")
      ->required();
  bench_cmd->add_option("--seed", bench.seed, "Seed for random families");
  bench_cmd->add_option("--repeat", bench.repeat, "Report the fastest of N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*ipco_cmd) return RunIpco(ipco);
    if (*cover_cmd) return RunCover(cover);
    if (*hyp_cmd) return RunHyperbolicity(hyp);
    if (*gen_cmd) return RunGen(gen);
    if (*verify_cmd) return RunVerify(verify);
    if (*bench_cmd) return RunBench(bench);
  } catch (const Error& e) {
    std::cerr << "error: " << ErrorCodeName(e.code()) << ": " << e.what()
              << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  return kOk;
}
