#ifndef IPCLAB_VERIFY_H_
#define IPCLAB_VERIFY_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ipclab/graph.h"

namespace ipclab {

// Property suites run by `ipclab verify` and by the acceptance binary.
inline constexpr std::string_view kSuiteNames[] = {
    "oracle-equivalence", "hyperbolicity-bound", "lower-bounds",
    "duality",            "approx-ratio",        "turtle"};

struct SuiteOptions {
  int trials = -1;        // -1: the suite's default
  uint64_t seed = 1;
  int max_n = 6;          // exhaustive range of the graph corpus
  std::vector<int> ks;    // lower-bounds; empty means {4, 5, 6}
  int threads = 0;        // 0: DefaultThreadCount()
  int max_counterexamples = 5;
};

struct CheckRow {
  std::string name;
  bool passed = true;
  int64_t checked = 0;
  int64_t failures = 0;
  std::string detail;  // value summary or first failure
};

struct Counterexample {
  std::string label;
  Graph graph;
};

struct SuiteResult {
  std::string suite;
  bool passed = true;
  std::vector<CheckRow> rows;
  std::vector<Counterexample> counterexamples;
};

// Throws kInvalidParam for an unknown suite name. The result depends only
// on the options other than `threads`.
SuiteResult RunSuite(std::string_view suite, const SuiteOptions& options);

// The graph corpus shared by oracle-equivalence and duality: every
// connected labeled graph on 1..max_n vertices, then `random_trials`
// seeded random connected graphs with 7 <= n <= 9.
int CorpusSize(int max_n, int random_trials);
// Returns false when item `index` is a disconnected labeled graph.
bool CorpusGraph(int max_n, int random_trials, uint64_t seed, int index,
                 Graph* out, std::string* label);

nlohmann::ordered_json ToJson(const SuiteResult& result);
std::string FormatTable(const SuiteResult& result);

}  // namespace ipclab

#endif  // IPCLAB_VERIFY_H_
