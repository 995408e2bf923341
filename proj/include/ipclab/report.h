#ifndef IPCLAB_REPORT_H_
#define IPCLAB_REPORT_H_

#include <optional>
#include <string>

#include "json.hpp"

#include "ipclab/graph.h"
#include "ipclab/ipc_complexity.h"
#include "ipclab/path_cover.h"

namespace ipclab {

inline constexpr const char* kVersion = "0.1.0";

// "0x" followed by 16 lowercase hex digits.
std::string FingerprintHex(uint64_t fingerprint);

nlohmann::ordered_json GraphDigest(const Graph& g);
nlohmann::ordered_json ToJson(const ComplexityReport& report);
nlohmann::ordered_json ToJson(const PerComponentReport& report);
nlohmann::ordered_json ToJson(const PathCover& cover);
nlohmann::ordered_json ToJson(const CoverValidation& validation);

// Machine-readable result of one CLI command. Key order is fixed; the only
// field that varies between identical runs is timing_ms, which is left out
// when `timing_ms` is empty.
struct RunReport {
  std::string command;
  std::optional<Graph> input;
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::optional<double> timing_ms;
};

nlohmann::ordered_json ToJson(const RunReport& report);

}  // namespace ipclab

#endif  // IPCLAB_REPORT_H_
