#include "ipclab/report.h"

#include <cinttypes>
#include <cstdio>

namespace ipclab {

using Json = nlohmann::ordered_json;

std::string FingerprintHex(uint64_t fingerprint) {
  char buf[19];
  std::snprintf(buf, sizeof(buf), "0x%016" PRIx64, fingerprint);
  return buf;
}

Json GraphDigest(const Graph& g) {
  Json j;
  j["n"] = g.num_vertices();
  j["m"] = g.num_edges();
  j["fingerprint"] = FingerprintHex(g.Fingerprint());
  return j;
}

Json ToJson(const ComplexityReport& report) {
  Json j;
  j["ipco"] = report.value;
  j["best_root"] = report.best_root;
  j["per_root"] = report.per_root;
  Json w;
  w["root"] = report.witness.root;
  w["source"] = report.witness.source;
  w["terminal"] = report.witness.terminal;
  w["path"] = report.witness.path;
  j["witness"] = std::move(w);
  return j;
}

Json ToJson(const PerComponentReport& report) {
  Json j;
  j["ipco"] = report.value;
  Json comps = Json::array();
  for (const auto& c : report.components) {
    Json entry;
    entry["vertices"] = c.vertices;
    entry["report"] = ToJson(c.report);
    comps.push_back(std::move(entry));
  }
  j["components"] = std::move(comps);
  return j;
}

Json ToJson(const PathCover& cover) {
  Json j;
  j["kind"] = std::string(CoverKindName(cover.kind));
  j["root"] = cover.root ? Json(*cover.root) : Json(nullptr);
  j["size"] = cover.size();
  j["paths"] = cover.paths;
  return j;
}

Json ToJson(const CoverValidation& validation) {
  Json j;
  j["ok"] = validation.ok;
  std::vector<int> iso(validation.path_isometric.begin(),
                       validation.path_isometric.end());
  int bad = 0;
  for (int x : iso) bad += x ? 0 : 1;
  j["non_isometric_paths"] = bad;
  j["uncovered"] = validation.uncovered;
  j["problems"] = validation.problems;
  return j;
}

Json ToJson(const RunReport& report) {
  Json j;
  j["command"] = report.command;
  j["input"] = report.input ? GraphDigest(*report.input) : Json(nullptr);
  j["results"] = report.results;
  if (report.timing_ms) j["timing_ms"] = *report.timing_ms;
  j["version"] = kVersion;
  return j;
}

}  // namespace ipclab
