#include "ipclab/path_cover.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "ipclab/matching.h"
#include "ipclab/parallel.h"

namespace ipclab {

std::string_view CoverKindName(CoverKind kind) {
  switch (kind) {
    case CoverKind::kDagDisjoint: return "dag_disjoint";
    case CoverKind::kRooted: return "rooted";
    case CoverKind::kExplicit: return "explicit";
  }
  return "explicit";
}

PathCover MinDagPathCover(const BfsDag& dag) {
  const int n = dag.num_vertices();
  std::vector<std::vector<int>> adj(n);
  for (Vertex v = 0; v < n; ++v) {
    adj[v].assign(dag.out(v).begin(), dag.out(v).end());
  }
  const auto matching = MaximumBipartiteMatching(n, adj);

  PathCover cover;
  cover.kind = CoverKind::kDagDisjoint;
  cover.root = dag.root();
  for (Vertex v = 0; v < n; ++v) {
    if (matching.mate_right[v] != kUnmatched) continue;
    std::vector<Vertex> path;
    for (int cur = v; cur != kUnmatched; cur = matching.mate_left[cur]) {
      path.push_back(cur);
    }
    cover.paths.push_back(std::move(path));
  }
  return cover;
}

PathCover ApproxIsometricPathCover(const Graph& g, int threads) {
  const int n = g.num_vertices();
  if (n == 0) throw Error(ErrorCode::kInvalidParam, "empty graph");
  if (!IsConnected(g)) {
    throw Error(ErrorCode::kDisconnected, "graph is not connected");
  }
  std::vector<int> sizes(n);
  ParallelFor(n, threads, [&](int r) {
    sizes[r] = MinDagPathCover(BfsDag::Build(g, r)).size();
  });
  const Vertex best =
      static_cast<Vertex>(std::min_element(sizes.begin(), sizes.end()) -
                          sizes.begin());
  PathCover cover = MinDagPathCover(BfsDag::Build(g, best));

  const DistanceMatrix dm = AllPairsDistances(g, threads);
  for (const auto& path : cover.paths) {
    if (!IsIsometricPath(g, dm, path)) {
      throw Error(ErrorCode::kCertification,
                  "dag path cover produced a non-isometric path");
    }
  }
  return cover;
}

PathCover MinRootedCover(const Graph& g, Vertex root) {
  const BfsDag dag = BfsDag::Build(g, root);
  std::vector<Vertex> all(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) all[v] = v;

  PathCover cover;
  cover.kind = CoverKind::kRooted;
  cover.root = root;
  for (const auto& chain : MinChainPartition(dag, all)) {
    // Chain reads root-side first; stitch dag paths from the far end down
    // to the root, then flip so the path starts at the root.
    std::vector<Vertex> path{chain.back()};
    for (int i = static_cast<int>(chain.size()) - 1; i >= 0; --i) {
      const Vertex to = i > 0 ? chain[i - 1] : root;
      auto step = DirectedPath(dag, path.back(), to);
      path.insert(path.end(), step.begin() + 1, step.end());
    }
    std::reverse(path.begin(), path.end());
    cover.paths.push_back(std::move(path));
  }
  return cover;
}

CoverValidation ValidateCover(const Graph& g, const DistanceMatrix& dm,
                              const PathCover& cover) {
  CoverValidation report;
  const int n = g.num_vertices();
  std::vector<int> hits(n, 0);
  auto fail = [&report](std::string problem) {
    report.ok = false;
    report.problems.push_back(std::move(problem));
  };

  std::vector<int32_t> root_level;
  if (cover.root && *cover.root >= 0 && *cover.root < n) {
    root_level.assign(dm.row(*cover.root).begin(), dm.row(*cover.root).end());
  }

  for (size_t i = 0; i < cover.paths.size(); ++i) {
    const auto& path = cover.paths[i];
    const std::string label = "path " + std::to_string(i);
    bool isometric = false;
    try {
      isometric = IsIsometricPath(g, dm, path);
      if (!isometric) fail(label + " is not isometric");
    } catch (const Error& e) {
      fail(label + ": " + e.what());
    }
    report.path_isometric.push_back(isometric);
    for (Vertex v : path) {
      if (v >= 0 && v < n) ++hits[v];
    }
    if (!isometric) continue;

    if (cover.kind == CoverKind::kRooted &&
        (!cover.root || path.front() != *cover.root)) {
      fail(label + " does not start at the root");
    }
    if (cover.kind == CoverKind::kDagDisjoint) {
      if (root_level.empty()) {
        fail("dag_disjoint cover without a valid root");
      } else {
        for (size_t j = 0; j + 1 < path.size(); ++j) {
          if (root_level[path[j + 1]] != root_level[path[j]] - 1) {
            fail(label + " is not a directed dag path");
            break;
          }
        }
      }
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    if (hits[v] == 0) {
      report.uncovered.push_back(v);
      fail("vertex " + std::to_string(v) + " is not covered");
    }
    if (cover.kind == CoverKind::kDagDisjoint && hits[v] > 1) {
      fail("vertex " + std::to_string(v) + " lies on several disjoint paths");
    }
  }
  return report;
}

std::string WriteCover(const PathCover& cover, bool one_based) {
  const int shift = one_based ? 1 : 0;
  std::ostringstream out;
  out << "# kind " << CoverKindName(cover.kind) << '\n';
  if (cover.root) out << "# root " << *cover.root + shift << '\n';
  for (const auto& path : cover.paths) {
    for (size_t i = 0; i < path.size(); ++i) {
      if (i) out << ' ';
      out << path[i] + shift;
    }
    out << '\n';
  }
  return out.str();
}

PathCover ParseCover(std::string_view text, bool one_based) {
  const int shift = one_based ? 1 : 0;
  PathCover cover;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first[0] == '#') {
      std::string key, value;
      if (first == "#") {
        fields >> key >> value;
      } else {
        key = first.substr(1);
        fields >> value;
      }
      if (key == "root") {
        cover.root = std::stoi(value) - shift;
      } else if (key == "kind") {
        if (value == "dag_disjoint") cover.kind = CoverKind::kDagDisjoint;
        else if (value == "rooted") cover.kind = CoverKind::kRooted;
        else cover.kind = CoverKind::kExplicit;
      }
      continue;
    }
    std::vector<Vertex> path;
    std::string token = first;
    do {
      int value = 0;
      auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw Error(ErrorCode::kMalformedLine,
                    "line " + std::to_string(line_no) + ": bad vertex id '" +
                        token + "'",
                    line_no);
      }
      path.push_back(value - shift);
    } while (fields >> token);
    cover.paths.push_back(std::move(path));
  }
  return cover;
}

}  // namespace ipclab
