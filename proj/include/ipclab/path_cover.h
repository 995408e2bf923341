#ifndef IPCLAB_PATH_COVER_H_
#define IPCLAB_PATH_COVER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ipclab/bfs_dag.h"
#include "ipclab/graph.h"

namespace ipclab {

enum class CoverKind { kDagDisjoint, kRooted, kExplicit };

std::string_view CoverKindName(CoverKind kind);

struct PathCover {
  std::vector<std::vector<Vertex>> paths;
  std::optional<Vertex> root;
  CoverKind kind = CoverKind::kExplicit;

  int size() const { return static_cast<int>(paths.size()); }
};

// Minimum vertex-disjoint directed path cover of the dag: n minus a maximum
// matching of tails to heads. Paths follow arcs toward the root.
PathCover MinDagPathCover(const BfsDag& dag);

// The min-over-roots dag path cover; ties go to the smallest root. Every
// path is re-checked as isometric (kCertification on failure).
PathCover ApproxIsometricPathCover(const Graph& g, int threads = 0);

// Fewest root-anchored isometric paths covering V(G): a minimum chain
// partition of the whole reachability order, each chain extended down to
// the root. Paths start at the root.
PathCover MinRootedCover(const Graph& g, Vertex root);

struct CoverValidation {
  bool ok = true;
  std::vector<bool> path_isometric;
  std::vector<Vertex> uncovered;
  std::vector<std::string> problems;
};

CoverValidation ValidateCover(const Graph& g, const DistanceMatrix& dm,
                              const PathCover& cover);

// One path per line, ids space-separated; `# root <r>` and `# kind <k>`
// header comments.
std::string WriteCover(const PathCover& cover, bool one_based = false);
PathCover ParseCover(std::string_view text, bool one_based = false);

}  // namespace ipclab

#endif  // IPCLAB_PATH_COVER_H_
