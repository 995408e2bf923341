#ifndef IPCLAB_ORACLE_H_
#define IPCLAB_ORACLE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "ipclab/bfs_dag.h"
#include "ipclab/graph.h"
#include "ipclab/path_cover.h"

// Exhaustive ground truth for small graphs. Nothing here calls the
// dynamic program or the matching code.
namespace ipclab::oracle {

inline constexpr int64_t kDefaultPathCap = 1'000'000;
inline constexpr int kDefaultExactCoverLimit = 12;
inline constexpr int kMaxBruteForceSet = 20;

struct IsometricPathSet {
  std::vector<std::vector<Vertex>> paths;  // first id < last id
  std::vector<bool> maximal;
  bool truncated = false;
};

// Every isometric path with at least one edge, once, oriented so that the
// first vertex has the smaller id. Stops and sets `truncated` after `cap`.
IsometricPathSet EnumerateIsometricPaths(const Graph& g,
                                         const DistanceMatrix& dm,
                                         int64_t cap = kDefaultPathCap);

// Largest antichain inside `s` by subset enumeration (|s| <= 20).
int BruteForceMaxAntichain(const ReachabilityClosure& closure,
                           std::span<const Vertex> s);

// max over maximal isometric paths P of the largest antichain in V(P).
// Throws kTruncated if the enumeration cap is hit.
int IpcorBruteForce(const Graph& g, Vertex root,
                    int64_t cap = kDefaultPathCap);
int IpcoBruteForce(const Graph& g, int64_t cap = kDefaultPathCap);

// Fewest root-anchored isometric paths covering `s`, by exhaustive search
// over partitions of s into chains. Throws kTooLarge for |s| > 20.
int MinRootedCoverOfSetBruteForce(const Graph& g, Vertex root,
                                  std::span<const Vertex> s);
int MinRootedCoverOfSetBruteForce(const ReachabilityClosure& closure,
                                  std::span<const Vertex> s);

// Optimal isometric path cover by branch and bound over maximal isometric
// paths. Throws kTooLarge when n > limit.
PathCover ExactMinIsometricPathCover(const Graph& g,
                                     int limit = kDefaultExactCoverLimit);

}  // namespace ipclab::oracle

#endif  // IPCLAB_ORACLE_H_
