#ifndef IPCLAB_BFS_DAG_H_
#define IPCLAB_BFS_DAG_H_

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ipclab/graph.h"

namespace ipclab {

// Transitive-reflexive closure of a BfsDag as one bitset row per vertex.
class ReachabilityClosure {
 public:
  ReachabilityClosure() = default;
  ReachabilityClosure(int n, std::vector<uint64_t> bits)
      : n_(n), words_((n + 63) / 64), bits_(std::move(bits)) {}

  // True iff a directed path from -> ... -> to exists (from == to included).
  bool Reaches(Vertex from, Vertex to) const {
    return (bits_[static_cast<size_t>(from) * words_ + (to >> 6)] >>
            (to & 63)) & 1u;
  }
  bool Comparable(Vertex a, Vertex b) const {
    return Reaches(a, b) || Reaches(b, a);
  }
  int size() const { return n_; }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
};

// The BFS DAG of a root r: same-level edges dropped, every other edge xy
// with level[x] = level[y] - 1 oriented y -> x (toward the root).
class BfsDag {
 public:
  // Throws kDisconnected when r does not reach every vertex.
  static BfsDag Build(const Graph& g, Vertex root);

  Vertex root() const { return root_; }
  int num_vertices() const { return static_cast<int>(level_.size()); }
  int64_t num_arcs() const { return num_arcs_; }
  int32_t level(Vertex v) const { return level_[v]; }
  const std::vector<int32_t>& levels() const { return level_; }

  // Arcs v -> w (w one level closer to the root), ascending.
  std::span<const Vertex> out(Vertex v) const { return out_[v]; }
  // Arcs w -> v (w one level farther), ascending.
  std::span<const Vertex> in(Vertex v) const { return in_[v]; }

  // Computed on first use, then shared read-only. Safe to call concurrently.
  const ReachabilityClosure& Closure() const;

  // Vertices by ascending level, ties by id.
  std::vector<Vertex> TopologicalOrder() const;

 private:
  Vertex root_ = 0;
  std::vector<int32_t> level_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  int64_t num_arcs_ = 0;

  struct ClosureCache {
    std::once_flag once;
    ReachabilityClosure closure;
  };
  std::shared_ptr<ClosureCache> cache_ = std::make_shared<ClosureCache>();
};

// Pairs (y, x) with y ->* x, optionally restricted to endpoints inside
// `restrict_to` (the connecting paths may leave it). Sorted, includes (v, v).
std::vector<std::pair<Vertex, Vertex>> ReachabilityRelation(
    const BfsDag& dag, std::optional<std::span<const Vertex>> restrict_to = {});

bool IsAntichain(const BfsDag& dag, std::span<const Vertex> s);

struct AntichainWitness {
  std::vector<Vertex> vertices;  // ascending
  Vertex root = 0;
  std::optional<std::vector<Vertex>> context;  // path it was found in
};

// Maximum antichain of the reachability order restricted to `s` (duplicates
// ignored), from a König cover of the strict comparability matching. Its
// size is |s| minus the matching size.
AntichainWitness MaxAntichain(const BfsDag& dag, std::span<const Vertex> s);

// Minimum chain partition of `s`; each chain is listed from the vertex
// closest to the root outward. The count equals |MaxAntichain(s)|.
std::vector<std::vector<Vertex>> MinChainPartition(const BfsDag& dag,
                                                   std::span<const Vertex> s);

// For an isometric path `p`: whether one root-anchored isometric path
// contains all of p, i.e. levels step by exactly +1 along p once it is
// oriented so its first level is not larger than its last.
// Throws kNotIsometric (or kNotAPath) for invalid input.
bool SingleRootedCoverable(const BfsDag& dag, const Graph& g,
                           const DistanceMatrix& dm,
                           std::span<const Vertex> p);

// A directed path from `from` down to `to` in the dag (from ->* to).
std::vector<Vertex> DirectedPath(const BfsDag& dag, Vertex from, Vertex to);

}  // namespace ipclab

#endif  // IPCLAB_BFS_DAG_H_
