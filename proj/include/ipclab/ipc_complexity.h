#ifndef IPCLAB_IPC_COMPLEXITY_H_
#define IPCLAB_IPC_COMPLEXITY_H_

#include <cstdint>
#include <span>
#include <vector>

#include "ipclab/graph.h"

namespace ipclab {

// Dynamic-programming table for one (root, source) pair. For a vertex v
// the values summarize the isometric (source, v)-paths, split by whether
// the predecessor of v on the path is one level closer to the root
// (`down`), on the same level (`flat`) or one level farther (`up`):
//
//   gamma_*  max over such paths P of the fewest root-anchored isometric
//            paths covering V(P)
//   beta_*   the same for V(P) minus v
//   gamma    max of the three gamma_* values
//
// A value is 0 exactly when no path of that kind exists. At the source all
// gammas are 1 and both betas are 0.
struct GammaTable {
  Vertex root = 0;
  Vertex source = 0;
  std::vector<int32_t> level;        // distance from root
  std::vector<int32_t> source_dist;  // distance from source
  std::vector<int32_t> gamma;
  std::vector<int32_t> gamma_down;
  std::vector<int32_t> gamma_flat;
  std::vector<int32_t> gamma_up;
  std::vector<int32_t> beta_down;
  std::vector<int32_t> beta_up;
};

// Fills the table layer by layer in increasing distance from the source.
// The predecessors of v are its neighbors u with
// source_dist[u] = source_dist[v] - 1. O(n + m).
// Throws kDisconnected if either row has an unreachable entry.
GammaTable ComputeGammaTable(const Graph& g, std::span<const int32_t> root_dist,
                             std::span<const int32_t> source_dist,
                             Vertex root, Vertex source);
GammaTable ComputeGammaTable(const Graph& g, const DistanceMatrix& dm,
                             Vertex root, Vertex source);

// An isometric (source, v)-path whose vertex set needs exactly gamma[v]
// root-anchored paths. Backtracks the arg-max branch (up, flat, down) and
// the smallest-id predecessor on ties. Throws kUnreachable.
std::vector<Vertex> WitnessPath(const Graph& g, const GammaTable& table,
                                Vertex v);

struct RootComplexity {
  Vertex root = 0;
  int32_t value = 0;
  Vertex source = 0;    // first (source, terminal) pair attaining value
  Vertex terminal = 0;
};

// max over sources x and vertices v of gamma^root(x, v). O(n m).
RootComplexity IpcoForRoot(const Graph& g, const DistanceMatrix& dm,
                           Vertex root);
RootComplexity IpcoForRoot(const Graph& g, Vertex root);

struct ComplexityWitness {
  Vertex root = 0;
  Vertex source = 0;
  Vertex terminal = 0;
  std::vector<Vertex> path;
};

struct ComplexityReport {
  int32_t value = 0;
  Vertex best_root = 0;
  std::vector<int32_t> per_root;  // indexed by root id
  ComplexityWitness witness;
};

// min over roots of IpcoForRoot, smallest root on ties. The witness path is
// checked to be isometric with a maximum antichain of size `value`;
// failure throws kCertification. Throws kDisconnected for disconnected
// input and kInvalidParam for the empty graph. Result is independent of
// `threads` (0 = default count).
ComplexityReport ComputeIpco(const Graph& g, int threads = 0);
ComplexityReport ComputeIpco(const Graph& g, const DistanceMatrix& dm,
                             int threads = 0);

struct ComponentComplexity {
  std::vector<Vertex> vertices;  // original ids, ascending
  ComplexityReport report;       // in component-local ids
};

// Extension for disconnected input: ipco per connected component, overall
// value is the maximum over components.
struct PerComponentReport {
  int32_t value = 0;
  std::vector<ComponentComplexity> components;
};
PerComponentReport ComputeIpcoPerComponent(const Graph& g, int threads = 0);

}  // namespace ipclab

#endif  // IPCLAB_IPC_COMPLEXITY_H_
