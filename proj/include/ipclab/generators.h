#ifndef IPCLAB_GENERATORS_H_
#define IPCLAB_GENERATORS_H_

#include <cstdint>

#include "ipclab/graph.h"
#include "ipclab/path_cover.h"

namespace ipclab {

// SplitMix64; fixed so seeded suites reproduce across implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t Next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, 1) with 53 random bits.
  double NextDouble() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }
  // Uniform in [0, bound), bound > 0.
  uint64_t NextBelow(uint64_t bound) { return Next() % bound; }

 private:
  uint64_t state_;
};

// Labeling: vertices 0..n-1 along the path / around the cycle.
Graph PathGraph(int n);
Graph Cycle(int n);  // n >= 3
Graph Complete(int n);
// K_{1,leaves}: center 0, leaves 1..leaves.
Graph Star(int leaves);
// Vertex (col, row) has id row * width + col.
Graph Grid(int width, int height);
// G(n, p) edges drawn over pairs u < v in lexicographic order from one
// SplitMix64 stream; redrawn from the same stream until connected.
Graph RandomConnected(int n, double edge_prob, uint64_t seed);
// Vertex i > 0 attaches to a uniform earlier vertex.
Graph RandomTree(int n, uint64_t seed);

// Lower-bound families built on k+1 spokes of length k from the apex.
//
// Labeling: apex is 0. Spoke i (0-based, 0 <= i <= k) holds ids
// 1 + i*k .. (i+1)*k ordered outward, so the apex neighbor is 1 + i*k and
// the far end b_i is (i+1)*k. For W_k the k new vertices of gap i
// (between b_i and b_{i+1}) follow the spokes: 1 + (k+1)*k + i*k + j.
struct ApexGraph {
  Graph graph;
  Vertex apex = 0;
  int k = 0;
};

Vertex SpokeVertex(int k, int spoke, int depth);  // depth 1..k
Vertex GapVertex(int k, int gap, int j);          // W_k only

// Rim edges b_i b_{i+1}.
ApexGraph XGraph(int k);
// X_k plus b_i b'_{i+1}, where b'_{i+1} is the neighbor of b_{i+1} on its
// spoke.
ApexGraph YGraph(int k);
// Y_k plus a clique on the apex neighbors of the first k spokes, or of all
// k+1 spokes when `clique_all`.
ApexGraph ZGraph(int k, bool clique_all = false);
// X_k with each rim edge replaced by k parallel 2-paths.
ApexGraph WGraph(int k);

// Identifies the apexes; the second copy's ids follow the first copy's,
// skipping its apex. The result keeps the first apex id.
ApexGraph Glue(const ApexGraph& first, const ApexGraph& second);
Vertex GluedSecondCopyId(const ApexGraph& first, const ApexGraph& second,
                         Vertex v);

struct WCover {
  ApexGraph graph;  // glue(W_k, W_k)
  PathCover cover;
};

// The explicit cover of glued W_k with 3k+1 isometric paths: k+1 paths
// b_i .. apex .. b_i' through both copies, and k zigzags per copy through
// the j-th new vertex of every gap. Each path is checked against BFS
// distances; kCertification if one is not isometric.
WCover WCover3kPlus1(int k);

}  // namespace ipclab

#endif  // IPCLAB_GENERATORS_H_
