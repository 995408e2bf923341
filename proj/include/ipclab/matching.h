#ifndef IPCLAB_MATCHING_H_
#define IPCLAB_MATCHING_H_

#include <vector>

namespace ipclab {

inline constexpr int kUnmatched = -1;

struct BipartiteMatching {
  std::vector<int> mate_left;   // right vertex matched to each left vertex
  std::vector<int> mate_right;  // left vertex matched to each right vertex
  int size = 0;
};

// Hopcroft-Karp. `left_adj[l]` lists right vertices in [0, num_right).
// Deterministic: phases scan left vertices in ascending id and adjacency in
// the given order.
BipartiteMatching MaximumBipartiteMatching(
    int num_right, const std::vector<std::vector<int>>& left_adj);

struct VertexCover {
  std::vector<bool> left;
  std::vector<bool> right;
};

// Minimum vertex cover derived from a maximum matching (König). Let Z be
// the vertices reachable from unmatched left vertices by alternating paths;
// the cover is (L \ Z) + (R & Z).
VertexCover KonigCover(int num_right,
                       const std::vector<std::vector<int>>& left_adj,
                       const BipartiteMatching& matching);

}  // namespace ipclab

#endif  // IPCLAB_MATCHING_H_
