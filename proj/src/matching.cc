#include "ipclab/matching.h"

#include <limits>
#include <vector>

namespace ipclab {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

class HopcroftKarp {
 public:
  HopcroftKarp(int num_right, const std::vector<std::vector<int>>& adj)
      : adj_(adj),
        mate_left_(adj.size(), kUnmatched),
        mate_right_(num_right, kUnmatched),
        layer_(adj.size()),
        next_edge_(adj.size()) {}

  BipartiteMatching Run() {
    int size = 0;
    while (BuildLayers()) {
      for (size_t l = 0; l < adj_.size(); ++l) next_edge_[l] = 0;
      for (int l = 0; l < static_cast<int>(adj_.size()); ++l) {
        if (mate_left_[l] == kUnmatched && Augment(l)) ++size;
      }
    }
    return {std::move(mate_left_), std::move(mate_right_), size};
  }

 private:
  // BFS from free left vertices over alternating edges. Returns whether
  // some free right vertex is reachable.
  bool BuildLayers() {
    std::vector<int> queue;
    for (int l = 0; l < static_cast<int>(adj_.size()); ++l) {
      if (mate_left_[l] == kUnmatched) {
        layer_[l] = 0;
        queue.push_back(l);
      } else {
        layer_[l] = kInf;
      }
    }
    bool found = false;
    for (size_t head = 0; head < queue.size(); ++head) {
      int l = queue[head];
      for (int r : adj_[l]) {
        int next = mate_right_[r];
        if (next == kUnmatched) {
          found = true;
        } else if (layer_[next] == kInf) {
          layer_[next] = layer_[l] + 1;
          queue.push_back(next);
        }
      }
    }
    return found;
  }

  // Iterative DFS along the layer structure.
  bool Augment(int start) {
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int l = stack.back();
      bool advanced = false;
      while (next_edge_[l] < adj_[l].size()) {
        int r = adj_[l][next_edge_[l]];
        int next = mate_right_[r];
        if (next == kUnmatched) {
          // Flip the alternating path recorded on the stack.
          for (int i = static_cast<int>(stack.size()) - 1; i >= 0; --i) {
            int left = stack[i];
            int right = adj_[left][next_edge_[left]];
            mate_right_[right] = left;
            mate_left_[left] = right;
          }
          return true;
        }
        if (layer_[next] == layer_[l] + 1) {
          stack.push_back(next);
          advanced = true;
          break;
        }
        ++next_edge_[l];
      }
      if (!advanced) {
        layer_[l] = kInf;
        stack.pop_back();
        if (!stack.empty()) ++next_edge_[stack.back()];
      }
    }
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  std::vector<int> mate_left_;
  std::vector<int> mate_right_;
  std::vector<int> layer_;
  std::vector<size_t> next_edge_;
};

}  // namespace

BipartiteMatching MaximumBipartiteMatching(
    int num_right, const std::vector<std::vector<int>>& left_adj) {
  return HopcroftKarp(num_right, left_adj).Run();
}

VertexCover KonigCover(int num_right,
                       const std::vector<std::vector<int>>& left_adj,
                       const BipartiteMatching& matching) {
  const int num_left = static_cast<int>(left_adj.size());
  std::vector<bool> left_in_z(num_left, false);
  std::vector<bool> right_in_z(num_right, false);
  std::vector<int> stack;
  for (int l = 0; l < num_left; ++l) {
    if (matching.mate_left[l] == kUnmatched) {
      left_in_z[l] = true;
      stack.push_back(l);
    }
  }
  while (!stack.empty()) {
    int l = stack.back();
    stack.pop_back();
    for (int r : left_adj[l]) {
      if (right_in_z[r]) continue;
      right_in_z[r] = true;
      int next = matching.mate_right[r];
      if (next != kUnmatched && !left_in_z[next]) {
        left_in_z[next] = true;
        stack.push_back(next);
      }
    }
  }
  VertexCover cover;
  cover.left.resize(num_left);
  cover.right = right_in_z;
  for (int l = 0; l < num_left; ++l) cover.left[l] = !left_in_z[l];
  return cover;
}

}  // namespace ipclab
