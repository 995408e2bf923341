#ifndef IPCLAB_GRAPH_H_
#define IPCLAB_GRAPH_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ipclab/error.h"

namespace ipclab {

using Vertex = int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Distance sentinel for vertices in another component. Never add to it.
inline constexpr int32_t kUnreachable = -1;

// Immutable simple undirected graph stored in CSR form. Vertex ids are
// 0..n-1, neighbor lists are sorted ascending.
class Graph {
 public:
  Graph() = default;

  // Throws Error{kSelfLoop | kDuplicateEdge | kIdOutOfRange}. The `line`
  // of a thrown error is the 1-based index of the offending edge.
  static Graph FromEdges(int num_vertices, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(offsets_.size()) - 1; }
  int64_t num_edges() const {
    return static_cast<int64_t>(adjacency_.size()) / 2;
  }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool HasEdge(Vertex u, Vertex v) const;

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> Edges() const;

  // 64-bit FNV-1a fingerprint over n and the sorted edge list.
  uint64_t Fingerprint() const;

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<int32_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

struct DistanceRow {
  Vertex source = 0;
  std::vector<int32_t> dist;
};

// Dense n x n hop-distance matrix.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n)
      : n_(n), data_(static_cast<size_t>(n) * n, kUnreachable) {}

  int size() const { return n_; }
  int32_t at(Vertex u, Vertex v) const {
    return data_[static_cast<size_t>(u) * n_ + v];
  }
  std::span<const int32_t> row(Vertex u) const {
    return {data_.data() + static_cast<size_t>(u) * n_,
            static_cast<size_t>(n_)};
  }
  std::span<int32_t> mutable_row(Vertex u) {
    return {data_.data() + static_cast<size_t>(u) * n_,
            static_cast<size_t>(n_)};
  }

 private:
  int n_ = 0;
  std::vector<int32_t> data_;
};

struct ParseOptions {
  bool one_based = false;
};

// Parses the edge-list format: optional `p <n> <m>` header, one `<u> <v>`
// pair per line, `#` comments. Without a header every id in [0, max] must
// appear in some edge.
Graph ParseEdgeList(std::string_view text, const ParseOptions& options = {});
Graph ReadEdgeListFile(const std::string& path,
                       const ParseOptions& options = {});
std::string WriteEdgeList(const Graph& g, bool one_based = false);

DistanceRow BfsDistances(const Graph& g, Vertex source);
// Fills `dist` (size n) and returns the vertices in BFS order.
std::vector<Vertex> BfsInto(const Graph& g, Vertex source,
                            std::span<int32_t> dist);
DistanceMatrix AllPairsDistances(const Graph& g, int threads = 1);

bool IsConnected(const Graph& g);
// Component id per vertex, numbered by smallest member.
std::vector<int> ConnectedComponents(const Graph& g, int* num_components);
// Subgraph induced by `vertices` (sorted ascending), relabeled 0..k-1 in
// that order.
Graph InducedSubgraph(const Graph& g, std::span<const Vertex> vertices);

// Throws kNotAPath when `seq` is empty, repeats a vertex, or has a
// non-adjacent consecutive pair.
bool IsIsometricPath(const Graph& g, const DistanceMatrix& dm,
                     std::span<const Vertex> seq);

// Consecutive vertices adjacent, no repeats, no chords.
bool IsInducedPath(const Graph& g, std::span<const Vertex> seq);

// A shortest path from `from` to `to`, smallest-id neighbor first.
std::vector<Vertex> ShortestPath(const Graph& g, const DistanceMatrix& dm,
                                 Vertex from, Vertex to);

}  // namespace ipclab

#endif  // IPCLAB_GRAPH_H_
