#include "ipclab/generators.h"

#include <string>

namespace ipclab {

namespace {

void Require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorCode::kInvalidParam, message);
}

void RequireApexK(int k) {
  Require(k >= 4, "lower-bound families need k >= 4, got " +
                      std::to_string(k));
}

}  // namespace

Graph PathGraph(int n) {
  Require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::FromEdges(n, edges);
}

Graph Cycle(int n) {
  Require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::FromEdges(n, edges);
}

Graph Complete(int n) {
  Require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::FromEdges(n, edges);
}

Graph Star(int leaves) {
  Require(leaves >= 0, "star needs leaves >= 0");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::FromEdges(leaves + 1, edges);
}

Graph Grid(int width, int height) {
  Require(width >= 1 && height >= 1, "grid needs positive dimensions");
  std::vector<Edge> edges;
  for (int row = 0; row < height; ++row) {
    for (int col = 0; col < width; ++col) {
      const Vertex v = row * width + col;
      if (col + 1 < width) edges.emplace_back(v, v + 1);
      if (row + 1 < height) edges.emplace_back(v, v + width);
    }
  }
  return Graph::FromEdges(width * height, edges);
}

Graph RandomConnected(int n, double edge_prob, uint64_t seed) {
  Require(n >= 1, "random graph needs n >= 1");
  Require((edge_prob > 0.0 && edge_prob <= 1.0) || n == 1,
          "edge probability must be in (0, 1]");
  SplitMix64 rng(seed);
  constexpr int kMaxAttempts = 100000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng.NextDouble() < edge_prob) edges.emplace_back(u, v);
      }
    }
    Graph g = Graph::FromEdges(n, edges);
    if (IsConnected(g)) return g;
  }
  throw Error(ErrorCode::kInvalidParam,
              "no connected sample after " + std::to_string(kMaxAttempts) +
                  " attempts; raise the edge probability");
}

Graph RandomTree(int n, uint64_t seed) {
  Require(n >= 1, "tree needs n >= 1");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(rng.NextBelow(v)), v);
  }
  return Graph::FromEdges(n, edges);
}

Vertex SpokeVertex(int k, int spoke, int depth) {
  return 1 + spoke * k + (depth - 1);
}

Vertex GapVertex(int k, int gap, int j) {
  return 1 + (k + 1) * k + gap * k + j;
}

namespace {

std::vector<Edge> SpokeEdges(int k) {
  std::vector<Edge> edges;
  for (int i = 0; i <= k; ++i) {
    edges.emplace_back(0, SpokeVertex(k, i, 1));
    for (int d = 1; d < k; ++d) {
      edges.emplace_back(SpokeVertex(k, i, d), SpokeVertex(k, i, d + 1));
    }
  }
  return edges;
}

int SpokeVertexCount(int k) { return 1 + (k + 1) * k; }

}  // namespace

ApexGraph XGraph(int k) {
  RequireApexK(k);
  auto edges = SpokeEdges(k);
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(SpokeVertex(k, i, k), SpokeVertex(k, i + 1, k));
  }
  return {Graph::FromEdges(SpokeVertexCount(k), edges), 0, k};
}

ApexGraph YGraph(int k) {
  RequireApexK(k);
  auto edges = XGraph(k).graph.Edges();
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(SpokeVertex(k, i, k), SpokeVertex(k, i + 1, k - 1));
  }
  return {Graph::FromEdges(SpokeVertexCount(k), edges), 0, k};
}

ApexGraph ZGraph(int k, bool clique_all) {
  RequireApexK(k);
  auto edges = YGraph(k).graph.Edges();
  const int members = clique_all ? k + 1 : k;
  for (int i = 0; i < members; ++i) {
    for (int j = i + 1; j < members; ++j) {
      edges.emplace_back(SpokeVertex(k, i, 1), SpokeVertex(k, j, 1));
    }
  }
  return {Graph::FromEdges(SpokeVertexCount(k), edges), 0, k};
}

ApexGraph WGraph(int k) {
  RequireApexK(k);
  auto edges = SpokeEdges(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      edges.emplace_back(SpokeVertex(k, i, k), GapVertex(k, i, j));
      edges.emplace_back(GapVertex(k, i, j), SpokeVertex(k, i + 1, k));
    }
  }
  return {Graph::FromEdges(SpokeVertexCount(k) + k * k, edges), 0, k};
}

Vertex GluedSecondCopyId(const ApexGraph& first, const ApexGraph& second,
                         Vertex v) {
  if (v == second.apex) return first.apex;
  return first.graph.num_vertices() + (v < second.apex ? v : v - 1);
}

ApexGraph Glue(const ApexGraph& first, const ApexGraph& second) {
  auto edges = first.graph.Edges();
  for (auto [u, v] : second.graph.Edges()) {
    edges.emplace_back(GluedSecondCopyId(first, second, u),
                       GluedSecondCopyId(first, second, v));
  }
  const int n = first.graph.num_vertices() + second.graph.num_vertices() - 1;
  return {Graph::FromEdges(n, edges), first.apex, first.k};
}

WCover WCover3kPlus1(int k) {
  RequireApexK(k);
  const ApexGraph w = WGraph(k);
  WCover out{Glue(w, w), {}};
  const Graph& g = out.graph.graph;
  auto second = [&](Vertex v) { return GluedSecondCopyId(w, w, v); };

  out.cover.kind = CoverKind::kExplicit;
  for (int i = 0; i <= k; ++i) {
    std::vector<Vertex> path;
    for (int d = k; d >= 1; --d) path.push_back(SpokeVertex(k, i, d));
    path.push_back(w.apex);
    for (int d = 1; d <= k; ++d) path.push_back(second(SpokeVertex(k, i, d)));
    out.cover.paths.push_back(std::move(path));
  }
  for (int copy = 0; copy < 2; ++copy) {
    auto id = [&](Vertex v) { return copy == 0 ? v : second(v); };
    for (int j = 0; j < k; ++j) {
      std::vector<Vertex> path{id(SpokeVertex(k, 0, k))};
      for (int gap = 0; gap < k; ++gap) {
        path.push_back(id(GapVertex(k, gap, j)));
        path.push_back(id(SpokeVertex(k, gap + 1, k)));
      }
      out.cover.paths.push_back(std::move(path));
    }
  }

  const DistanceMatrix dm = AllPairsDistances(g);
  for (size_t p = 0; p < out.cover.paths.size(); ++p) {
    if (!IsIsometricPath(g, dm, out.cover.paths[p])) {
      throw Error(ErrorCode::kCertification,
                  "constructed cover path " + std::to_string(p) +
                      " is not isometric");
    }
  }
  return out;
}

}  // namespace ipclab
