#include "ipclab/ipc_complexity.h"

#include <algorithm>

#include "ipclab/bfs_dag.h"
#include "ipclab/parallel.h"

namespace ipclab {

namespace {

void Resize(GammaTable& t, int n) {
  for (auto* v : {&t.gamma, &t.gamma_down, &t.gamma_flat, &t.gamma_up,
                  &t.beta_down, &t.beta_up}) {
    v->assign(n, 0);
  }
}

// Vertices sorted by distance (counting sort), ties by id.
void LayerOrder(std::span<const int32_t> dist, std::vector<Vertex>& order,
                std::vector<int32_t>& counts) {
  const int n = static_cast<int>(dist.size());
  int32_t max_d = 0;
  for (int32_t d : dist) max_d = std::max(max_d, d);
  counts.assign(max_d + 2, 0);
  for (int32_t d : dist) ++counts[d + 1];
  for (int32_t i = 1; i <= max_d + 1; ++i) counts[i] += counts[i - 1];
  order.resize(n);
  for (Vertex v = 0; v < n; ++v) order[counts[dist[v]]++] = v;
}

void CheckConnected(std::span<const int32_t> dist) {
  for (int32_t d : dist) {
    if (d == kUnreachable) {
      throw Error(ErrorCode::kDisconnected, "graph is not connected");
    }
  }
}

// Core recurrence. `order` lists vertices by increasing source distance,
// so every predecessor of v is final when v is processed.
void FillTable(const Graph& g, std::span<const int32_t> rd,
               std::span<const int32_t> xd, std::span<const Vertex> order,
               GammaTable& t) {
  const Vertex x = order.front();
  t.gamma[x] = t.gamma_down[x] = t.gamma_flat[x] = t.gamma_up[x] = 1;
  t.beta_down[x] = t.beta_up[x] = 0;

  for (size_t i = 1; i < order.size(); ++i) {
    const Vertex v = order[i];
    int32_t g_down = 0, g_flat = 0, g_up = 0, b_down = 0, b_up = 0;
    for (Vertex u : g.neighbors(v)) {
      if (xd[u] != xd[v] - 1) continue;
      const int32_t step = rd[u] - rd[v];
      if (step == -1) {
        b_down = std::max(b_down, t.gamma[u]);
        g_down = std::max({g_down, t.gamma_down[u], t.gamma_flat[u],
                           t.beta_up[u] + 1});
      } else if (step == 0) {
        g_flat = std::max(g_flat, 1 + t.gamma[u]);
      } else {
        b_up = std::max(b_up, t.gamma[u]);
        g_up = std::max({g_up, t.gamma_up[u], t.gamma_flat[u],
                         t.beta_down[u] + 1});
      }
    }
    t.gamma_down[v] = g_down;
    t.gamma_flat[v] = g_flat;
    t.gamma_up[v] = g_up;
    t.beta_down[v] = b_down;
    t.beta_up[v] = b_up;
    t.gamma[v] = std::max({g_down, g_flat, g_up});
  }
}

}  // namespace

GammaTable ComputeGammaTable(const Graph& g, std::span<const int32_t> root_dist,
                             std::span<const int32_t> source_dist,
                             Vertex root, Vertex source) {
  CheckConnected(root_dist);
  CheckConnected(source_dist);
  GammaTable t;
  t.root = root;
  t.source = source;
  t.level.assign(root_dist.begin(), root_dist.end());
  t.source_dist.assign(source_dist.begin(), source_dist.end());
  Resize(t, g.num_vertices());
  std::vector<Vertex> order;
  std::vector<int32_t> counts;
  LayerOrder(source_dist, order, counts);
  FillTable(g, root_dist, source_dist, order, t);
  return t;
}

GammaTable ComputeGammaTable(const Graph& g, const DistanceMatrix& dm,
                             Vertex root, Vertex source) {
  return ComputeGammaTable(g, dm.row(root), dm.row(source), root, source);
}

namespace {

enum class Want { kGamma, kDown, kFlat, kUp, kBetaDown, kBetaUp };

}  // namespace

std::vector<Vertex> WitnessPath(const Graph& g, const GammaTable& t,
                                Vertex v) {
  if (v < 0 || v >= static_cast<Vertex>(t.gamma.size()) ||
      t.source_dist[v] == kUnreachable || t.gamma[v] == 0) {
    throw Error(ErrorCode::kUnreachable,
                "vertex " + std::to_string(v) + " unreachable from source");
  }
  // Walk back toward the source, collecting v, then its predecessor, ...
  std::vector<Vertex> reversed;
  Vertex cur = v;
  Want want = Want::kGamma;
  auto is_pred = [&](Vertex u, Vertex w, int32_t step) {
    return t.source_dist[u] == t.source_dist[w] - 1 &&
           t.level[u] - t.level[w] == step;
  };
  auto fail = [&] {
    return Error(ErrorCode::kCertification,
                 "witness backtracking found no consistent predecessor at " +
                     std::to_string(cur));
  };

  while (true) {
    if (cur == t.source) {
      reversed.push_back(cur);
      break;
    }
    switch (want) {
      case Want::kGamma:
        if (t.gamma_up[cur] == t.gamma[cur]) {
          want = Want::kUp;
        } else if (t.gamma_flat[cur] == t.gamma[cur]) {
          want = Want::kFlat;
        } else {
          want = Want::kDown;
        }
        continue;
      case Want::kBetaDown:
      case Want::kBetaUp: {
        // cur is already on the path; pick the predecessor carrying beta.
        const bool down = want == Want::kBetaDown;
        const int32_t target = down ? t.beta_down[cur] : t.beta_up[cur];
        Vertex next = -1;
        for (Vertex u : g.neighbors(cur)) {
          if (is_pred(u, cur, down ? -1 : 1) && t.gamma[u] == target) {
            next = u;
            break;
          }
        }
        if (next < 0) throw fail();
        reversed.push_back(cur);
        cur = next;
        want = Want::kGamma;
        continue;
      }
      case Want::kFlat: {
        Vertex next = -1;
        for (Vertex u : g.neighbors(cur)) {
          if (is_pred(u, cur, 0) && 1 + t.gamma[u] == t.gamma_flat[cur]) {
            next = u;
            break;
          }
        }
        if (next < 0) throw fail();
        reversed.push_back(cur);
        cur = next;
        want = Want::kGamma;
        continue;
      }
      case Want::kDown:
      case Want::kUp: {
        const bool down = want == Want::kDown;
        const int32_t target = down ? t.gamma_down[cur] : t.gamma_up[cur];
        Vertex next = -1;
        Want next_want = Want::kGamma;
        for (Vertex u : g.neighbors(cur)) {
          if (!is_pred(u, cur, down ? -1 : 1)) continue;
          const int32_t same = down ? t.gamma_down[u] : t.gamma_up[u];
          const int32_t beta = down ? t.beta_up[u] : t.beta_down[u];
          if (same == target) {
            next_want = down ? Want::kDown : Want::kUp;
          } else if (t.gamma_flat[u] == target) {
            next_want = Want::kFlat;
          } else if (beta + 1 == target) {
            next_want = down ? Want::kBetaUp : Want::kBetaDown;
          } else {
            continue;
          }
          next = u;
          break;
        }
        if (next < 0) throw fail();
        reversed.push_back(cur);
        cur = next;
        want = next_want;
        continue;
      }
    }
  }
  std::reverse(reversed.begin(), reversed.end());
  return reversed;
}

namespace {

RootComplexity IpcoForRootImpl(const Graph& g, const DistanceMatrix& dm,
                               Vertex root) {
  const int n = g.num_vertices();
  CheckConnected(dm.row(root));
  RootComplexity best;
  best.root = root;
  GammaTable t;
  Resize(t, n);
  std::vector<Vertex> order;
  std::vector<int32_t> counts;
  for (Vertex x = 0; x < n; ++x) {
    LayerOrder(dm.row(x), order, counts);
    FillTable(g, dm.row(root), dm.row(x), order, t);
    for (Vertex v = 0; v < n; ++v) {
      if (t.gamma[v] > best.value) {
        best.value = t.gamma[v];
        best.source = x;
        best.terminal = v;
      }
    }
  }
  return best;
}

}  // namespace

RootComplexity IpcoForRoot(const Graph& g, const DistanceMatrix& dm,
                           Vertex root) {
  if (root < 0 || root >= g.num_vertices()) {
    throw Error(ErrorCode::kInvalidParam,
                "root " + std::to_string(root) + " not in graph");
  }
  return IpcoForRootImpl(g, dm, root);
}

RootComplexity IpcoForRoot(const Graph& g, Vertex root) {
  if (!IsConnected(g)) {
    throw Error(ErrorCode::kDisconnected, "graph is not connected");
  }
  return IpcoForRoot(g, AllPairsDistances(g), root);
}

ComplexityReport ComputeIpco(const Graph& g, int threads) {
  if (g.num_vertices() == 0) {
    throw Error(ErrorCode::kInvalidParam, "empty graph");
  }
  if (!IsConnected(g)) {
    throw Error(ErrorCode::kDisconnected, "graph is not connected");
  }
  return ComputeIpco(g, AllPairsDistances(g, threads), threads);
}

ComplexityReport ComputeIpco(const Graph& g, const DistanceMatrix& dm,
                             int threads) {
  const int n = g.num_vertices();
  if (n == 0) throw Error(ErrorCode::kInvalidParam, "empty graph");
  CheckConnected(dm.row(0));

  std::vector<RootComplexity> results(n);
  ParallelFor(n, threads,
              [&](int r) { results[r] = IpcoForRootImpl(g, dm, r); });

  ComplexityReport report;
  report.per_root.resize(n);
  report.best_root = 0;
  for (Vertex r = 0; r < n; ++r) {
    report.per_root[r] = results[r].value;
    if (results[r].value < results[report.best_root].value) {
      report.best_root = r;
    }
  }
  const RootComplexity& best = results[report.best_root];
  report.value = best.value;

  GammaTable table = ComputeGammaTable(g, dm, best.root, best.source);
  report.witness.root = best.root;
  report.witness.source = best.source;
  report.witness.terminal = best.terminal;
  report.witness.path = WitnessPath(g, table, best.terminal);

  if (!IsIsometricPath(g, dm, report.witness.path)) {
    throw Error(ErrorCode::kCertification, "witness path is not isometric");
  }
  BfsDag dag = BfsDag::Build(g, best.root);
  auto antichain = MaxAntichain(dag, report.witness.path);
  if (static_cast<int32_t>(antichain.vertices.size()) != report.value) {
    throw Error(ErrorCode::kCertification,
                "witness antichain size " +
                    std::to_string(antichain.vertices.size()) +
                    " differs from value " + std::to_string(report.value));
  }
  return report;
}

PerComponentReport ComputeIpcoPerComponent(const Graph& g, int threads) {
  if (g.num_vertices() == 0) {
    throw Error(ErrorCode::kInvalidParam, "empty graph");
  }
  int count = 0;
  auto comp = ConnectedComponents(g, &count);
  std::vector<std::vector<Vertex>> members(count);
  for (Vertex v = 0; v < g.num_vertices(); ++v) members[comp[v]].push_back(v);

  PerComponentReport out;
  for (auto& vertices : members) {
    ComponentComplexity cc;
    cc.report = ComputeIpco(InducedSubgraph(g, vertices), threads);
    cc.vertices = std::move(vertices);
    out.value = std::max(out.value, cc.report.value);
    out.components.push_back(std::move(cc));
  }
  return out;
}

}  // namespace ipclab
