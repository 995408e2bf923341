#include "ipclab/bfs_dag.h"

#include <algorithm>
#include <numeric>

#include "ipclab/matching.h"

namespace ipclab {

BfsDag BfsDag::Build(const Graph& g, Vertex root) {
  const int n = g.num_vertices();
  if (root < 0 || root >= n) {
    throw Error(ErrorCode::kInvalidParam,
                "root " + std::to_string(root) + " not in graph");
  }
  BfsDag dag;
  dag.root_ = root;
  dag.level_.resize(n);
  if (static_cast<int>(BfsInto(g, root, dag.level_).size()) != n) {
    throw Error(ErrorCode::kDisconnected, "graph is not connected");
  }
  dag.out_.resize(n);
  dag.in_.resize(n);
  for (Vertex y = 0; y < n; ++y) {
    for (Vertex x : g.neighbors(y)) {
      if (dag.level_[x] == dag.level_[y] - 1) {
        dag.out_[y].push_back(x);
        dag.in_[x].push_back(y);
        ++dag.num_arcs_;
      }
    }
  }
  // in_ lists are filled in ascending y, so already sorted.
  return dag;
}

std::vector<Vertex> BfsDag::TopologicalOrder() const {
  std::vector<Vertex> order(num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [this](Vertex a, Vertex b) {
    return level_[a] < level_[b];
  });
  return order;
}

const ReachabilityClosure& BfsDag::Closure() const {
  std::call_once(cache_->once, [this] {
    const int n = num_vertices();
    const int words = (n + 63) / 64;
    std::vector<uint64_t> bits(static_cast<size_t>(n) * words, 0);
    // Out-neighbors sit one level lower, so ascending level is a valid
    // processing order.
    for (Vertex v : TopologicalOrder()) {
      uint64_t* row = bits.data() + static_cast<size_t>(v) * words;
      row[v >> 6] |= uint64_t{1} << (v & 63);
      for (Vertex w : out_[v]) {
        const uint64_t* other = bits.data() + static_cast<size_t>(w) * words;
        for (int i = 0; i < words; ++i) row[i] |= other[i];
      }
    }
    cache_->closure = ReachabilityClosure(n, std::move(bits));
  });
  return cache_->closure;
}

std::vector<std::pair<Vertex, Vertex>> ReachabilityRelation(
    const BfsDag& dag, std::optional<std::span<const Vertex>> restrict_to) {
  const auto& closure = dag.Closure();
  std::vector<Vertex> domain;
  if (restrict_to) {
    domain.assign(restrict_to->begin(), restrict_to->end());
    std::sort(domain.begin(), domain.end());
    domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  } else {
    domain.resize(dag.num_vertices());
    std::iota(domain.begin(), domain.end(), 0);
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex y : domain) {
    for (Vertex x : domain) {
      if (closure.Reaches(y, x)) pairs.emplace_back(y, x);
    }
  }
  return pairs;
}

bool IsAntichain(const BfsDag& dag, std::span<const Vertex> s) {
  const auto& closure = dag.Closure();
  for (size_t i = 0; i < s.size(); ++i) {
    for (size_t j = i + 1; j < s.size(); ++j) {
      if (closure.Comparable(s[i], s[j])) return false;
    }
  }
  return true;
}

namespace {

std::vector<Vertex> SortedUnique(std::span<const Vertex> s) {
  std::vector<Vertex> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Left copy i -> right copy j whenever elems[i] strictly reaches elems[j].
std::vector<std::vector<int>> StrictOrderAdjacency(
    const ReachabilityClosure& closure, const std::vector<Vertex>& elems) {
  const int k = static_cast<int>(elems.size());
  std::vector<std::vector<int>> adj(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j && closure.Reaches(elems[i], elems[j])) adj[i].push_back(j);
    }
  }
  return adj;
}

}  // namespace

AntichainWitness MaxAntichain(const BfsDag& dag, std::span<const Vertex> s) {
  if (s.empty()) {
    throw Error(ErrorCode::kInvalidParam, "max antichain of an empty set");
  }
  const auto elems = SortedUnique(s);
  const int k = static_cast<int>(elems.size());
  const auto adj = StrictOrderAdjacency(dag.Closure(), elems);
  const auto matching = MaximumBipartiteMatching(k, adj);
  const auto cover = KonigCover(k, adj, matching);

  AntichainWitness witness;
  witness.root = dag.root();
  for (int i = 0; i < k; ++i) {
    if (!cover.left[i] && !cover.right[i]) witness.vertices.push_back(elems[i]);
  }
  return witness;
}

std::vector<std::vector<Vertex>> MinChainPartition(
    const BfsDag& dag, std::span<const Vertex> s) {
  const auto elems = SortedUnique(s);
  const int k = static_cast<int>(elems.size());
  const auto adj = StrictOrderAdjacency(dag.Closure(), elems);
  const auto matching = MaximumBipartiteMatching(k, adj);

  // mate_left[i] = j means j directly follows i walking toward the root.
  // Chains start at elements nobody points to (the far end) and are
  // reversed so they read root-side first.
  std::vector<std::vector<Vertex>> chains;
  for (int i = 0; i < k; ++i) {
    if (matching.mate_right[i] != kUnmatched) continue;
    std::vector<Vertex> chain;
    for (int cur = i; cur != kUnmatched; cur = matching.mate_left[cur]) {
      chain.push_back(elems[cur]);
    }
    std::reverse(chain.begin(), chain.end());
    chains.push_back(std::move(chain));
  }
  return chains;
}

bool SingleRootedCoverable(const BfsDag& dag, const Graph& g,
                           const DistanceMatrix& dm,
                           std::span<const Vertex> p) {
  if (!IsIsometricPath(g, dm, p)) {
    throw Error(ErrorCode::kNotIsometric, "path is not isometric");
  }
  std::vector<Vertex> seq(p.begin(), p.end());
  if (dag.level(seq.front()) > dag.level(seq.back())) {
    std::reverse(seq.begin(), seq.end());
  }
  for (size_t i = 0; i + 1 < seq.size(); ++i) {
    if (dag.level(seq[i + 1]) != dag.level(seq[i]) + 1) return false;
  }
  return true;
}

std::vector<Vertex> DirectedPath(const BfsDag& dag, Vertex from, Vertex to) {
  const auto& closure = dag.Closure();
  if (!closure.Reaches(from, to)) {
    throw Error(ErrorCode::kUnreachable,
                "no directed path from " + std::to_string(from) + " to " +
                    std::to_string(to));
  }
  std::vector<Vertex> path{from};
  Vertex cur = from;
  while (cur != to) {
    for (Vertex w : dag.out(cur)) {
      if (closure.Reaches(w, to)) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

}  // namespace ipclab
