#include "ipclab/oracle.h"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace ipclab::oracle {

namespace {

struct PathSearch {
  const Graph& g;
  const DistanceMatrix& dm;
  int64_t cap;
  IsometricPathSet* out;
  std::vector<Vertex> path;

  bool IsMaximal() const {
    const Vertex first = path.front(), last = path.back();
    const int32_t len = static_cast<int32_t>(path.size()) - 1;
    for (Vertex w : g.neighbors(last)) {
      if (dm.at(first, w) == len + 1) return false;
    }
    for (Vertex w : g.neighbors(first)) {
      if (dm.at(w, last) == len + 1) return false;
    }
    return true;
  }

  // Returns false once the cap is hit.
  bool Extend() {
    const Vertex first = path.front(), last = path.back();
    if (path.size() >= 2 && first < last) {
      if (static_cast<int64_t>(out->paths.size()) >= cap) {
        out->truncated = true;
        return false;
      }
      out->paths.push_back(path);
      out->maximal.push_back(IsMaximal());
    }
    const int32_t next_dist = static_cast<int32_t>(path.size());
    for (Vertex w : g.neighbors(last)) {
      if (dm.at(first, w) != next_dist) continue;
      path.push_back(w);
      bool keep_going = Extend();
      path.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace

IsometricPathSet EnumerateIsometricPaths(const Graph& g,
                                         const DistanceMatrix& dm,
                                         int64_t cap) {
  IsometricPathSet out;
  PathSearch search{g, dm, cap, &out, {}};
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    search.path = {v};
    if (!search.Extend()) break;
  }
  return out;
}

int BruteForceMaxAntichain(const ReachabilityClosure& closure,
                           std::span<const Vertex> s) {
  std::vector<Vertex> elems(s.begin(), s.end());
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  const int k = static_cast<int>(elems.size());
  if (k > kMaxBruteForceSet) {
    throw Error(ErrorCode::kTooLarge, "set too large for brute force");
  }
  std::vector<uint32_t> incomparable(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j && !closure.Comparable(elems[i], elems[j])) {
        incomparable[i] |= uint32_t{1} << j;
      }
    }
  }
  const uint32_t total = uint32_t{1} << k;
  std::vector<char> ok(total, 0);
  ok[0] = 1;
  int best = 0;
  for (uint32_t mask = 1; mask < total; ++mask) {
    const int low = std::countr_zero(mask);
    const uint32_t rest = mask & (mask - 1);
    ok[mask] = ok[rest] && (incomparable[low] & rest) == rest;
    if (ok[mask]) best = std::max(best, std::popcount(mask));
  }
  return best;
}

int IpcorBruteForce(const Graph& g, Vertex root, int64_t cap) {
  if (!IsConnected(g)) {
    throw Error(ErrorCode::kDisconnected, "graph is not connected");
  }
  const DistanceMatrix dm = AllPairsDistances(g);
  const BfsDag dag = BfsDag::Build(g, root);
  const auto& closure = dag.Closure();
  const auto paths = EnumerateIsometricPaths(g, dm, cap);
  if (paths.truncated) {
    throw Error(ErrorCode::kTruncated, "isometric path enumeration hit cap");
  }
  int best = 1;  // a single vertex
  for (size_t i = 0; i < paths.paths.size(); ++i) {
    if (!paths.maximal[i]) continue;
    best = std::max(best, BruteForceMaxAntichain(closure, paths.paths[i]));
  }
  return best;
}

int IpcoBruteForce(const Graph& g, int64_t cap) {
  if (g.num_vertices() == 0) {
    throw Error(ErrorCode::kInvalidParam, "empty graph");
  }
  int best = g.num_vertices() + 1;
  for (Vertex r = 0; r < g.num_vertices(); ++r) {
    best = std::min(best, IpcorBruteForce(g, r, cap));
  }
  return best;
}

namespace {

class ChainCoverSearch {
 public:
  ChainCoverSearch(std::vector<uint32_t> comparable, int k)
      : comparable_(std::move(comparable)), is_chain_(size_t{1} << k, 0) {
    is_chain_[0] = 1;
    for (uint32_t mask = 1; mask < is_chain_.size(); ++mask) {
      const int low = std::countr_zero(mask);
      const uint32_t rest = mask & (mask - 1);
      is_chain_[mask] = is_chain_[rest] && (comparable_[low] & rest) == rest;
    }
  }

  int Solve(uint32_t mask) {
    if (mask == 0) return 0;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const int low = std::countr_zero(mask);
    const uint32_t low_bit = uint32_t{1} << low;
    // The chain holding `low` is low plus a submask of its comparable set.
    const uint32_t pool = mask & comparable_[low] & ~low_bit;
    int best = std::popcount(mask);
    uint32_t sub = pool;
    while (true) {
      const uint32_t chain = sub | low_bit;
      if (is_chain_[chain]) best = std::min(best, 1 + Solve(mask & ~chain));
      if (sub == 0) break;
      sub = (sub - 1) & pool;
    }
    memo_[mask] = best;
    return best;
  }

 private:
  std::vector<uint32_t> comparable_;
  std::vector<char> is_chain_;
  std::unordered_map<uint32_t, int> memo_;
};

}  // namespace

int MinRootedCoverOfSetBruteForce(const Graph& g, Vertex root,
                                  std::span<const Vertex> s) {
  const BfsDag dag = BfsDag::Build(g, root);
  return MinRootedCoverOfSetBruteForce(dag.Closure(), s);
}

int MinRootedCoverOfSetBruteForce(const ReachabilityClosure& closure,
                                  std::span<const Vertex> s) {
  std::vector<Vertex> elems(s.begin(), s.end());
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  const int k = static_cast<int>(elems.size());
  if (k > kMaxBruteForceSet) {
    throw Error(ErrorCode::kTooLarge,
                "set of size " + std::to_string(k) + " exceeds " +
                    std::to_string(kMaxBruteForceSet));
  }
  if (k == 0) return 0;
  std::vector<uint32_t> comparable(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j && closure.Comparable(elems[i], elems[j])) {
        comparable[i] |= uint32_t{1} << j;
      }
    }
  }
  ChainCoverSearch search(std::move(comparable), k);
  return search.Solve((uint32_t{1} << k) - 1);
}

namespace {

struct Candidate {
  uint32_t mask;
  std::vector<Vertex> path;
};

class ExactCoverSearch {
 public:
  ExactCoverSearch(int n, std::vector<Candidate> candidates)
      : n_(n), all_((n == 32) ? ~uint32_t{0} : (uint32_t{1} << n) - 1),
        candidates_(std::move(candidates)), covering_(n) {
    for (size_t i = 0; i < candidates_.size(); ++i) {
      max_size_ = std::max(max_size_, std::popcount(candidates_[i].mask));
      for (int v = 0; v < n_; ++v) {
        if (candidates_[i].mask >> v & 1u) covering_[v].push_back(i);
      }
    }
  }

  std::vector<size_t> Run() {
    best_ = Greedy();
    std::vector<size_t> chosen;
    Search(0, chosen);
    return best_;
  }

 private:
  std::vector<size_t> Greedy() const {
    std::vector<size_t> chosen;
    uint32_t covered = 0;
    while (covered != all_) {
      size_t pick = 0;
      int gain = -1;
      for (size_t i = 0; i < candidates_.size(); ++i) {
        int c = std::popcount(candidates_[i].mask & ~covered);
        if (c > gain) {
          gain = c;
          pick = i;
        }
      }
      chosen.push_back(pick);
      covered |= candidates_[pick].mask;
    }
    return chosen;
  }

  void Search(uint32_t covered, std::vector<size_t>& chosen) {
    if (covered == all_) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    const int uncovered = std::popcount(all_ & ~covered);
    const size_t lower = chosen.size() + (uncovered + max_size_ - 1) / max_size_;
    if (lower >= best_.size()) return;

    // Branch on the uncovered vertex with the fewest covering candidates.
    int pivot = -1;
    size_t fewest = SIZE_MAX;
    for (int v = 0; v < n_; ++v) {
      if ((covered >> v & 1u) == 0 && covering_[v].size() < fewest) {
        fewest = covering_[v].size();
        pivot = v;
      }
    }
    std::vector<size_t> options = covering_[pivot];
    std::stable_sort(options.begin(), options.end(), [&](size_t a, size_t b) {
      return std::popcount(candidates_[a].mask & ~covered) >
             std::popcount(candidates_[b].mask & ~covered);
    });
    for (size_t i : options) {
      chosen.push_back(i);
      Search(covered | candidates_[i].mask, chosen);
      chosen.pop_back();
    }
  }

  int n_;
  uint32_t all_;
  std::vector<Candidate> candidates_;
  std::vector<std::vector<size_t>> covering_;
  int max_size_ = 1;
  std::vector<size_t> best_;
};

}  // namespace

PathCover ExactMinIsometricPathCover(const Graph& g, int limit) {
  const int n = g.num_vertices();
  if (n > limit || n > 32) {
    throw Error(ErrorCode::kTooLarge,
                "exact cover limited to " + std::to_string(limit) +
                    " vertices, graph has " + std::to_string(n));
  }
  PathCover cover;
  cover.kind = CoverKind::kExplicit;
  if (n == 0) return cover;

  const DistanceMatrix dm = AllPairsDistances(g);
  const auto paths = EnumerateIsometricPaths(g, dm);
  if (paths.truncated) {
    throw Error(ErrorCode::kTruncated, "isometric path enumeration hit cap");
  }
  // Any cover can be rewritten to use maximal paths only, and a path whose
  // vertex set lies inside another's is never needed.
  std::vector<Candidate> raw;
  uint32_t touched = 0;
  for (size_t i = 0; i < paths.paths.size(); ++i) {
    if (!paths.maximal[i]) continue;
    uint32_t mask = 0;
    for (Vertex v : paths.paths[i]) mask |= uint32_t{1} << v;
    raw.push_back({mask, paths.paths[i]});
    touched |= mask;
  }
  for (Vertex v = 0; v < n; ++v) {
    if ((touched >> v & 1u) == 0) raw.push_back({uint32_t{1} << v, {v}});
  }
  std::vector<Candidate> candidates;
  for (size_t i = 0; i < raw.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < raw.size() && !dominated; ++j) {
      if (i == j) continue;
      const bool subset = (raw[i].mask & ~raw[j].mask) == 0;
      if (subset && (raw[i].mask != raw[j].mask || j < i)) dominated = true;
    }
    if (!dominated) candidates.push_back(raw[i]);
  }

  ExactCoverSearch search(n, candidates);
  for (size_t i : search.Run()) cover.paths.push_back(candidates[i].path);
  return cover;
}

}  // namespace ipclab::oracle
