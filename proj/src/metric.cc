#include "ipclab/metric.h"

#include <algorithm>
#include <vector>

#include "ipclab/parallel.h"

namespace ipclab {

std::string HalfInteger::ToString() const {
  std::string s = std::to_string(doubled / 2);
  if (doubled % 2 != 0) {
    if (doubled < 0 && doubled / 2 == 0) s = "-0";
    s += ".5";
  }
  return s;
}

namespace {

void CheckConnected(const DistanceMatrix& dm) {
  if (dm.size() == 0) return;
  for (int32_t d : dm.row(0)) {
    if (d == kUnreachable) {
      throw Error(ErrorCode::kDisconnected, "graph is not connected");
    }
  }
}

}  // namespace

HalfInteger GromovProduct(const DistanceMatrix& dm, Vertex x, Vertex y,
                          Vertex r) {
  const int32_t xr = dm.at(x, r), yr = dm.at(y, r), xy = dm.at(x, y);
  if (xr == kUnreachable || yr == kUnreachable || xy == kUnreachable) {
    throw Error(ErrorCode::kUnreachable, "vertices in different components");
  }
  return {static_cast<int64_t>(xr) + yr - xy};
}

HalfInteger Hyperbolicity(const DistanceMatrix& dm,
                          const HyperbolicityOptions& options) {
  const int n = dm.size();
  if (!options.force && n > options.vertex_cap) {
    throw Error(ErrorCode::kTooLarge,
                "hyperbolicity is O(n^4); " + std::to_string(n) +
                    " vertices exceed the cap of " +
                    std::to_string(options.vertex_cap));
  }
  CheckConnected(dm);
  if (n < 4) return {0};

  std::vector<int64_t> best(n, 0);
  ParallelFor(n, options.threads, [&](int i) {
    int64_t local = 0;
    for (int j = i + 1; j < n; ++j) {
      const int32_t dij = dm.at(i, j);
      for (int k = j + 1; k < n; ++k) {
        const int32_t dik = dm.at(i, k), djk = dm.at(j, k);
        for (int l = k + 1; l < n; ++l) {
          int64_t s1 = dij + dm.at(k, l);
          int64_t s2 = dik + dm.at(j, l);
          int64_t s3 = dm.at(i, l) + djk;
          // Sort descending; the gap between the top two is 2*delta.
          if (s1 < s2) std::swap(s1, s2);
          if (s2 < s3) std::swap(s2, s3);
          if (s1 < s2) std::swap(s1, s2);
          local = std::max(local, s1 - s2);
        }
      }
    }
    best[i] = local;
  });
  // (s1 - s2) equals 2*delta for the quadruple, which is the doubled form.
  return {*std::max_element(best.begin(), best.end())};
}

HalfInteger HyperbolicityByGromovProducts(const DistanceMatrix& dm) {
  const int n = dm.size();
  CheckConnected(dm);
  int64_t worst = 0;
  for (Vertex r = 0; r < n; ++r) {
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        const int64_t xy = GromovProduct(dm, x, y, r).doubled;
        for (Vertex z = 0; z < n; ++z) {
          const int64_t bound = std::min(GromovProduct(dm, x, z, r).doubled,
                                         GromovProduct(dm, y, z, r).doubled);
          worst = std::max(worst, bound - xy);
        }
      }
    }
  }
  return {worst};
}

}  // namespace ipclab
