#ifndef IPCLAB_METRIC_H_
#define IPCLAB_METRIC_H_

#include <compare>
#include <cstdint>
#include <string>

#include "ipclab/graph.h"

namespace ipclab {

// Exact multiple of 1/2, stored doubled.
struct HalfInteger {
  int64_t doubled = 0;

  static constexpr HalfInteger FromInt(int64_t v) { return {2 * v}; }
  double ToDouble() const { return static_cast<double>(doubled) / 2.0; }
  // "3", "1.5", "-0.5"
  std::string ToString() const;

  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) {
    return {a.doubled - b.doubled};
  }
};

inline constexpr int kHyperbolicityVertexCap = 150;

// (x|y)_r = (d(x,r) + d(y,r) - d(x,y)) / 2. Throws kUnreachable.
HalfInteger GromovProduct(const DistanceMatrix& dm, Vertex x, Vertex y,
                          Vertex r);

struct HyperbolicityOptions {
  int vertex_cap = kHyperbolicityVertexCap;
  bool force = false;  // ignore vertex_cap
  int threads = 1;
};

// Four-point condition: half the largest gap between the two largest of
// the three pair sums, over all quadruples i<j<k<l. Throws kDisconnected,
// and kTooLarge above the vertex cap unless forced.
HalfInteger Hyperbolicity(const DistanceMatrix& dm,
                          const HyperbolicityOptions& options = {});

// Smallest delta with (x|y)_r >= min((x|z)_r, (y|z)_r) - delta for all
// ordered x, y, z, r. O(n^4) over ordered tuples; for cross-checking.
HalfInteger HyperbolicityByGromovProducts(const DistanceMatrix& dm);

}  // namespace ipclab

#endif  // IPCLAB_METRIC_H_
