#include "ipclab/oracle.h"

#include "ipclab/generators.h"
#include "test_util.h"

namespace ipclab {
namespace {

using testing::CodeOf;

oracle::IsometricPathSet Paths(const Graph& g) {
  return oracle::EnumerateIsometricPaths(g, AllPairsDistances(g));
}

TEST_CASE("path enumeration") {
  const auto p3 = Paths(PathGraph(3));
  CHECK(p3.paths.size() == 3);
  CHECK(p3.maximal == std::vector<bool>{false, true, false});
  const auto k3 = Paths(Complete(3));
  CHECK(k3.paths.size() == 3);
  const auto c4 = Paths(Cycle(4));
  CHECK(c4.paths.size() == 8);
  CHECK_FALSE(c4.truncated);
  const auto capped = oracle::EnumerateIsometricPaths(
      Complete(6), AllPairsDistances(Complete(6)), 5);
  CHECK(capped.truncated);
  CHECK(capped.paths.size() == 5);
}

TEST_CASE("brute-force ipco") {
  CHECK(oracle::IpcorBruteForce(PathGraph(5), 0) == 1);
  CHECK(oracle::IpcorBruteForce(Cycle(4), 0) == 2);
  CHECK(oracle::IpcoBruteForce(Complete(4)) == 2);
  CHECK(oracle::IpcoBruteForce(Cycle(6)) == 2);
  CHECK(oracle::IpcoBruteForce(Star(3)) == 2);
  const ApexGraph x = XGraph(4);
  CHECK(oracle::IpcorBruteForce(Glue(x, x).graph, 0) >= 4);
}

TEST_CASE("brute-force rooted cover of a set") {
  CHECK(oracle::MinRootedCoverOfSetBruteForce(Cycle(4), 0,
                                              std::vector<Vertex>{1, 3}) == 2);
  CHECK(oracle::MinRootedCoverOfSetBruteForce(Cycle(6), 0,
                                              std::vector<Vertex>{1, 2, 3}) == 1);
  CHECK(oracle::MinRootedCoverOfSetBruteForce(
            PathGraph(6), 0, std::vector<Vertex>{5, 1, 3}) == 1);
  std::vector<Vertex> big(21);
  for (Vertex v = 0; v < 21; ++v) big[v] = v;
  CHECK(CodeOf([&] {
          oracle::MinRootedCoverOfSetBruteForce(PathGraph(21), 0, big);
        }) == ErrorCode::kTooLarge);
}

TEST_CASE("exact cover") {
  CHECK(oracle::ExactMinIsometricPathCover(PathGraph(6)).size() == 1);
  CHECK(oracle::ExactMinIsometricPathCover(Star(5)).size() == 3);
  CHECK(oracle::ExactMinIsometricPathCover(Cycle(6)).size() == 2);
  CHECK(oracle::ExactMinIsometricPathCover(Complete(5)).size() == 3);
  CHECK(oracle::ExactMinIsometricPathCover(testing::G(1, {})).size() == 1);
  CHECK(CodeOf([] { oracle::ExactMinIsometricPathCover(PathGraph(13)); }) ==
        ErrorCode::kTooLarge);
}

// Fewest isometric paths covering V by trying all subsets of all paths.
int SubsetCover(const Graph& g) {
  const auto set = Paths(g);
  std::vector<uint32_t> masks;
  for (const auto& p : set.paths) {
    uint32_t m = 0;
    for (Vertex v : p) m |= 1u << v;
    masks.push_back(m);
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) masks.push_back(1u << v);
  const uint32_t all = (1u << g.num_vertices()) - 1;
  std::vector<int> best(all + 1, 1 << 20);
  best[0] = 0;
  for (uint32_t covered = 0; covered <= all; ++covered) {
    if (best[covered] >= (1 << 20)) continue;
    for (uint32_t m : masks) {
      best[covered | m] = std::min(best[covered | m], best[covered] + 1);
    }
  }
  return best[all];
}

TEST_CASE("exact cover matches subset search") {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = RandomConnected(7, 0.35, seed);
    const PathCover cover = oracle::ExactMinIsometricPathCover(g);
    REQUIRE(cover.size() == SubsetCover(g));
  }
}

}  // namespace
}  // namespace ipclab
