#include "ipclab/graph.h"

#include "ipclab/generators.h"
#include "test_util.h"

namespace ipclab {
namespace {

using testing::CodeOf;

TEST_CASE("parse header and comments") {
  const Graph g = ParseEdgeList("p 3 2\n0 1\n1 2");
  CHECK(g == PathGraph(3));
  const Graph h = ParseEdgeList("# comment\n0 1  # trailing\n\n1 2\n");
  CHECK(h == PathGraph(3));
}

TEST_CASE("parse errors carry codes and lines") {
  CHECK(CodeOf([] { ParseEdgeList("0 1\n1 0"); }) == ErrorCode::kDuplicateEdge);
  CHECK(CodeOf([] { ParseEdgeList("0 0"); }) == ErrorCode::kSelfLoop);
  CHECK(CodeOf([] { ParseEdgeList("0 1\n1 x"); }) ==
        ErrorCode::kMalformedLine);
  CHECK(CodeOf([] { ParseEdgeList("p 3 1\n0 5"); }) ==
        ErrorCode::kIdOutOfRange);
  CHECK(CodeOf([] { ParseEdgeList("p 3 3\n0 1\n1 2"); }) ==
        ErrorCode::kMalformedLine);
  // Without a header vertex 2 would be isolated and unnamed.
  CHECK(CodeOf([] { ParseEdgeList("0 1\n3 1"); }) == ErrorCode::kIdOutOfRange);
  try {
    ParseEdgeList("0 1\n\n1 2\n2 2");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("one-based ids and round trip") {
  const Graph g = ParseEdgeList("1 2\n2 3", {.one_based = true});
  CHECK(g == PathGraph(3));
  const Graph c = Cycle(7);
  CHECK(ParseEdgeList(WriteEdgeList(c)) == c);
  CHECK(ParseEdgeList(WriteEdgeList(c, true), {.one_based = true}) == c);
}

TEST_CASE("bfs distances") {
  CHECK(BfsDistances(PathGraph(4), 0).dist == std::vector<int32_t>{0, 1, 2, 3});
  CHECK(BfsDistances(Cycle(6), 0).dist ==
        std::vector<int32_t>{0, 1, 2, 3, 2, 1});
  CHECK(BfsDistances(Complete(4), 2).dist == std::vector<int32_t>{1, 1, 0, 1});
  const Graph two = testing::G(4, {{0, 1}, {2, 3}});
  CHECK(BfsDistances(two, 0).dist[2] == kUnreachable);
}

TEST_CASE("all pairs distances") {
  const DistanceMatrix c4 = AllPairsDistances(Cycle(4));
  int32_t max_entry = 0;
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = 0; v < 4; ++v) max_entry = std::max(max_entry, c4.at(u, v));
  }
  CHECK(max_entry == 2);
  const DistanceMatrix p2 = AllPairsDistances(PathGraph(2));
  CHECK(p2.at(0, 0) == 0);
  CHECK(p2.at(0, 1) == 1);
  CHECK(AllPairsDistances(Star(3)).at(1, 2) == 2);
}

TEST_CASE("all pairs distances do not depend on threads") {
  const Graph g = RandomConnected(60, 0.08, 5);
  const DistanceMatrix a = AllPairsDistances(g, 1);
  const DistanceMatrix b = AllPairsDistances(g, 4);
  for (Vertex u = 0; u < 60; ++u) {
    for (Vertex v = 0; v < 60; ++v) REQUIRE(a.at(u, v) == b.at(u, v));
  }
}

TEST_CASE("edge endpoints differ by at most one level") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = RandomConnected(25, 0.15, seed);
    const DistanceMatrix dm = AllPairsDistances(g);
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
      for (auto [u, v] : g.Edges()) {
        REQUIRE(std::abs(dm.at(s, u) - dm.at(s, v)) <= 1);
      }
    }
  }
}

TEST_CASE("isometric path check") {
  const Graph c6 = Cycle(6);
  const DistanceMatrix dm = AllPairsDistances(c6);
  CHECK(IsIsometricPath(c6, dm, std::vector<Vertex>{1, 2, 3}));
  CHECK_FALSE(IsIsometricPath(c6, dm, std::vector<Vertex>{1, 2, 3, 4, 5}));
  CHECK(IsIsometricPath(c6, dm, std::vector<Vertex>{4}));
  CHECK(CodeOf([&] { IsIsometricPath(c6, dm, std::vector<Vertex>{1, 3}); }) ==
        ErrorCode::kNotAPath);
  CHECK(CodeOf([&] { IsIsometricPath(c6, dm, std::vector<Vertex>{}); }) ==
        ErrorCode::kNotAPath);
  CHECK(CodeOf([&] {
          IsIsometricPath(c6, dm, std::vector<Vertex>{1, 2, 1});
        }) == ErrorCode::kNotAPath);
}

TEST_CASE("connectivity") {
  CHECK(IsConnected(Cycle(5)));
  CHECK_FALSE(IsConnected(testing::G(4, {{0, 1}, {2, 3}})));
  CHECK(IsConnected(testing::G(1, {})));
  int count = 0;
  const auto comp = ConnectedComponents(testing::G(5, {{0, 3}, {1, 4}}), &count);
  CHECK(count == 3);
  CHECK(comp == std::vector<int>{0, 1, 2, 0, 1});
}

TEST_CASE("induced subgraph and shortest path") {
  const Graph c6 = Cycle(6);
  const Graph sub = InducedSubgraph(c6, std::vector<Vertex>{0, 1, 2, 5});
  CHECK(sub == testing::G(4, {{0, 1}, {1, 2}, {0, 3}}));
  const DistanceMatrix dm = AllPairsDistances(c6);
  CHECK(ShortestPath(c6, dm, 0, 3) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(IsInducedPath(c6, std::vector<Vertex>{0, 1, 2, 3, 4}));
  CHECK_FALSE(IsInducedPath(c6, std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
}

TEST_CASE("fingerprint tracks the edge set") {
  CHECK(Cycle(5).Fingerprint() == Cycle(5).Fingerprint());
  CHECK(Cycle(5).Fingerprint() != PathGraph(5).Fingerprint());
}

}  // namespace
}  // namespace ipclab
