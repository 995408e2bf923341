#include "ipclab/generators.h"

#include "test_util.h"

namespace ipclab {
namespace {

using testing::CodeOf;

TEST_CASE("basic families") {
  CHECK(Cycle(3) == Complete(3));
  CHECK(Grid(1, 5) == PathGraph(5));
  CHECK(Grid(3, 2).num_edges() == 7);
  CHECK(Star(4).degree(0) == 4);
  CHECK(CodeOf([] { Cycle(2); }) == ErrorCode::kInvalidParam);
  CHECK(CodeOf([] { RandomConnected(5, 0.0, 1); }) == ErrorCode::kInvalidParam);
}

TEST_CASE("random families are deterministic and connected") {
  CHECK(RandomConnected(30, 0.1, 7) == RandomConnected(30, 0.1, 7));
  CHECK(RandomConnected(30, 0.1, 7) != RandomConnected(30, 0.1, 8));
  CHECK(IsConnected(RandomConnected(30, 0.1, 7)));
  const Graph t = RandomTree(25, 3);
  CHECK(t == RandomTree(25, 3));
  CHECK(t.num_edges() == 24);
  CHECK(IsConnected(t));
  SplitMix64 rng(0);
  CHECK(rng.Next() == 0xE220A8397B1DCDAFULL);
}

TEST_CASE("lower-bound family sizes") {
  const ApexGraph x = XGraph(4);
  CHECK(x.graph.num_vertices() == 21);
  CHECK(x.graph.num_edges() == 24);
  CHECK(YGraph(4).graph.num_edges() == 28);
  CHECK(ZGraph(4).graph.num_edges() == 34);
  CHECK(ZGraph(4, true).graph.num_edges() == 38);
  const ApexGraph w = WGraph(4);
  CHECK(w.graph.num_vertices() == 37);
  CHECK(w.graph.num_edges() == 52);
  CHECK(Glue(w, w).graph.num_vertices() == 73);
  CHECK(Glue(x, x).graph.num_edges() == 48);
  CHECK(CodeOf([] { XGraph(3); }) == ErrorCode::kInvalidParam);
}

TEST_CASE("labeling conventions") {
  const ApexGraph x = XGraph(4);
  CHECK(SpokeVertex(4, 0, 1) == 1);
  CHECK(SpokeVertex(4, 4, 4) == 20);
  CHECK(x.graph.HasEdge(0, SpokeVertex(4, 2, 1)));
  CHECK(x.graph.HasEdge(SpokeVertex(4, 1, 4), SpokeVertex(4, 2, 4)));
  CHECK_FALSE(x.graph.HasEdge(SpokeVertex(4, 4, 4), SpokeVertex(4, 0, 4)));
  const ApexGraph y = YGraph(4);
  CHECK(y.graph.HasEdge(SpokeVertex(4, 0, 4), SpokeVertex(4, 1, 3)));
  const ApexGraph w = WGraph(4);
  CHECK(GapVertex(4, 0, 0) == 21);
  CHECK(w.graph.HasEdge(SpokeVertex(4, 0, 4), GapVertex(4, 0, 2)));
  CHECK(w.graph.HasEdge(GapVertex(4, 0, 2), SpokeVertex(4, 1, 4)));
  const ApexGraph glued = Glue(x, x);
  CHECK(GluedSecondCopyId(x, x, 0) == 0);
  CHECK(GluedSecondCopyId(x, x, 1) == 21);
  CHECK(glued.graph.HasEdge(0, 21));
}

TEST_CASE("explicit W cover") {
  for (int k : {4, 5}) {
    const WCover w = WCover3kPlus1(k);
    CHECK(w.cover.size() == 3 * k + 1);
    for (const auto& p : w.cover.paths) CHECK(p.size() == 2u * k + 1);
  }
}

}  // namespace
}  // namespace ipclab
