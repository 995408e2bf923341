#include "ipclab/path_cover.h"

#include "ipclab/generators.h"
#include "ipclab/ipc_complexity.h"
#include "ipclab/oracle.h"
#include "test_util.h"

namespace ipclab {
namespace {

using testing::CodeOf;

TEST_CASE("min dag path cover") {
  const PathCover c4 = MinDagPathCover(BfsDag::Build(Cycle(4), 0));
  CHECK(c4.size() == 2);
  CHECK(c4.kind == CoverKind::kDagDisjoint);
  CHECK(MinDagPathCover(BfsDag::Build(Star(3), 0)).size() == 3);
  const PathCover p5 = MinDagPathCover(BfsDag::Build(PathGraph(5), 0));
  REQUIRE(p5.size() == 1);
  CHECK(p5.paths[0] == std::vector<Vertex>{4, 3, 2, 1, 0});
}

TEST_CASE("approximate cover") {
  CHECK(ApproxIsometricPathCover(PathGraph(6)).size() == 1);
  const Graph c6 = Cycle(6);
  const PathCover approx = ApproxIsometricPathCover(c6);
  const int opt = oracle::ExactMinIsometricPathCover(c6).size();
  CHECK(approx.size() <= ComputeIpco(c6).value * opt);
  CHECK(ValidateCover(c6, AllPairsDistances(c6), approx).ok);
  const WCover w = WCover3kPlus1(4);
  CHECK(ApproxIsometricPathCover(w.graph.graph).size() >= 16);
}

TEST_CASE("min rooted cover") {
  CHECK(MinRootedCover(PathGraph(5), 0).size() == 1);
  const PathCover star = MinRootedCover(Star(3), 0);
  CHECK(star.size() == 3);
  CHECK(star.kind == CoverKind::kRooted);
  for (const auto& p : star.paths) CHECK(p.front() == 0);
  const ApexGraph w = WGraph(4);
  const Graph g = Glue(w, w).graph;
  for (Vertex r : {0, 5, 40, 72}) CHECK(MinRootedCover(g, r).size() >= 16);
}

TEST_CASE("rooted cover size matches max antichain of the whole dag") {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = RandomConnected(16, 0.18, seed);
    const Vertex r = static_cast<Vertex>(seed % 16);
    const BfsDag dag = BfsDag::Build(g, r);
    std::vector<Vertex> all(16);
    for (Vertex v = 0; v < 16; ++v) all[v] = v;
    const PathCover cover = MinRootedCover(g, r);
    REQUIRE(cover.size() ==
            static_cast<int>(MaxAntichain(dag, all).vertices.size()));
    REQUIRE(ValidateCover(g, AllPairsDistances(g), cover).ok);
  }
}

TEST_CASE("validation reports problems") {
  const Graph c6 = Cycle(6);
  const DistanceMatrix dm = AllPairsDistances(c6);
  PathCover missing;
  missing.paths = {{0, 1, 2, 3}, {3, 4}};
  const CoverValidation v = ValidateCover(c6, dm, missing);
  CHECK_FALSE(v.ok);
  CHECK(v.uncovered == std::vector<Vertex>{5});

  PathCover long_path;
  long_path.paths = {{0, 1, 2, 3, 4, 5}};
  const CoverValidation w = ValidateCover(c6, dm, long_path);
  CHECK_FALSE(w.ok);
  CHECK(w.path_isometric == std::vector<bool>{false});

  const WCover wc = WCover3kPlus1(4);
  const DistanceMatrix wdm = AllPairsDistances(wc.graph.graph);
  CHECK(ValidateCover(wc.graph.graph, wdm, wc.cover).ok);
  for (int drop = 0; drop < wc.cover.size(); ++drop) {
    PathCover fewer = wc.cover;
    fewer.paths.erase(fewer.paths.begin() + drop);
    CHECK_FALSE(ValidateCover(wc.graph.graph, wdm, fewer).ok);
  }
}

TEST_CASE("cover serialization round trip") {
  const PathCover cover = MinRootedCover(Cycle(6), 2);
  const std::string text = WriteCover(cover);
  CHECK(text.find("# root 2") != std::string::npos);
  const PathCover back = ParseCover(text);
  CHECK(back.paths == cover.paths);
  CHECK(back.root == cover.root);
  CHECK(back.kind == cover.kind);
  const PathCover one = ParseCover(WriteCover(cover, true), true);
  CHECK(one.paths == cover.paths);
  CHECK(CodeOf([] { ParseCover("0 1\n2 x\n"); }) == ErrorCode::kMalformedLine);
}

}  // namespace
}  // namespace ipclab
