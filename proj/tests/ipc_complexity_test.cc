#include "ipclab/ipc_complexity.h"

#include "ipclab/bfs_dag.h"
#include "ipclab/generators.h"
#include "ipclab/oracle.h"
#include "test_util.h"

namespace ipclab {
namespace {

using testing::CodeOf;

TEST_CASE("gamma table examples") {
  const Graph p4 = PathGraph(4);
  const GammaTable t = ComputeGammaTable(p4, AllPairsDistances(p4), 0, 0);
  CHECK(t.gamma == std::vector<int32_t>{1, 1, 1, 1});

  const Graph c4 = Cycle(4);
  const GammaTable u = ComputeGammaTable(c4, AllPairsDistances(c4), 0, 1);
  CHECK(u.gamma[3] == 2);
  // Via 2 (farther from the root) and via 0 (closer): both need two paths.
  CHECK(u.gamma_up[3] == 2);
  CHECK(u.gamma_down[3] == 2);
  CHECK(u.beta_up[3] == 1);
  CHECK(u.beta_down[3] == 1);
}

TEST_CASE("base values at the source") {
  const Graph g = RandomConnected(15, 0.2, 3);
  const DistanceMatrix dm = AllPairsDistances(g);
  for (Vertex r = 0; r < 15; r += 4) {
    for (Vertex x = 0; x < 15; x += 3) {
      const GammaTable t = ComputeGammaTable(g, dm, r, x);
      CHECK(t.gamma[x] == 1);
      CHECK(t.gamma_down[x] == 1);
      CHECK(t.gamma_flat[x] == 1);
      CHECK(t.gamma_up[x] == 1);
      CHECK(t.beta_down[x] == 0);
      CHECK(t.beta_up[x] == 0);
    }
  }
}

TEST_CASE("ipco for root") {
  CHECK(IpcoForRoot(PathGraph(6), 0).value == 1);
  for (Vertex r = 0; r < 4; ++r) {
    CHECK(IpcoForRoot(Cycle(4), r).value == 2);
    CHECK(IpcoForRoot(Complete(4), r).value == 2);
  }
}

TEST_CASE("ipco examples") {
  CHECK(ComputeIpco(PathGraph(7)).value == 1);
  CHECK(ComputeIpco(Star(3)).value == 2);
  CHECK(ComputeIpco(Cycle(6)).value == 2);
  CHECK(ComputeIpco(Complete(4)).value == 2);
  const ApexGraph x = XGraph(4);
  CHECK(ComputeIpco(Glue(x, x).graph).value >= 4);
  CHECK(ComputeIpco(testing::G(1, {})).value == 1);
  CHECK(CodeOf([] { ComputeIpco(testing::G(3, {{0, 1}})); }) ==
        ErrorCode::kDisconnected);
  CHECK(CodeOf([] { ComputeIpco(Graph{}); }) == ErrorCode::kInvalidParam);
}

TEST_CASE("witness paths") {
  const Graph c4 = Cycle(4);
  const GammaTable t = ComputeGammaTable(c4, AllPairsDistances(c4), 0, 1);
  CHECK(WitnessPath(c4, t, 3) == std::vector<Vertex>{1, 2, 3});
  CHECK(WitnessPath(c4, t, 1) == std::vector<Vertex>{1});
  const Graph p5 = PathGraph(5);
  const GammaTable u = ComputeGammaTable(p5, AllPairsDistances(p5), 0, 2);
  CHECK(WitnessPath(p5, u, 4) == std::vector<Vertex>{2, 3, 4});
}

TEST_CASE("witness paths realize gamma") {
  for (uint64_t seed = 1; seed <= 15; ++seed) {
    const Graph g = RandomConnected(14, 0.22, seed);
    const DistanceMatrix dm = AllPairsDistances(g);
    const Vertex r = static_cast<Vertex>(seed % 14);
    const BfsDag dag = BfsDag::Build(g, r);
    for (Vertex x = 0; x < 14; ++x) {
      const GammaTable t = ComputeGammaTable(g, dm, r, x);
      for (Vertex v = 0; v < 14; ++v) {
        const auto p = WitnessPath(g, t, v);
        REQUIRE(p.front() == x);
        REQUIRE(p.back() == v);
        REQUIRE(IsIsometricPath(g, dm, p));
        REQUIRE(static_cast<int>(MaxAntichain(dag, p).vertices.size()) ==
                t.gamma[v]);
      }
    }
  }
}

TEST_CASE("dp agrees with oracle on random graphs") {
  for (uint64_t seed = 100; seed < 140; ++seed) {
    const Graph g = RandomConnected(9, 0.35, seed);
    const DistanceMatrix dm = AllPairsDistances(g);
    for (Vertex r = 0; r < 9; ++r) {
      REQUIRE(IpcoForRoot(g, dm, r).value == oracle::IpcorBruteForce(g, r));
    }
  }
}

TEST_CASE("report is independent of thread count") {
  const Graph g = RandomConnected(80, 0.06, 9);
  const ComplexityReport a = ComputeIpco(g, 1);
  const ComplexityReport b = ComputeIpco(g, 4);
  CHECK(a.value == b.value);
  CHECK(a.best_root == b.best_root);
  CHECK(a.per_root == b.per_root);
  CHECK(a.witness.path == b.witness.path);
}

TEST_CASE("per-component ipco") {
  const Graph g = testing::G(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}});
  const PerComponentReport r = ComputeIpcoPerComponent(g);
  CHECK(r.value == 2);
  REQUIRE(r.components.size() == 3);
  CHECK(r.components[0].vertices == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(r.components[1].report.value == 1);
  CHECK(r.components[2].vertices == std::vector<Vertex>{6});
}

}  // namespace
}  // namespace ipclab
