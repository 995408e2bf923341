#include "ipclab/metric.h"

#include "ipclab/generators.h"
#include "test_util.h"

namespace ipclab {
namespace {

using testing::CodeOf;

TEST_CASE("half integers") {
  CHECK(HalfInteger{3}.ToString() == "1.5");
  CHECK(HalfInteger{4}.ToString() == "2");
  CHECK(HalfInteger{-1}.ToString() == "-0.5");
  CHECK(HalfInteger::FromInt(2) > HalfInteger{3});
  CHECK(HalfInteger{3}.ToDouble() == 1.5);
}

TEST_CASE("Gromov product") {
  const DistanceMatrix p3 = AllPairsDistances(PathGraph(3));
  CHECK(GromovProduct(p3, 0, 2, 1).doubled == 0);
  const DistanceMatrix c6 = AllPairsDistances(Cycle(6));
  for (Vertex x = 0; x < 6; ++x) {
    CHECK(GromovProduct(c6, x, x, 0) == HalfInteger::FromInt(c6.at(x, 0)));
  }
  const DistanceMatrix c4 = AllPairsDistances(Cycle(4));
  CHECK(GromovProduct(c4, 1, 3, 0).doubled == 0);
}

TEST_CASE("hyperbolicity examples") {
  CHECK(Hyperbolicity(AllPairsDistances(Cycle(4))) == HalfInteger::FromInt(1));
  CHECK(Hyperbolicity(AllPairsDistances(Star(5))).doubled == 0);
  CHECK(Hyperbolicity(AllPairsDistances(Complete(3))).doubled == 0);
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    CHECK(Hyperbolicity(AllPairsDistances(RandomTree(30, seed))).doubled == 0);
  }
  for (int k = 1; k <= 4; ++k) {
    const HalfInteger d = Hyperbolicity(AllPairsDistances(Cycle(4 * k)));
    CHECK(d >= HalfInteger::FromInt((k + 3) / 4));
    CHECK(d == HalfInteger::FromInt(k));
  }
}

TEST_CASE("four-point and Gromov-product forms agree") {
  for (uint64_t seed = 1; seed <= 25; ++seed) {
    const Graph g = RandomConnected(12, 0.2 + 0.02 * static_cast<double>(seed),
                                    seed);
    const DistanceMatrix dm = AllPairsDistances(g);
    REQUIRE(Hyperbolicity(dm) == HyperbolicityByGromovProducts(dm));
  }
}

TEST_CASE("hyperbolicity threads and caps") {
  const DistanceMatrix dm = AllPairsDistances(RandomConnected(40, 0.1, 2));
  HyperbolicityOptions one, four;
  four.threads = 4;
  CHECK(Hyperbolicity(dm, one) == Hyperbolicity(dm, four));
  HyperbolicityOptions capped;
  capped.vertex_cap = 30;
  CHECK(CodeOf([&] { Hyperbolicity(dm, capped); }) == ErrorCode::kTooLarge);
  capped.force = true;
  CHECK(Hyperbolicity(dm, capped) == Hyperbolicity(dm));
  const DistanceMatrix split =
      AllPairsDistances(testing::G(4, {{0, 1}, {2, 3}}));
  CHECK(CodeOf([&] { Hyperbolicity(split); }) == ErrorCode::kDisconnected);
}

}  // namespace
}  // namespace ipclab
