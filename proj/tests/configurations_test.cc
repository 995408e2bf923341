#include "ipclab/configurations.h"

#include "ipclab/generators.h"
#include "test_util.h"

namespace ipclab {
namespace {

using testing::CodeOf;

Graph WithoutEdge(const Graph& g, Edge drop) {
  std::vector<Edge> edges;
  for (Edge e : g.Edges()) {
    if (e != drop) edges.push_back(e);
  }
  return Graph::FromEdges(g.num_vertices(), edges);
}

TEST_CASE("generated configurations verify") {
  for (int t = 1; t <= 5; ++t) {
    for (const GeneratedConfig& c : {ThetaGraph(t), PrismGraph(t), PyramidGraph(t)}) {
      const Verdict v = VerifyThreePathConfiguration(c.graph, c.config);
      CHECK_MESSAGE(v.ok, ConfigKindName(c.config.kind), " t=", t, ": ",
                    v.first());
    }
  }
}

TEST_CASE("smallest instances") {
  const GeneratedConfig theta = ThetaGraph(1);
  CHECK(theta.graph.num_vertices() == 5);
  CHECK(theta.graph.num_edges() == 6);
  const GeneratedConfig prism = PrismGraph(1);
  CHECK(prism.graph.num_vertices() == 6);
  CHECK(prism.graph.num_edges() == 9);
}

TEST_CASE("verifier rejects broken configurations") {
  const GeneratedConfig prism = PrismGraph(2);
  const Graph broken = WithoutEdge(prism.graph, {0, 1});
  CHECK_FALSE(VerifyThreePathConfiguration(broken, prism.config).ok);

  const GeneratedConfig theta = ThetaGraph(2);
  ThreePathConfig short_theta = theta.config;
  short_theta.t = 3;
  CHECK_FALSE(VerifyThreePathConfiguration(theta.graph, short_theta).ok);

  std::vector<Edge> edges = theta.graph.Edges();
  const auto& p0 = theta.config.paths[0];
  const auto& p1 = theta.config.paths[1];
  edges.emplace_back(std::min(p0[1], p1[1]), std::max(p0[1], p1[1]));
  const Graph chorded = Graph::FromEdges(theta.graph.num_vertices(), edges);
  CHECK_FALSE(VerifyThreePathConfiguration(chorded, theta.config).ok);
}

TEST_CASE("figure 2 turtle") {
  const GeneratedTurtle fig = Figure2Turtle();
  CHECK(VerifyFatTurtle(fig.graph, fig.witness).ok);
  FatTurtleWitness w = fig.witness;
  w.t = 6;
  const Verdict v = VerifyFatTurtle(fig.graph, w);
  CHECK_FALSE(v.ok);
  CHECK(v.first() == "c");
  const ThreePathConfig c = ExtractThreePathConfiguration(fig.graph, fig.witness);
  CHECK(c.t == 3);
  CHECK(VerifyThreePathConfiguration(fig.graph, c).ok);
}

TEST_CASE("overlapping path violates clause a") {
  const GeneratedTurtle fig = Figure2Turtle();
  FatTurtleWitness w = fig.witness;
  w.path = {fig.witness.cycle[2], fig.witness.cycle[3]};
  const Verdict v = VerifyFatTurtle(fig.graph, w);
  CHECK_FALSE(v.ok);
  CHECK(v.first() == "a");
}

TEST_CASE("extraction kinds follow the attachment cases") {
  const Attachment all[] = {Attachment::kSingle, Attachment::kAdjacent,
                            Attachment::kSpread};
  for (int t = 1; t <= 3; ++t) {
    for (Attachment u : all) {
      for (Attachment v : all) {
        FatTurtleSpec spec;
        spec.t = t + 1;
        spec.u_attach = u;
        spec.v_attach = v;
        spec.gap_c = spec.gap_c_prime = std::max(t + 1, 2);
        spec.path_len = t + 1;
        const GeneratedTurtle turtle = FatTurtle(spec);
        REQUIRE(VerifyFatTurtle(turtle.graph, turtle.witness).ok);
        const ThreePathConfig c =
            ExtractThreePathConfiguration(turtle.graph, turtle.witness);
        const Verdict verdict = VerifyThreePathConfiguration(turtle.graph, c);
        CHECK_MESSAGE(verdict.ok, verdict.first());
        CHECK(c.kind == PredictedKind(u, v));
      }
    }
  }
  CHECK(PredictedKind(Attachment::kSingle, Attachment::kSingle) ==
        ConfigKind::kTheta);
  CHECK(PredictedKind(Attachment::kAdjacent, Attachment::kAdjacent) ==
        ConfigKind::kPrism);
  CHECK(PredictedKind(Attachment::kAdjacent, Attachment::kSingle) ==
        ConfigKind::kPyramid);
}

TEST_CASE("extraction rejects unverified turtles") {
  const GeneratedTurtle fig = Figure2Turtle();
  FatTurtleWitness w = fig.witness;
  w.t = 6;
  CHECK(CodeOf([&] { ExtractThreePathConfiguration(fig.graph, w); }) ==
        ErrorCode::kWitnessInvalid);
  w.t = 1;
  CHECK(CodeOf([&] { ExtractThreePathConfiguration(fig.graph, w); }) ==
        ErrorCode::kWitnessInvalid);
}

}  // namespace
}  // namespace ipclab
