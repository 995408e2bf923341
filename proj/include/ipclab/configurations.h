#ifndef IPCLAB_CONFIGURATIONS_H_
#define IPCLAB_CONFIGURATIONS_H_

#include <string>
#include <string_view>
#include <vector>

#include "ipclab/graph.h"

namespace ipclab {

enum class ConfigKind { kTheta, kPrism, kPyramid };

std::string_view ConfigKindName(ConfigKind kind);

// Three induced paths with a prescribed set of cross edges.
//   theta:   every path runs a .. b; anchors {a, b}
//   prism:   path i runs a_i .. b_i; anchors {a_1, a_2, a_3, b_1, b_2, b_3}
//   pyramid: path i runs a .. b_i; anchors {a, b_1, b_2, b_3}
struct ThreePathConfig {
  ConfigKind kind = ConfigKind::kTheta;
  int t = 1;
  std::vector<std::vector<Vertex>> paths;
  std::vector<Vertex> anchors;
};

struct Verdict {
  bool ok = true;
  std::vector<std::string> violations;  // first entry is the first failure

  std::string first() const { return violations.empty() ? "" : violations[0]; }
};

// Checks vertex disjointness, inducedness of each path, that the induced
// subgraph on the union has exactly the path edges plus the kind's allowed
// extra edges (which must be present), and the length bounds for t.
Verdict VerifyThreePathConfiguration(const Graph& g, const ThreePathConfig& c);

struct GeneratedConfig {
  Graph graph;
  ThreePathConfig config;
};

// Smallest instances: theta with three paths of length t+1 (t=1 is K_{2,3}),
// prism with three paths of length t, pyramid with lengths t, t+1, t+1.
GeneratedConfig ThetaGraph(int t);
GeneratedConfig PrismGraph(int t);
GeneratedConfig PyramidGraph(int t);

// A cycle C and an induced (u, v)-path P attached at its ends.
struct FatTurtleWitness {
  int t = 1;
  std::vector<Vertex> cycle;  // cyclic order
  std::vector<Vertex> path;   // u .. v
  Vertex c = 0;
  Vertex c_prime = 0;
};

// Clause labels reported by VerifyFatTurtle, in checking order:
//   "structure"  C is an induced cycle and P an induced path
//   "a"          V(P) and V(C) are disjoint
//   "b"          only u and v see C, and both do
//   "c"          every u-attachment is at cycle distance >= t from every
//                v-attachment
//   "d"          c, c' split C so that the attachments of u and of v lie
//                in different components
//   "length"     |P| >= t
Verdict VerifyFatTurtle(const Graph& g, const FatTurtleWitness& w);

// How an end of P sees the cycle: one vertex, two consecutive vertices, or
// the two ends of a 3-vertex arc.
enum class Attachment { kSingle, kAdjacent, kSpread };

std::string_view AttachmentName(Attachment a);

struct FatTurtleSpec {
  int t = 1;
  Attachment u_attach = Attachment::kSingle;
  Attachment v_attach = Attachment::kSingle;
  // Cycle distance between the nearest u- and v-attachments on the side
  // of c' (`gap_c_prime`) and of c (`gap_c`). Both >= max(t, 2).
  int gap_c_prime = 2;
  int gap_c = 2;
  int path_len = 1;  // >= t
};

struct GeneratedTurtle {
  Graph graph;
  FatTurtleWitness witness;
};

// Labeling: cycle vertices 0..L-1 in order starting with the u-attachment
// block, then path vertices L..L+path_len from u to v.
GeneratedTurtle FatTurtle(const FatTurtleSpec& spec);

// A fixed 4-fat turtle: a 13-cycle and a path of length 4
// whose ends see the cycle through two vertices at distance 2 (u) and
// three consecutive vertices (v).
GeneratedTurtle Figure2Turtle();

// Predicted kind: theta when each end is single-or-spread, prism when both
// ends are adjacent pairs, pyramid otherwise.
ConfigKind PredictedKind(Attachment u, Attachment v);

// From a turtle verified with parameter t+1, the theta/prism/pyramid with
// parameter t formed by P and the two cycle arcs through c and c'.
// Throws kWitnessInvalid if the turtle does not verify or t+1 < 2.
ThreePathConfig ExtractThreePathConfiguration(const Graph& g,
                                              const FatTurtleWitness& w);

}  // namespace ipclab

#endif  // IPCLAB_CONFIGURATIONS_H_
