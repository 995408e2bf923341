#include "ipclab/configurations.h"

#include <algorithm>
#include <set>
#include <utility>

namespace ipclab {

std::string_view ConfigKindName(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::kTheta: return "theta";
    case ConfigKind::kPrism: return "prism";
    case ConfigKind::kPyramid: return "pyramid";
  }
  return "theta";
}

std::string_view AttachmentName(Attachment a) {
  switch (a) {
    case Attachment::kSingle: return "single";
    case Attachment::kAdjacent: return "adjacent";
    case Attachment::kSpread: return "spread";
  }
  return "single";
}

namespace {

using EdgeSet = std::set<std::pair<Vertex, Vertex>>;

std::pair<Vertex, Vertex> Key(Vertex a, Vertex b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

int Length(const std::vector<Vertex>& path) {
  return static_cast<int>(path.size()) - 1;
}

}  // namespace

Verdict VerifyThreePathConfiguration(const Graph& g, const ThreePathConfig& c) {
  Verdict verdict;
  auto fail = [&verdict](std::string why) {
    verdict.ok = false;
    verdict.violations.push_back(std::move(why));
  };
  if (c.paths.size() != 3) {
    fail("need exactly three paths");
    return verdict;
  }
  for (int i = 0; i < 3; ++i) {
    if (!IsInducedPath(g, c.paths[i])) {
      fail("path " + std::to_string(i + 1) + " is not an induced path");
    }
  }
  if (!verdict.ok) return verdict;
  const auto& p = c.paths;

  // Shared vertices allowed per kind.
  std::set<Vertex> shared;
  std::vector<Vertex> expected_anchors;
  switch (c.kind) {
    case ConfigKind::kTheta:
      if (p[0].front() != p[1].front() || p[0].front() != p[2].front() ||
          p[0].back() != p[1].back() || p[0].back() != p[2].back()) {
        fail("theta paths must share both ends");
      }
      if (p[0].front() == p[0].back()) fail("theta ends coincide");
      shared = {p[0].front(), p[0].back()};
      expected_anchors = {p[0].front(), p[0].back()};
      break;
    case ConfigKind::kPyramid:
      if (p[0].front() != p[1].front() || p[0].front() != p[2].front()) {
        fail("pyramid paths must share the apex");
      }
      shared = {p[0].front()};
      expected_anchors = {p[0].front(), p[0].back(), p[1].back(), p[2].back()};
      break;
    case ConfigKind::kPrism:
      expected_anchors = {p[0].front(), p[1].front(), p[2].front(),
                          p[0].back(),  p[1].back(),  p[2].back()};
      break;
  }
  if (!verdict.ok) return verdict;
  if (!c.anchors.empty() && c.anchors != expected_anchors) {
    fail("anchors do not match the path ends");
  }

  std::set<Vertex> seen;
  for (int i = 0; i < 3; ++i) {
    for (Vertex v : p[i]) {
      if (shared.count(v)) continue;
      if (!seen.insert(v).second) {
        fail("paths are not disjoint at vertex " + std::to_string(v));
      }
    }
  }
  // Shared anchors must not reappear inside another path.
  for (Vertex s : shared) {
    for (int i = 0; i < 3; ++i) {
      auto count = std::count(p[i].begin(), p[i].end(), s);
      if (count != 1) fail("anchor " + std::to_string(s) + " misplaced");
    }
  }
  if (!verdict.ok) return verdict;

  EdgeSet allowed;
  for (const auto& path : p) {
    for (size_t j = 0; j + 1 < path.size(); ++j) {
      allowed.insert(Key(path[j], path[j + 1]));
    }
  }
  EdgeSet required;
  auto triangle = [&](Vertex x, Vertex y, Vertex z) {
    required.insert(Key(x, y));
    required.insert(Key(y, z));
    required.insert(Key(x, z));
  };
  if (c.kind == ConfigKind::kPrism) {
    triangle(p[0].front(), p[1].front(), p[2].front());
    triangle(p[0].back(), p[1].back(), p[2].back());
  } else if (c.kind == ConfigKind::kPyramid) {
    triangle(p[0].back(), p[1].back(), p[2].back());
  }
  for (auto [x, y] : required) {
    if (!g.HasEdge(x, y)) {
      fail("missing triangle edge " + std::to_string(x) + "-" +
           std::to_string(y));
    }
    allowed.insert({x, y});
  }

  std::set<Vertex> all(seen.begin(), seen.end());
  all.insert(shared.begin(), shared.end());
  for (Vertex x : all) {
    for (Vertex y : g.neighbors(x)) {
      if (x < y && all.count(y) && !allowed.count({x, y})) {
        fail("forbidden edge " + std::to_string(x) + "-" + std::to_string(y));
      }
    }
  }

  const int t = c.t;
  std::vector<int> lengths = {Length(p[0]), Length(p[1]), Length(p[2])};
  switch (c.kind) {
    case ConfigKind::kTheta:
      for (int i = 0; i < 3; ++i) {
        if (lengths[i] < t + 1) {
          fail("theta path " + std::to_string(i + 1) + " shorter than t+1");
        }
      }
      break;
    case ConfigKind::kPrism:
      for (int i = 0; i < 3; ++i) {
        if (lengths[i] < t) {
          fail("prism path " + std::to_string(i + 1) + " shorter than t");
        }
      }
      break;
    case ConfigKind::kPyramid: {
      int long_paths = 0;
      for (int i = 0; i < 3; ++i) {
        if (lengths[i] < t) {
          fail("pyramid path " + std::to_string(i + 1) + " shorter than t");
        }
        if (lengths[i] >= t + 1) ++long_paths;
      }
      if (long_paths < 2) fail("pyramid needs two paths of length >= t+1");
      break;
    }
  }
  return verdict;
}

namespace {

void RequireT(int t) {
  if (t < 1) throw Error(ErrorCode::kInvalidParam, "t must be >= 1");
}

// Appends a fresh path of `internal` new vertices from `from` to `to`;
// returns the full vertex sequence.
std::vector<Vertex> AddPath(Vertex from, Vertex to, int internal,
                            int& next_id, std::vector<Edge>& edges) {
  std::vector<Vertex> path{from};
  for (int i = 0; i < internal; ++i) path.push_back(next_id++);
  path.push_back(to);
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    edges.emplace_back(path[i], path[i + 1]);
  }
  return path;
}

}  // namespace

GeneratedConfig ThetaGraph(int t) {
  RequireT(t);
  std::vector<Edge> edges;
  int next = 2;
  ThreePathConfig c{ConfigKind::kTheta, t, {}, {0, 1}};
  for (int i = 0; i < 3; ++i) c.paths.push_back(AddPath(0, 1, t, next, edges));
  return {Graph::FromEdges(next, edges), c};
}

GeneratedConfig PrismGraph(int t) {
  RequireT(t);
  std::vector<Edge> edges;
  // a_i = i, b_i = 3 + i
  int next = 6;
  ThreePathConfig c{ConfigKind::kPrism, t, {}, {0, 1, 2, 3, 4, 5}};
  for (int i = 0; i < 3; ++i) {
    c.paths.push_back(AddPath(i, 3 + i, t - 1, next, edges));
  }
  for (auto [x, y] : {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}, Edge{3, 4},
                      Edge{4, 5}, Edge{3, 5}}) {
    edges.emplace_back(x, y);
  }
  return {Graph::FromEdges(next, edges), c};
}

GeneratedConfig PyramidGraph(int t) {
  RequireT(t);
  std::vector<Edge> edges;
  // apex 0, b_i = 1 + i
  int next = 4;
  ThreePathConfig c{ConfigKind::kPyramid, t, {}, {0, 1, 2, 3}};
  c.paths.push_back(AddPath(0, 1, t - 1, next, edges));
  c.paths.push_back(AddPath(0, 2, t, next, edges));
  c.paths.push_back(AddPath(0, 3, t, next, edges));
  for (auto [x, y] : {Edge{1, 2}, Edge{2, 3}, Edge{1, 3}}) {
    edges.emplace_back(x, y);
  }
  return {Graph::FromEdges(next, edges), c};
}

namespace {

bool IsInducedCycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const size_t len = cycle.size();
  if (len < 3) return false;
  std::set<Vertex> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != len) return false;
  for (Vertex v : cycle) {
    if (v < 0 || v >= g.num_vertices()) return false;
  }
  for (size_t i = 0; i < len; ++i) {
    for (size_t j = i + 1; j < len; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.HasEdge(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

// Positions on the cycle adjacent to `v`, ascending.
std::vector<int> Attachments(const Graph& g, const std::vector<Vertex>& cycle,
                             Vertex v) {
  std::vector<int> out;
  for (size_t i = 0; i < cycle.size(); ++i) {
    if (g.HasEdge(v, cycle[i])) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace

Verdict VerifyFatTurtle(const Graph& g, const FatTurtleWitness& w) {
  Verdict verdict;
  auto fail = [&verdict](std::string clause) {
    verdict.ok = false;
    verdict.violations.push_back(std::move(clause));
  };
  if (!IsInducedCycle(g, w.cycle) || !IsInducedPath(g, w.path)) {
    fail("structure");
    return verdict;
  }
  const Vertex u = w.path.front(), v = w.path.back();
  const int len = static_cast<int>(w.cycle.size());

  // (a)
  std::set<Vertex> on_cycle(w.cycle.begin(), w.cycle.end());
  bool disjoint = true;
  for (Vertex x : w.path) disjoint = disjoint && !on_cycle.count(x);
  if (!disjoint) fail("a");

  // (b)
  const auto u_att = Attachments(g, w.cycle, u);
  const auto v_att = Attachments(g, w.cycle, v);
  bool clause_b = !u_att.empty() && !v_att.empty() && u != v;
  for (size_t i = 1; i + 1 < w.path.size(); ++i) {
    if (!Attachments(g, w.cycle, w.path[i]).empty()) clause_b = false;
  }
  if (!clause_b) fail("b");

  // (c)
  bool clause_c = true;
  for (int i : u_att) {
    for (int j : v_att) {
      const int diff = std::abs(i - j);
      if (std::min(diff, len - diff) < w.t) clause_c = false;
    }
  }
  if (!clause_c) fail("c");

  // (d)
  bool clause_d = false;
  auto pc = std::find(w.cycle.begin(), w.cycle.end(), w.c);
  auto pc2 = std::find(w.cycle.begin(), w.cycle.end(), w.c_prime);
  if (pc != w.cycle.end() && pc2 != w.cycle.end() && w.c != w.c_prime) {
    const int ic = static_cast<int>(pc - w.cycle.begin());
    const int ic2 = static_cast<int>(pc2 - w.cycle.begin());
    // Side of each position: 1 on the forward arc c -> c', 2 on the other,
    // 0 for c and c' themselves.
    auto side = [&](int pos) {
      if (pos == ic || pos == ic2) return 0;
      const int from_c = (pos - ic + len) % len;
      const int to_c2 = (ic2 - ic + len) % len;
      return from_c < to_c2 ? 1 : 2;
    };
    const int arc1 = (ic2 - ic + len) % len - 1;
    const int arc2 = len - 2 - arc1;
    auto common_side = [&](const std::vector<int>& att) {
      int s = -1;
      for (int pos : att) {
        const int here = side(pos);
        if (here == 0 || (s != -1 && here != s)) return 0;
        s = here;
      }
      return s;
    };
    const int su = common_side(u_att), sv = common_side(v_att);
    clause_d = arc1 > 0 && arc2 > 0 && su > 0 && sv > 0 && su != sv;
  }
  if (!clause_d) fail("d");

  if (static_cast<int>(w.path.size()) - 1 < w.t) fail("length");
  return verdict;
}

ConfigKind PredictedKind(Attachment u, Attachment v) {
  const bool u_adj = u == Attachment::kAdjacent;
  const bool v_adj = v == Attachment::kAdjacent;
  if (u_adj && v_adj) return ConfigKind::kPrism;
  if (u_adj || v_adj) return ConfigKind::kPyramid;
  return ConfigKind::kTheta;
}

GeneratedTurtle FatTurtle(const FatTurtleSpec& s) {
  RequireT(s.t);
  const int min_gap = std::max(s.t, 2);
  if (s.gap_c < min_gap || s.gap_c_prime < min_gap) {
    throw Error(ErrorCode::kInvalidParam,
                "arc gaps must be >= max(t, 2)");
  }
  if (s.path_len < s.t) {
    throw Error(ErrorCode::kInvalidParam, "path length must be >= t");
  }
  auto block = [](Attachment a) {
    return a == Attachment::kSingle ? 1 : a == Attachment::kAdjacent ? 2 : 3;
  };
  const int u_block = block(s.u_attach), v_block = block(s.v_attach);
  const int len = u_block + (s.gap_c_prime - 1) + v_block + (s.gap_c - 1);

  std::vector<Edge> edges;
  GeneratedTurtle out;
  auto& w = out.witness;
  w.t = s.t;
  for (Vertex i = 0; i < len; ++i) {
    w.cycle.push_back(i);
    edges.emplace_back(i, (i + 1) % len);
  }
  const int v_start = u_block + s.gap_c_prime - 1;
  w.c_prime = u_block + (s.gap_c_prime - 1) / 2;
  w.c = v_start + v_block + (s.gap_c - 1) / 2;

  for (int i = 0; i <= s.path_len; ++i) w.path.push_back(len + i);
  for (int i = 0; i < s.path_len; ++i) edges.emplace_back(len + i, len + i + 1);
  const Vertex u = w.path.front(), v = w.path.back();
  auto attach = [&](Vertex end, int start, Attachment a) {
    edges.emplace_back(end, start);
    if (a == Attachment::kAdjacent) edges.emplace_back(end, start + 1);
    if (a == Attachment::kSpread) edges.emplace_back(end, start + 2);
  };
  attach(u, 0, s.u_attach);
  attach(v, v_start, s.v_attach);
  out.graph = Graph::FromEdges(len + s.path_len + 1, edges);
  return out;
}

GeneratedTurtle Figure2Turtle() {
  // Cycle read clockwise from the top-left corner: the top row (5
  // vertices), the right tip, the bottom row (6 vertices), the left tip.
  // c' is the second top vertex (1), c the last-but-one bottom vertex (10).
  constexpr int kCycle = 13;
  std::vector<Edge> edges;
  GeneratedTurtle out;
  auto& w = out.witness;
  w.t = 4;
  for (Vertex i = 0; i < kCycle; ++i) {
    w.cycle.push_back(i);
    edges.emplace_back(i, (i + 1) % kCycle);
  }
  w.c_prime = 1;
  w.c = 10;
  w.path = {13, 14, 15, 16, 17};
  for (int i = 13; i < 17; ++i) edges.emplace_back(i, i + 1);
  for (Vertex x : {0, 11}) edges.emplace_back(13, x);
  for (Vertex x : {4, 5, 6}) edges.emplace_back(17, x);
  out.graph = Graph::FromEdges(18, edges);
  return out;
}

ThreePathConfig ExtractThreePathConfiguration(const Graph& g,
                                              const FatTurtleWitness& w) {
  if (w.t < 2) {
    throw Error(ErrorCode::kWitnessInvalid,
                "extraction needs a turtle with parameter >= 2");
  }
  const Verdict verdict = VerifyFatTurtle(g, w);
  if (!verdict.ok) {
    throw Error(ErrorCode::kWitnessInvalid,
                "turtle fails clause " + verdict.first());
  }
  const int len = static_cast<int>(w.cycle.size());
  const int start = static_cast<int>(
      std::find(w.cycle.begin(), w.cycle.end(), w.c) - w.cycle.begin());
  const Vertex u = w.path.front(), v = w.path.back();

  // a_i walks the cycle from c; flip the direction if needed so that u's
  // attachments come before c'.
  int dir = 1;
  auto a = [&](int i) { return w.cycle[((start + dir * i) % len + len) % len]; };
  auto index_of = [&](Vertex x) {
    for (int i = 0; i < len; ++i) {
      if (a(i) == x) return i;
    }
    return -1;
  };
  auto attach_range = [&](Vertex end) {
    int lo = len, hi = -1;
    for (int i = 0; i < len; ++i) {
      if (g.HasEdge(end, a(i))) {
        lo = std::min(lo, i);
        hi = std::max(hi, i);
      }
    }
    return std::make_pair(lo, hi);
  };
  if (attach_range(u).first > index_of(w.c_prime)) dir = -1;
  const auto [i_lo, i_hi] = attach_range(u);
  const auto [j_lo, j_hi] = attach_range(v);

  // P1: a_{i-} back through c to a_{j+}. P2: a_{i+} forward through c'
  // to a_{j-}.
  std::vector<Vertex> p1, p2;
  for (int i = i_lo; i >= 0; --i) p1.push_back(a(i));
  for (int i = len - 1; i >= j_hi; --i) p1.push_back(a(i));
  for (int i = i_hi; i <= j_lo; ++i) p2.push_back(a(i));

  auto kind_of = [](int lo, int hi) {
    return hi == lo       ? Attachment::kSingle
           : hi == lo + 1 ? Attachment::kAdjacent
                          : Attachment::kSpread;
  };
  const Attachment u_kind = kind_of(i_lo, i_hi);
  const Attachment v_kind = kind_of(j_lo, j_hi);

  ThreePathConfig c;
  c.t = w.t - 1;
  c.kind = PredictedKind(u_kind, v_kind);
  const std::vector<Vertex>& p = w.path;

  auto concat = [](std::vector<Vertex> head, const std::vector<Vertex>& mid,
                   std::vector<Vertex> tail) {
    head.insert(head.end(), mid.begin(), mid.end());
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
  };
  auto reversed = [](std::vector<Vertex> x) {
    std::reverse(x.begin(), x.end());
    return x;
  };
  const bool u_single = u_kind == Attachment::kSingle;
  const bool v_single = v_kind == Attachment::kSingle;
  // Joining vertex on the u side: the lone attachment, or u itself.
  auto u_head = [&](bool via_path) -> std::vector<Vertex> {
    if (u_single) return via_path ? std::vector<Vertex>{a(i_lo)}
                                  : std::vector<Vertex>{};
    return via_path ? std::vector<Vertex>{} : std::vector<Vertex>{u};
  };
  auto v_tail = [&](bool via_path) -> std::vector<Vertex> {
    if (v_single) return via_path ? std::vector<Vertex>{a(j_lo)}
                                  : std::vector<Vertex>{};
    return via_path ? std::vector<Vertex>{} : std::vector<Vertex>{v};
  };

  switch (c.kind) {
    case ConfigKind::kTheta:
      c.paths = {concat(u_head(true), p, v_tail(true)),
                 concat(u_head(false), p1, v_tail(false)),
                 concat(u_head(false), p2, v_tail(false))};
      c.anchors = {c.paths[0].front(), c.paths[0].back()};
      break;
    case ConfigKind::kPrism:
      c.paths = {p, p1, p2};
      c.anchors = {p.front(), p1.front(), p2.front(),
                   p.back(),  p1.back(),  p2.back()};
      break;
    case ConfigKind::kPyramid:
      if (v_kind == Attachment::kAdjacent) {
        c.paths = {concat(u_head(true), p, {}), concat(u_head(false), p1, {}),
                   concat(u_head(false), p2, {})};
      } else {
        c.paths = {reversed(concat({}, p, v_tail(true))),
                   reversed(concat({}, p1, v_tail(false))),
                   reversed(concat({}, p2, v_tail(false)))};
      }
      c.anchors = {c.paths[0].front(), c.paths[0].back(), c.paths[1].back(),
                   c.paths[2].back()};
      break;
  }
  return c;
}

}  // namespace ipclab
