#include "ipclab/graph.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "ipclab/parallel.h"

namespace ipclab {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kIdOutOfRange: return "IdOutOfRange";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kNotAPath: return "NotAPath";
    case ErrorCode::kNotIsometric: return "NotIsometric";
    case ErrorCode::kUnreachable: return "Unreachable";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kTruncated: return "Truncated";
    case ErrorCode::kInvalidParam: return "InvalidParam";
    case ErrorCode::kWitnessInvalid: return "WitnessInvalid";
    case ErrorCode::kCertification: return "Certification";
  }
  return "Unknown";
}

Graph Graph::FromEdges(int num_vertices, std::span<const Edge> edges) {
  if (num_vertices < 0) {
    throw Error(ErrorCode::kInvalidParam, "negative vertex count");
  }
  std::vector<std::vector<Vertex>> lists(num_vertices);
  for (size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    int line = static_cast<int>(i) + 1;
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
      throw Error(ErrorCode::kIdOutOfRange,
                  "edge " + std::to_string(u) + " " + std::to_string(v) +
                      " outside [0, " + std::to_string(num_vertices) + ")",
                  line);
    }
    if (u == v) {
      throw Error(ErrorCode::kSelfLoop,
                  "self-loop at vertex " + std::to_string(u), line);
    }
    lists[u].push_back(v);
    lists[v].push_back(u);
  }

  Graph g;
  g.offsets_.assign(num_vertices + 1, 0);
  for (int v = 0; v < num_vertices; ++v) {
    auto& list = lists[v];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) {
      // Report the later of the two occurrences.
      Vertex w = *dup;
      int line = 0, seen = 0;
      for (size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = edges[i];
        if ((a == v && b == w) || (a == w && b == v)) {
          if (++seen == 2) {
            line = static_cast<int>(i) + 1;
            break;
          }
        }
      }
      throw Error(ErrorCode::kDuplicateEdge,
                  "duplicate edge " + std::to_string(std::min(v, w)) + " " +
                      std::to_string(std::max(v, w)),
                  line);
    }
    g.offsets_[v + 1] = g.offsets_[v] + static_cast<int32_t>(list.size());
  }
  g.adjacency_.reserve(g.offsets_.back());
  for (auto& list : lists) {
    g.adjacency_.insert(g.adjacency_.end(), list.begin(), list.end());
  }
  return g;
}

bool Graph::HasEdge(Vertex u, Vertex v) const {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

uint64_t Graph::Fingerprint() const {
  uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](uint32_t value) {
    for (int i = 0; i < 4; ++i) {
      h ^= (value >> (8 * i)) & 0xffu;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<uint32_t>(num_vertices()));
  for (auto [u, v] : Edges()) {
    mix(static_cast<uint32_t>(u));
    mix(static_cast<uint32_t>(v));
  }
  return h;
}

namespace {

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r') {
      ++i;
    }
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

bool ParseInt(std::string_view field, long long* out) {
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(),
                                   *out);
  return ec == std::errc() && ptr == field.data() + field.size();
}

}  // namespace

Graph ParseEdgeList(std::string_view text, const ParseOptions& options) {
  const long long shift = options.one_based ? 1 : 0;
  long long declared_n = -1, declared_m = -1;
  int header_line = 0;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;
  long long max_id = -1;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }

    auto fields = SplitFields(line);
    if (fields.empty()) continue;

    auto malformed = [&](const std::string& why) {
      return Error(ErrorCode::kMalformedLine,
                   "line " + std::to_string(line_no) + ": " + why, line_no);
    };

    if (fields[0] == "p") {
      if (header_line != 0) throw malformed("second header line");
      if (!edges.empty()) throw malformed("header after edges");
      if (fields.size() != 3 || !ParseInt(fields[1], &declared_n) ||
          !ParseInt(fields[2], &declared_m) || declared_n < 0 ||
          declared_m < 0) {
        throw malformed("expected 'p <n> <m>'");
      }
      header_line = line_no;
      continue;
    }
    long long u = 0, v = 0;
    if (fields.size() != 2 || !ParseInt(fields[0], &u) ||
        !ParseInt(fields[1], &v)) {
      throw malformed("expected '<u> <v>'");
    }
    u -= shift;
    v -= shift;
    if (u < 0 || v < 0 || u > INT32_MAX - 1 || v > INT32_MAX - 1 ||
        (declared_n >= 0 && (u >= declared_n || v >= declared_n))) {
      throw Error(ErrorCode::kIdOutOfRange,
                  "line " + std::to_string(line_no) + ": vertex id out of range",
                  line_no);
    }
    if (u == v) {
      throw Error(ErrorCode::kSelfLoop,
                  "line " + std::to_string(line_no) + ": self-loop at " +
                      std::to_string(u + shift),
                  line_no);
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    edge_lines.push_back(line_no);
    max_id = std::max({max_id, u, v});
  }

  int n = declared_n >= 0 ? static_cast<int>(declared_n)
                          : static_cast<int>(max_id + 1);
  if (declared_m >= 0 && declared_m != static_cast<long long>(edges.size())) {
    throw Error(ErrorCode::kMalformedLine,
                "line " + std::to_string(header_line) + ": header declares " +
                    std::to_string(declared_m) + " edges, found " +
                    std::to_string(edges.size()),
                header_line);
  }
  if (declared_n < 0) {
    std::vector<char> seen(n, 0);
    for (auto [u, v] : edges) seen[u] = seen[v] = 1;
    for (int v = 0; v < n; ++v) {
      if (!seen[v]) {
        throw Error(ErrorCode::kIdOutOfRange,
                    "vertex " + std::to_string(v + shift) +
                        " has no edge; declare n with a 'p' header to allow "
                        "isolated vertices");
      }
    }
  }
  try {
    return Graph::FromEdges(n, edges);
  } catch (const Error& e) {
    int line = e.line() > 0 ? edge_lines[e.line() - 1] : 0;
    throw Error(e.code(), "line " + std::to_string(line) + ": " + e.what(),
                line);
  }
}

Graph ReadEdgeListFile(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kMalformedLine, "cannot open " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseEdgeList(buffer.str(), options);
}

std::string WriteEdgeList(const Graph& g, bool one_based) {
  const int shift = one_based ? 1 : 0;
  std::ostringstream out;
  out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.Edges()) {
    out << u + shift << ' ' << v + shift << '\n';
  }
  return out.str();
}

std::vector<Vertex> BfsInto(const Graph& g, Vertex source,
                            std::span<int32_t> dist) {
  std::fill(dist.begin(), dist.end(), kUnreachable);
  std::vector<Vertex> order;
  order.reserve(g.num_vertices());
  dist[source] = 0;
  order.push_back(source);
  for (size_t head = 0; head < order.size(); ++head) {
    Vertex u = order[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        order.push_back(w);
      }
    }
  }
  return order;
}

DistanceRow BfsDistances(const Graph& g, Vertex source) {
  DistanceRow row;
  row.source = source;
  row.dist.resize(g.num_vertices());
  BfsInto(g, source, row.dist);
  return row;
}

DistanceMatrix AllPairsDistances(const Graph& g, int threads) {
  DistanceMatrix dm(g.num_vertices());
  ParallelFor(g.num_vertices(), threads,
              [&](int s) { BfsInto(g, s, dm.mutable_row(s)); });
  return dm;
}

bool IsConnected(const Graph& g) {
  if (g.num_vertices() <= 1) return true;
  std::vector<int32_t> dist(g.num_vertices());
  return static_cast<int>(BfsInto(g, 0, dist).size()) == g.num_vertices();
}

std::vector<int> ConnectedComponents(const Graph& g, int* num_components) {
  std::vector<int> comp(g.num_vertices(), -1);
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (comp[w] == -1) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  if (num_components) *num_components = count;
  return comp;
}

Graph InducedSubgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> index(g.num_vertices(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    index[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex u : vertices) {
    for (Vertex w : g.neighbors(u)) {
      if (index[w] >= 0 && u < w) edges.emplace_back(index[u], index[w]);
    }
  }
  return Graph::FromEdges(static_cast<int>(vertices.size()), edges);
}

namespace {

void CheckSimplePath(const Graph& g, std::span<const Vertex> seq) {
  if (seq.empty()) throw Error(ErrorCode::kNotAPath, "empty sequence");
  std::vector<Vertex> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kNotAPath, "sequence repeats a vertex");
  }
  for (Vertex v : seq) {
    if (v < 0 || v >= g.num_vertices()) {
      throw Error(ErrorCode::kNotAPath,
                  "vertex " + std::to_string(v) + " not in graph");
    }
  }
  for (size_t i = 0; i + 1 < seq.size(); ++i) {
    if (!g.HasEdge(seq[i], seq[i + 1])) {
      throw Error(ErrorCode::kNotAPath,
                  "vertices " + std::to_string(seq[i]) + " and " +
                      std::to_string(seq[i + 1]) + " are not adjacent");
    }
  }
}

}  // namespace

bool IsIsometricPath(const Graph& g, const DistanceMatrix& dm,
                     std::span<const Vertex> seq) {
  CheckSimplePath(g, seq);
  return static_cast<int64_t>(seq.size()) - 1 == dm.at(seq.front(), seq.back());
}

bool IsInducedPath(const Graph& g, std::span<const Vertex> seq) {
  try {
    CheckSimplePath(g, seq);
  } catch (const Error&) {
    return false;
  }
  for (size_t i = 0; i < seq.size(); ++i) {
    for (size_t j = i + 2; j < seq.size(); ++j) {
      if (g.HasEdge(seq[i], seq[j])) return false;
    }
  }
  return true;
}

std::vector<Vertex> ShortestPath(const Graph& g, const DistanceMatrix& dm,
                                 Vertex from, Vertex to) {
  if (dm.at(from, to) == kUnreachable) {
    throw Error(ErrorCode::kUnreachable,
                std::to_string(to) + " unreachable from " + std::to_string(from));
  }
  std::vector<Vertex> path{from};
  Vertex cur = from;
  while (cur != to) {
    for (Vertex w : g.neighbors(cur)) {
      if (dm.at(w, to) == dm.at(cur, to) - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

}  // namespace ipclab
