#include "planecol/plane_graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace planecol {

namespace {

std::uint64_t edge_key(int u, int v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

}  // namespace

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidLabel: return "InvalidLabel";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::SymmetryViolation: return "SymmetryViolation";
    case Errc::NotSimple: return "NotSimple";
    case Errc::InvalidEmbedding: return "InvalidEmbedding";
    case Errc::ParseError: return "ParseError";
    case Errc::NotACycle: return "NotACycle";
    case Errc::NotAnElevenFace: return "NotAnElevenFace";
    case Errc::NotACycleBoundary: return "NotACycleBoundary";
    case Errc::NotElevenCycle: return "NotElevenCycle";
    case Errc::NoSuchEdge: return "NoSuchEdge";
    case Errc::NoSuchFace: return "NoSuchFace";
    case Errc::NotAFourFace: return "NotAFourFace";
    case Errc::NotASixFace: return "NotASixFace";
    case Errc::DiagonalAdjacent: return "DiagonalAdjacent";
    case Errc::MergeWouldLoop: return "MergeWouldLoop";
    case Errc::NotSeparating: return "NotSeparating";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NotInClass: return "NotInClass";
    case Errc::NotConnected: return "NotConnected";
    case Errc::UnqualifiedFace: return "UnqualifiedFace";
    case Errc::ImproperBoundaryColoring: return "ImproperBoundaryColoring";
    case Errc::Infeasible: return "Infeasible";
    case Errc::ExhaustedAttempts: return "ExhaustedAttempts";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

PlaneGraph PlaneGraph::build(std::vector<std::string> labels,
                             std::vector<std::vector<int>> rotation) {
  if (labels.size() != rotation.size())
    fail(Errc::InvalidArgument, "labels and rotation lists differ in length");
  const int n = static_cast<int>(labels.size());

  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) fail(Errc::InvalidLabel, "empty vertex label");
    if (!seen.insert(l).second) fail(Errc::DuplicateLabel, "label '" + l + "' declared twice");
  }

  PlaneGraph g;
  g.labels_ = std::move(labels);
  g.rotation_ = std::move(rotation);

  int slot_count = 0;
  for (int v = 0; v < n; ++v) {
    std::unordered_set<int> nbrs;
    for (int u : g.rotation_[v]) {
      if (u < 0 || u >= n) fail(Errc::UnknownLabel, "neighbor index out of range");
      if (u == v) fail(Errc::NotSimple, "self-adjacency at '" + g.labels_[v] + "'");
      if (!nbrs.insert(u).second)
        fail(Errc::NotSimple, "repeated neighbor '" + g.labels_[u] + "' at '" + g.labels_[v] + "'");
    }
    slot_count += static_cast<int>(g.rotation_[v].size());
  }
  for (int v = 0; v < n; ++v)
    for (int u : g.rotation_[v]) {
      bool back = std::find(g.rotation_[u].begin(), g.rotation_[u].end(), v) !=
                  g.rotation_[u].end();
      if (!back)
        fail(Errc::SymmetryViolation,
             "'" + g.labels_[v] + "' lists '" + g.labels_[u] + "' but not conversely");
    }
  g.edge_count_ = slot_count / 2;

  g.sorted_adj_.resize(n);
  for (int v = 0; v < n; ++v) {
    g.sorted_adj_[v] = g.rotation_[v];
    std::sort(g.sorted_adj_[v].begin(), g.sorted_adj_[v].end());
  }

  // Connectivity over all vertices, isolated ones included.
  if (n > 0) {
    std::vector<char> vis(n, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.rotation_[v])
        if (!vis[u]) {
          vis[u] = 1;
          ++reached;
          stack.push_back(u);
        }
    }
    g.connected_ = reached == n;
  }

  g.trace_faces();

  int degree_sum = 0;
  for (const auto& f : g.faces_) degree_sum += f.degree();
  if (degree_sum != 2 * g.edge_count_)
    fail(Errc::InvalidEmbedding, "face degrees do not sum to twice the edge count");
  if (g.connected_ && g.edge_count_ > 0) {
    int euler = n - g.edge_count_ + g.face_count();
    if (euler != 2)
      fail(Errc::InvalidEmbedding,
           "V - E + F = " + std::to_string(euler) + ", rotation system is not planar");
  }
  return g;
}

void PlaneGraph::trace_faces() {
  const int n = vertex_count();
  // Position of u in rotation(v), for O(1) predecessor lookup.
  std::unordered_map<std::uint64_t, int> pos;
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i)
      pos[edge_key(v, rotation_[v][i])] = i;

  faces_.clear();
  edge_face_.clear();
  // Lowest directed edge first: u ascending, then neighbor value ascending.
  for (int u = 0; u < n; ++u) {
    std::vector<int> nbrs = rotation_[u];
    std::sort(nbrs.begin(), nbrs.end());
    for (int v : nbrs) {
      if (edge_face_.count(edge_key(u, v))) continue;
      int id = static_cast<int>(faces_.size());
      FacialWalk fw;
      int a = u, b = v;
      do {
        edge_face_[edge_key(a, b)] = id;
        fw.walk.push_back(a);
        int i = pos.at(edge_key(b, a));
        int deg = static_cast<int>(rotation_[b].size());
        int w = rotation_[b][(i + deg - 1) % deg];
        a = b;
        b = w;
      } while (!(a == u && b == v));
      std::vector<int> sorted = fw.walk;
      std::sort(sorted.begin(), sorted.end());
      fw.is_cycle = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      faces_.push_back(std::move(fw));
    }
  }
}

std::optional<int> PlaneGraph::index_of(const std::string& label) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (labels_[v] == label) return v;
  return std::nullopt;
}

bool PlaneGraph::adjacent(int u, int v) const {
  const auto& s = sorted_adj_.at(u);
  return std::binary_search(s.begin(), s.end(), v);
}

int PlaneGraph::face_of(int u, int v) const {
  auto it = edge_face_.find(edge_key(u, v));
  if (it == edge_face_.end()) fail(Errc::NoSuchEdge, "no directed edge for face lookup");
  return it->second;
}

int sigma_measure(const PlaneGraph& g) { return g.vertex_count() + g.edge_count(); }

std::vector<FacialWalk> trace_faces(const PlaneGraph& g) { return g.faces(); }

CycleHandle make_cycle(const PlaneGraph& g, std::vector<int> vertices) {
  const int k = static_cast<int>(vertices.size());
  if (k < 3) fail(Errc::NotACycle, "cycle needs at least 3 vertices");
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(Errc::NotACycle, "repeated vertex in cycle");
  for (int i = 0; i < k; ++i) {
    int u = vertices[i], v = vertices[(i + 1) % k];
    if (u < 0 || u >= g.vertex_count()) fail(Errc::NotACycle, "vertex out of range");
    if (!g.adjacent(u, v))
      fail(Errc::NotACycle, "'" + g.label(u) + "' and '" + g.label(v) + "' are not adjacent");
  }
  return CycleHandle{std::move(vertices)};
}

std::vector<int> canonical_cycle(const std::vector<int>& seq) {
  const int k = static_cast<int>(seq.size());
  if (k == 0) return {};
  std::vector<int> best;
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<int> s = seq;
    if (dir) std::reverse(s.begin(), s.end());
    for (int r = 0; r < k; ++r) {
      std::vector<int> rot(s.begin() + r, s.end());
      rot.insert(rot.end(), s.begin(), s.begin() + r);
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

std::optional<int> find_face(const PlaneGraph& g, const std::vector<int>& walk) {
  std::vector<int> want = canonical_cycle(walk);
  for (int f = 0; f < g.face_count(); ++f)
    if (canonical_cycle(g.face(f).walk) == want) return f;
  return std::nullopt;
}

PlaneGraph parse_pg1(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&](std::string& out) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      // trim
      auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      auto e = line.find_last_not_of(" \t\r");
      out = line.substr(b, e - b + 1);
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_line(header)) fail(Errc::ParseError, "line 1: missing pg1 header");
  std::istringstream hs(header);
  std::string magic;
  long long n = -1;
  hs >> magic >> n;
  if (magic != "pg1" || n < 0 || hs.fail())
    fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected 'pg1 <n>'");

  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> nbr_labels;
  for (long long i = 0; i < n; ++i) {
    std::string row;
    if (!next_line(row))
      fail(Errc::ParseError,
           "line " + std::to_string(lineno) + ": expected " + std::to_string(n) +
               " vertex lines, got " + std::to_string(i));
    auto colon = row.find(':');
    if (colon == std::string::npos)
      fail(Errc::ParseError, "line " + std::to_string(lineno) + ": missing ':' separator");
    std::string label = row.substr(0, colon);
    auto le = label.find_last_not_of(" \t");
    if (le == std::string::npos)
      fail(Errc::ParseError, "line " + std::to_string(lineno) + ", column 1: empty label");
    label.erase(le + 1);
    if (label.find_first_of(" \t") != std::string::npos)
      fail(Errc::ParseError, "line " + std::to_string(lineno) + ": label contains whitespace");
    labels.push_back(label);
    std::istringstream ns(row.substr(colon + 1));
    std::vector<std::string> ns_row;
    std::string tok;
    while (ns >> tok) ns_row.push_back(tok);
    nbr_labels.push_back(std::move(ns_row));
  }
  std::string extra;
  if (next_line(extra))
    fail(Errc::ParseError, "line " + std::to_string(lineno) + ": trailing content");

  std::unordered_map<std::string, int> index;
  for (int v = 0; v < static_cast<int>(labels.size()); ++v) {
    if (!index.emplace(labels[v], v).second)
      fail(Errc::ParseError, "duplicate label '" + labels[v] + "'");
  }
  std::vector<std::vector<int>> rotation(labels.size());
  for (int v = 0; v < static_cast<int>(labels.size()); ++v)
    for (const auto& nl : nbr_labels[v]) {
      auto it = index.find(nl);
      if (it == index.end())
        fail(Errc::ParseError, "unknown neighbor label '" + nl + "' at vertex '" + labels[v] + "'");
      rotation[v].push_back(it->second);
    }
  return PlaneGraph::build(std::move(labels), std::move(rotation));
}

std::string serialize_pg1(const PlaneGraph& g) {
  std::ostringstream out;
  out << "pg1 " << g.vertex_count() << "\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << g.label(v) << ":";
    for (int u : g.rotation(v)) out << " " << g.label(u);
    out << "\n";
  }
  return out.str();
}

DeletionResult delete_vertices(const PlaneGraph& g, const std::vector<int>& doomed) {
  std::vector<char> gone(g.vertex_count(), 0);
  for (int v : doomed) gone.at(v) = 1;
  std::vector<int> map(g.vertex_count(), -1);
  std::vector<std::string> labels;
  std::vector<std::vector<int>> rotation;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (gone[v]) continue;
    map[v] = static_cast<int>(labels.size());
    labels.push_back(g.label(v));
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (gone[v]) continue;
    std::vector<int> row;
    for (int u : g.rotation(v))
      if (!gone[u]) row.push_back(map[u]);
    rotation.push_back(std::move(row));
  }
  return DeletionResult{PlaneGraph::build(std::move(labels), std::move(rotation)),
                        std::move(map)};
}

}  // namespace planecol
