#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace planecol {

enum class Errc {
  // construction / parsing
  InvalidArgument,
  InvalidLabel,
  DuplicateLabel,
  UnknownLabel,
  SymmetryViolation,
  NotSimple,
  InvalidEmbedding,
  ParseError,
  // structural preconditions
  NotACycle,
  NotAnElevenFace,
  NotACycleBoundary,
  NotElevenCycle,
  NoSuchEdge,
  NoSuchFace,
  NotAFourFace,
  NotASixFace,
  DiagonalAdjacent,
  MergeWouldLoop,
  NotSeparating,
  PreconditionViolated,
  // coloring
  NotInClass,
  NotConnected,
  UnqualifiedFace,
  ImproperBoundaryColoring,
  Infeasible,
  // generation
  ExhaustedAttempts,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message);
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

// Closed walk bounding one face, in traversal order.
struct FacialWalk {
  std::vector<int> walk;
  bool is_cycle = false;  // true iff no vertex repeats
  int degree() const { return static_cast<int>(walk.size()); }
};

// Cycle given by its cyclic vertex sequence; consecutive vertices adjacent,
// all distinct.
struct CycleHandle {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
};

// Simple plane graph encoded as a clockwise rotation system. Immutable after
// construction; faces are traced once and cached. Vertices are dense indices,
// external labels kept in a side table so surgeries can renumber freely.
//
// Face tracing: the face on the right of directed edge (u,v) continues with
// (v,w) where w immediately precedes u in the clockwise rotation of v.
class PlaneGraph {
public:
  // The empty graph; build() is the only way to construct anything else.
  PlaneGraph() = default;

  static PlaneGraph build(std::vector<std::string> labels,
                          std::vector<std::vector<int>> rotation);

  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  int edge_count() const { return edge_count_; }
  int face_count() const { return static_cast<int>(faces_.size()); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_.at(v); }
  std::optional<int> index_of(const std::string& label) const;

  const std::vector<int>& rotation(int v) const { return rotation_.at(v); }
  int degree(int v) const { return static_cast<int>(rotation_.at(v).size()); }
  bool adjacent(int u, int v) const;
  // Neighbors sorted ascending (rotation order is not value order).
  const std::vector<int>& sorted_neighbors(int v) const { return sorted_adj_.at(v); }

  const std::vector<FacialWalk>& faces() const { return faces_; }
  const FacialWalk& face(int f) const { return faces_.at(f); }
  // Face on the right side of directed edge u->v.
  int face_of(int u, int v) const;

  bool connected() const { return connected_; }

private:
  void trace_faces();

  std::vector<std::string> labels_;
  std::vector<std::vector<int>> rotation_;
  std::vector<std::vector<int>> sorted_adj_;
  std::vector<FacialWalk> faces_;
  std::unordered_map<std::uint64_t, int> edge_face_;
  int edge_count_ = 0;
  bool connected_ = true;
};

// |V| + |E|, the measure that makes every reduction well-founded.
int sigma_measure(const PlaneGraph& g);

// Re-derives the facial walks (identical to g.faces(); kept as the public
// tracing entry point).
std::vector<FacialWalk> trace_faces(const PlaneGraph& g);

// Validates that `vertices` is a simple cycle of g.
CycleHandle make_cycle(const PlaneGraph& g, std::vector<int> vertices);

// Lexicographically smallest rotation over both directions; canonical key
// for a cyclic sequence.
std::vector<int> canonical_cycle(const std::vector<int>& seq);

// First face whose walk equals `walk` up to rotation and reflection.
std::optional<int> find_face(const PlaneGraph& g, const std::vector<int>& walk);

// Text format "pg1": header `pg1 <n>`, then one line per vertex,
// `<label>: <neighbor labels clockwise>`. `#` comments and blank lines are
// ignored. Serialization is canonical: vertices in index order.
PlaneGraph parse_pg1(const std::string& text);
std::string serialize_pg1(const PlaneGraph& g);

// Induced subgraph after removing `doomed`; vertex_map maps old index to new
// index or -1.
struct DeletionResult {
  PlaneGraph graph;
  std::vector<int> vertex_map;
};
DeletionResult delete_vertices(const PlaneGraph& g, const std::vector<int>& doomed);

}  // namespace planecol
