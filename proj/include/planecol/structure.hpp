#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planecol/plane_graph.hpp"

namespace planecol {

enum class CycleClass { Facial, Separating };

// Dual face sets and off-cycle vertex sets on the two sides of a cycle,
// relative to the handle's orientation (right = faces on the right of the
// directed edges of the handle).
struct CycleSides {
  std::vector<int> right_faces, left_faces;
  std::vector<int> right_vertices, left_vertices;
};

CycleSides cycle_sides(const PlaneGraph& g, const CycleHandle& cycle);

// Side partition of the vertices off a cycle. Interior is the side away from
// the designated outer face.
struct CycleKind {
  CycleClass kind = CycleClass::Facial;
  std::vector<int> interior;
  std::vector<int> exterior;
};

CycleKind classify_cycle(const PlaneGraph& g, const CycleHandle& cycle, int outer_face);

// All edges joining non-consecutive cycle vertices, deterministic order.
std::vector<std::pair<int, int>> chords_of(const PlaneGraph& g, const CycleHandle& cycle);

// Ear of an 11-face: apex off the face adjacent to both ends of a span of
// three consecutive boundary vertices.
struct EarRecord {
  int face = -1;
  std::array<int, 3> span{};  // in walk order
  int apex = -1;
};

std::vector<EarRecord> find_ears(const PlaneGraph& g, int face);

struct EarReduction {
  PlaneGraph graph;
  int face = -1;
  std::vector<int> vertex_map;  // old index -> new index, -1 if removed
};

// Removes the span middle and everything inside the ear 4-cycle; the face is
// again an 11-face with the apex on its boundary.
EarReduction ear_reduce(const PlaneGraph& g, const EarRecord& ear);

struct CollapseState {
  PlaneGraph graph;
  int face = -1;
};

// Every state reachable by iterated ear reductions over every ear choice,
// start state included, deduplicated (labels are stable across reductions).
std::vector<CollapseState> enumerate_collapses(const PlaneGraph& g, int face);

// Vertices off the face with at least three neighbors on its boundary.
std::vector<int> claw_centers(const PlaneGraph& g, int face);

// Adjacent off-face pairs whose boundary-neighbor counts sum to at least 4.
std::vector<std::pair<int, int>> d_claw_centers(const PlaneGraph& g, int face);

struct SpecialViolation {
  enum Kind { ClawCenter, DClawCenter } kind = ClawCenter;
  int state = 0;               // index into the collapse set
  std::vector<int> vertices;   // offending vertex or pair, in start-graph labels' indices of that state
};

// Evidence for conditions (1)-(4) of a special 11-face; valid iff the
// boundary is an 11-cycle, some triangle shares exactly one edge with it, and
// no collapse state has a claw-center or d-claw-center.
struct SpecialFaceCertificate {
  int face = -1;
  bool valid = false;
  std::string reason;  // empty when valid
  std::optional<CycleHandle> adjacent_triangle;
  std::vector<CollapseState> collapse_set;
  std::optional<SpecialViolation> violation;
};

SpecialFaceCertificate is_special_face(const PlaneGraph& g, int face);

struct SpecialCycleResult {
  bool special = false;
  SpecialFaceCertificate certificate;
  PlaneGraph inner;             // graph after deleting ext(C)
  int inner_face = -1;          // face of `inner` bounded by C
  std::vector<int> vertex_map;  // original -> inner
};

// Deletes ext(C) and applies the special-face check to the face bounded by C.
SpecialCycleResult is_special_cycle(const PlaneGraph& g, const CycleHandle& cycle,
                                    int outer_face);

}  // namespace planecol
