#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planecol/coloring.hpp"
#include "planecol/plane_graph.hpp"

namespace planecol {

enum class SurgeryKind {
  SubdivideEdge,
  RemoveAndSubdivide,
  IdentifyDiagonal,
  IdentifySixFace,
  SplitSeparating,
};

const char* surgery_kind_name(SurgeryKind k);

// One output graph of a reduction, with enough bookkeeping to pull a
// 3-coloring of it back to the original.
struct ReducedPart {
  PlaneGraph graph;
  std::optional<int> face;             // tracked designated face, when requested
  std::vector<int> vertex_map;         // original vertex -> part vertex, -1 if absent
  std::vector<int> created;            // part vertices with no original preimage
  std::vector<int> padding_path;       // created subdivision vertices in path order
  // Part vertex pairs that must receive distinct colors for the pull-back to
  // be proper (endpoints of subdivided original edges).
  std::vector<std::pair<int, int>> pinned_distinct;
};

// One reduction step: the operation, its operands, the reduced graph(s), and
// the coloring transfer (vertex maps plus greedily recolored dropped
// vertices).
struct Surgery {
  SurgeryKind kind = SurgeryKind::SubdivideEdge;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<ReducedPart> parts;
  std::vector<int> dropped;  // original vertices absent from every part, recolor order
};

// Replaces edge uv by a path with k >= 1 internal vertices, embedded along
// the old edge's rotation slots.
Surgery subdivide_edge(const PlaneGraph& g, int u, int v, int k,
                       std::optional<int> track_face = std::nullopt);

// Chord uv of the designated face's boundary cutting off the single vertex w
// (so uwv is consecutive on the walk and uvw bounds a 3-face): deletes w and
// inserts one vertex into uv. Sigma drops by exactly 1.
Surgery remove_and_subdivide(const PlaneGraph& g, int face, int u, int v, int w);

// Identifies the two diagonal vertices of a 4-face.
Surgery identify_diagonal(const PlaneGraph& g, int four_face, std::pair<int, int> diagonal,
                          std::optional<int> track_face = std::nullopt);

// Identifies boundary[1] with boundary[5] and boundary[2] with boundary[4] of
// a 6-face; the anchor boundary[0] selection is the caller's responsibility.
Surgery identify_six_face(const PlaneGraph& g, const std::array<int, 6>& boundary,
                          std::optional<int> track_face = std::nullopt);

// Splits at a separating cycle: part 0 is the graph minus the interior,
// part 1 the graph minus the exterior with `padding` vertices inserted into
// one cycle edge (5 for 4-cycles, 3 for 6-cycles, 0 otherwise in the proofs).
Surgery split_separating(const PlaneGraph& g, const CycleHandle& cycle, int padding,
                         int outer_face, std::optional<int> track_face = std::nullopt);

// Pulls proper colorings of the parts back to the original: mapped vertices
// copy their part color, dropped vertices are recolored greedily (taking the
// pinned color when provided). Throws PreconditionViolated if part colorings
// disagree on a shared vertex or violate a pinned-distinct pair.
Coloring pull_back(const PlaneGraph& original, const Surgery& s,
                   const std::vector<Coloring>& part_colorings,
                   const Coloring* pinned = nullptr);

}  // namespace planecol
