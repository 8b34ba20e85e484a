#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "planecol/plane_graph.hpp"

namespace planecol {

// Membership verdict for the class of plane graphs without 5- and 7-cycles
// and without adjacent triangles, with explicit witnesses on failure.
struct ClassReport {
  bool in_class = false;
  std::optional<CycleHandle> five_cycle_witness;
  std::optional<CycleHandle> seven_cycle_witness;
  std::optional<std::pair<CycleHandle, CycleHandle>> adjacent_triangle_witness;
  int triangle_count = 0;
};

// All simple cycles of length exactly k, each reported once up to rotation
// and reflection, in deterministic order. k >= 3.
std::vector<CycleHandle> cycles_of_length(const PlaneGraph& g, int k);

// Some pair of distinct triangles sharing an edge, if any.
std::optional<std::pair<CycleHandle, CycleHandle>> adjacent_triangles(const PlaneGraph& g);

ClassReport check_class(const PlaneGraph& g);

// Existence-only fast path used by the reduction engine.
bool in_class_g(const PlaneGraph& g);

bool has_cycle(const PlaneGraph& g, int k);

}  // namespace planecol
