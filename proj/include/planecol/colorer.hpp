#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planecol/coloring.hpp"
#include "planecol/plane_graph.hpp"
#include "planecol/surgery.hpp"

namespace planecol {

// Extension problem: extend a proper 3-coloring of the designated face to the
// whole graph. The face must be a 3-face, a 9-face with cyclic boundary, or a
// certified special 11-face.
struct ExtensionTask {
  PlaneGraph graph;
  int face = -1;
  Coloring boundary;
};

// One reduction (or terminal) event; children are the steps that follow at
// depth+1. "Direct" and "FallbackSearch" terminate a branch.
struct TraceStep {
  int depth = 0;
  std::string kind;
  std::string params;
  int sigma_before = 0;
  int sigma_after = 0;
};

struct Trace {
  std::vector<TraceStep> steps;
  // Longest root-to-leaf chain, in steps.
  int max_depth() const;
};

struct ExtensionResult {
  Coloring coloring;
  Trace trace;
};

bool face_qualifies(const PlaneGraph& g, int face);

// Proof-guided extension: split at separating 3-/9-/special-11-cycles, remove
// chord-cut vertices, identify 4-face diagonals, identify across 6-faces, and
// fall back to exhaustive search when no reduction applies. Throws
// Error(Infeasible) only when the fallback proves no extension exists.
ExtensionResult extend_coloring(const ExtensionTask& task);

struct ColorResult {
  Coloring coloring;
  Trace trace;
};

// Top-level 3-coloring: color an arbitrary triangle and extend to both sides;
// exhaustive search stands in for the triangle-free and 4-/6-cycle-free base
// cases.
ColorResult color_graph(const PlaneGraph& g);

// Complete backtracking search with forward checking; returns some proper
// total extension of `partial`, or nullopt iff none exists.
std::optional<Coloring> brute_force_extend(const PlaneGraph& g, const Coloring& partial);

// True iff total and proper.
bool verify_coloring(const PlaneGraph& g, const Coloring& c);

// Greedy colors for subdivision vertices along a path whose endpoints are
// already colored; true on success (always, given at most two constraints).
bool color_padding_greedily(const PlaneGraph& part_graph, const std::vector<int>& padding_path,
                            Coloring& coloring);

}  // namespace planecol
