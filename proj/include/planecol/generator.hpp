#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "planecol/plane_graph.hpp"

namespace planecol {

struct GenParams {
  int target_vertex_count = 12;
  std::uint64_t seed = 1;
  bool require_triangle = false;
  bool require_four_or_six_cycle = false;
  int max_attempts = 200;
};

// Constrained growth: start from a short cycle and add paths across faces,
// rejecting any move that creates a 5-cycle, a 7-cycle or adjacent triangles.
// Deterministic per seed. Throws ExhaustedAttempts when the attempt budget is
// spent.
PlaneGraph generate(const GenParams& params);

// splitmix64; stable across platforms, unlike std::uniform_int_distribution.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  int below(int n);
};

// Cycle on k vertices labeled u1..uk, both faces bounded by the cycle.
PlaneGraph cycle_graph(int k);

// Inserts a path with `len` edges across `face` between walk positions i and
// j (i != j, distinct vertices); splits the face in two. New vertices are
// labeled `prefix`1.. (uniquified).
PlaneGraph add_path_across_face(const PlaneGraph& g, int face, int i, int j, int len,
                                const std::string& prefix = "s",
                                std::vector<int>* new_vertices = nullptr);

struct CorpusEntry {
  std::string name;
  std::string description;
  PlaneGraph graph;
  // Flat expected-outcome record; keys are interpreted by the golden tests
  // and mirrored into the corpus manifest.
  std::map<std::string, std::string> expected;
};

const std::vector<CorpusEntry>& curated_corpus();

}  // namespace planecol
