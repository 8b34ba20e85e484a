#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "planecol/class_check.hpp"
#include "planecol/generator.hpp"

using namespace planecol;

namespace {

// Independent oracle: every k-subset of vertices, one entry per Hamiltonian
// cycle of the induced subgraph.
std::vector<std::vector<int>> subset_cycles(const PlaneGraph& g, int k) {
  std::set<std::vector<int>> seen;
  const int n = g.vertex_count();
  std::vector<int> pick, path;
  std::vector<char> used(n, 0);
  std::function<void()> ham = [&]() {
    if (static_cast<int>(path.size()) == k) {
      if (g.adjacent(path.back(), path.front())) seen.insert(canonical_cycle(path));
      return;
    }
    for (int u : pick) {
      if (used[u] || !g.adjacent(path.back(), u)) continue;
      used[u] = 1;
      path.push_back(u);
      ham();
      path.pop_back();
      used[u] = 0;
    }
  };
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == k) {
      path = {pick[0]};
      used[pick[0]] = 1;
      ham();
      used[pick[0]] = 0;
      return;
    }
    for (int v = start; v < n; ++v) {
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> canonical_sorted(const std::vector<CycleHandle>& hs) {
  std::vector<std::vector<int>> out;
  for (const auto& h : hs) out.push_back(canonical_cycle(h.vertices));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("9-cycle contains exactly one 9-cycle and no 5-cycle") {
  PlaneGraph g = cycle_graph(9);
  CHECK(cycles_of_length(g, 9).size() == 1);
  CHECK(cycles_of_length(g, 5).empty());
}

TEST_CASE("11-cycle with a 2/7 chord has cycle lengths 4, 9 and 11 only") {
  PlaneGraph g = add_path_across_face(cycle_graph(11), 0, 0, 3, 1);  // chord u1-u4
  CHECK(cycles_of_length(g, 4).size() == 1);
  CHECK(cycles_of_length(g, 9).size() == 1);
  CHECK(cycles_of_length(g, 11).size() == 1);
  CHECK(cycles_of_length(g, 5).empty());
  for (int k = 3; k <= 11; ++k) {
    CAPTURE(k);
    CHECK(canonical_sorted(cycles_of_length(g, k)) == subset_cycles(g, k));
  }
}

TEST_CASE("adjacent triangles require a shared edge") {
  // Embedded K4: every two triangles share an edge.
  PlaneGraph k4 = PlaneGraph::build({"a", "b", "c", "d"},
                                    {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}});
  CHECK(adjacent_triangles(k4).has_value());

  CHECK_FALSE(adjacent_triangles(cycle_graph(3)).has_value());

  // Bowtie: two triangles sharing only a vertex.
  PlaneGraph bowtie = PlaneGraph::build(
      {"a", "b", "c", "d", "e"}, {{1, 2}, {2, 0}, {0, 1, 3, 4}, {4, 2}, {2, 3}});
  CHECK_FALSE(adjacent_triangles(bowtie).has_value());
}

TEST_CASE("check_class verdicts and witnesses") {
  ClassReport five = check_class(cycle_graph(5));
  CHECK_FALSE(five.in_class);
  REQUIRE(five.five_cycle_witness.has_value());
  CHECK(five.five_cycle_witness->length() == 5);

  ClassReport tri = check_class(cycle_graph(3));
  CHECK(tri.in_class);
  CHECK(tri.triangle_count == 1);

  // 9-cycle with an ear triangle attached along one edge: 3-face plus 10-face.
  PlaneGraph g = add_path_across_face(cycle_graph(9), 0, 0, 1, 2, "w");
  ClassReport r = check_class(g);
  CHECK(r.in_class);
  CHECK(r.triangle_count == 1);
  // the witness machinery agrees with full enumeration
  for (int k = 3; k <= g.vertex_count(); ++k) {
    CAPTURE(k);
    CHECK(canonical_sorted(cycles_of_length(g, k)) == subset_cycles(g, k));
  }
}

TEST_CASE("cycles_of_length matches the subset oracle on corpus graphs up to 14 vertices") {
  for (const CorpusEntry& e : curated_corpus()) {
    if (e.graph.vertex_count() > 14) continue;
    CAPTURE(e.name);
    for (int k = 3; k <= std::min(10, e.graph.vertex_count()); ++k)
      CHECK(canonical_sorted(cycles_of_length(e.graph, k)) == subset_cycles(e.graph, k));
  }
}

TEST_CASE("cycles_of_length matches the subset oracle on generated graphs") {
  for (std::uint64_t seed = 20; seed < 26; ++seed) {
    PlaneGraph g = generate(GenParams{12, seed, seed % 2 == 0, true, 200});
    CAPTURE(seed);
    for (int k = 3; k <= 9; ++k)
      CHECK(canonical_sorted(cycles_of_length(g, k)) == subset_cycles(g, k));
  }
}

TEST_CASE("in-class graphs have empty 5- and 7-cycle lists by definition") {
  for (std::uint64_t seed = 30; seed < 40; ++seed) {
    PlaneGraph g = generate(GenParams{10 + static_cast<int>(seed % 6), seed, false, false, 200});
    ClassReport r = check_class(g);
    REQUIRE(r.in_class);
    CHECK(cycles_of_length(g, 5).empty());
    CHECK(cycles_of_length(g, 7).empty());
    CHECK(in_class_g(g));
  }
}
