#include "planecol/generator.hpp"

#include <algorithm>

#include "planecol/class_check.hpp"

namespace planecol {

namespace {

int walk_pos(const PlaneGraph& g, int face, int v) {
  const auto& walk = g.face(face).walk;
  for (int i = 0; i < static_cast<int>(walk.size()); ++i)
    if (walk[i] == v) return i;
  fail(Errc::InvalidArgument, "vertex '" + g.label(v) + "' not on face walk");
}

// The corpus scripts rely on each intermediate graph having exactly one face
// of the requested degree.
int unique_face_of_degree(const PlaneGraph& g, int d) {
  int found = -1;
  for (int f = 0; f < g.face_count(); ++f)
    if (g.face(f).degree() == d) {
      if (found >= 0) fail(Errc::NoSuchFace, "face of degree " + std::to_string(d) + " not unique");
      found = f;
    }
  if (found < 0) fail(Errc::NoSuchFace, "no face of degree " + std::to_string(d));
  return found;
}

}  // namespace

std::uint64_t Rng::next() {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

int Rng::below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<unsigned>(n)); }

PlaneGraph cycle_graph(int k) {
  if (k < 3) fail(Errc::InvalidArgument, "cycle needs at least 3 vertices");
  std::vector<std::string> labels;
  std::vector<std::vector<int>> rotation;
  for (int i = 0; i < k; ++i) {
    labels.push_back("u" + std::to_string(i + 1));
    rotation.push_back({(i + k - 1) % k, (i + 1) % k});
  }
  return PlaneGraph::build(std::move(labels), std::move(rotation));
}

PlaneGraph add_path_across_face(const PlaneGraph& g, int face, int i, int j, int len,
                                const std::string& prefix, std::vector<int>* new_vertices) {
  if (len < 1) fail(Errc::InvalidArgument, "path needs at least one edge");
  const FacialWalk& fw = g.face(face);
  const int d = fw.degree();
  if (i < 0 || i >= d || j < 0 || j >= d || i == j)
    fail(Errc::InvalidArgument, "walk positions out of range");
  int a = fw.walk[i], b = fw.walk[j];
  if (a == b) fail(Errc::InvalidArgument, "walk positions name the same vertex");
  if (len == 1 && g.adjacent(a, b))
    fail(Errc::NotSimple, "edge already present; a parallel edge would result");

  const int n = g.vertex_count();
  std::vector<std::string> labels = g.labels();
  std::vector<std::vector<int>> rotation(n + len - 1);
  for (int v = 0; v < n; ++v) rotation[v] = g.rotation(v);

  std::vector<int> path;  // interior vertices of the new path
  for (int t = 1; t < len; ++t) {
    std::string cand;
    for (int c = t;; ++c) {
      cand = prefix + std::to_string(c);
      if (std::find(labels.begin(), labels.end(), cand) == labels.end()) break;
    }
    labels.push_back(cand);
    path.push_back(n + t - 1);
  }
  int a_attach = len == 1 ? b : path.front();
  int b_attach = len == 1 ? a : path.back();

  // The corner of `face` at walk position p lies between the walk successor
  // and predecessor slots, which are rotation-adjacent; insert just before
  // the predecessor slot.
  auto insert_at_corner = [&](int p, int nbr) {
    int v = fw.walk[p];
    int pred = fw.walk[(p + d - 1) % d];
    auto& rot = rotation[v];
    auto it = std::find(rot.begin(), rot.end(), pred);
    rot.insert(it, nbr);
  };
  insert_at_corner(i, a_attach);
  insert_at_corner(j, b_attach);

  for (int t = 0; t < len - 1; ++t) {
    int prev = t == 0 ? a : path[t - 1];
    int next = t == len - 2 ? b : path[t + 1];
    rotation[path[t]] = {prev, next};
  }
  if (new_vertices) *new_vertices = path;
  return PlaneGraph::build(std::move(labels), std::move(rotation));
}

namespace {

std::optional<PlaneGraph> apply_if_in_class(const PlaneGraph& g, int face, int i, int j, int len) {
  try {
    PlaneGraph h = add_path_across_face(g, face, i, j, len);
    if (!in_class_g(h)) return std::nullopt;
    return h;
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<PlaneGraph> random_move(const PlaneGraph& g, Rng& rng, int max_new,
                                      const std::vector<std::pair<int, int>>& shapes) {
  int f = rng.below(g.face_count());
  const FacialWalk& fw = g.face(f);
  int d = fw.degree();
  if (d < 3) return std::nullopt;
  int i = rng.below(d);
  int off, len;
  if (shapes.empty()) {
    off = 1 + rng.below(d - 1);
    len = 1 + rng.below(4);
  } else {
    auto [o, l] = shapes[rng.below(static_cast<int>(shapes.size()))];
    off = o;
    len = l;
    if (off >= d) return std::nullopt;
  }
  if (len - 1 > max_new) return std::nullopt;
  // Skip moves whose split faces would have degree 5 or 7.
  int d1 = off + len, d2 = d - off + len;
  if (d1 == 5 || d1 == 7 || d2 == 5 || d2 == 7) return std::nullopt;
  return apply_if_in_class(g, f, i, (i + off) % d, len);
}

}  // namespace

PlaneGraph generate(const GenParams& params) {
  if (params.target_vertex_count < 3)
    fail(Errc::InvalidArgument, "target vertex count must be at least 3");
  for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
    Rng rng(params.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(attempt + 1));
    static const int starts[] = {3, 4, 6, 8, 9};
    std::vector<int> usable;
    for (int s : starts)
      if (s <= params.target_vertex_count) usable.push_back(s);
    PlaneGraph g = cycle_graph(usable[rng.below(static_cast<int>(usable.size()))]);

    int stall = 0;
    while (g.vertex_count() < params.target_vertex_count && stall < 300) {
      auto h = random_move(g, rng, params.target_vertex_count - g.vertex_count(), {});
      if (h) {
        g = std::move(*h);
        stall = 0;
      } else {
        ++stall;
      }
    }

    if (params.require_triangle && !has_cycle(g, 3)) {
      static const std::vector<std::pair<int, int>> tri_shapes = {{2, 1}, {1, 2}};
      for (int t = 0; t < 300 && !has_cycle(g, 3); ++t) {
        auto h = random_move(g, rng, 2, tri_shapes);
        if (h) g = std::move(*h);
      }
    }
    if (params.require_four_or_six_cycle && !has_cycle(g, 4) && !has_cycle(g, 6)) {
      static const std::vector<std::pair<int, int>> shapes = {{3, 1}, {2, 2}, {1, 3},
                                                              {4, 2}, {3, 3}, {2, 4}};
      for (int t = 0; t < 300 && !has_cycle(g, 4) && !has_cycle(g, 6); ++t) {
        auto h = random_move(g, rng, 3, shapes);
        if (h) g = std::move(*h);
      }
    }

    bool ok = g.vertex_count() >= params.target_vertex_count &&
              g.vertex_count() <= params.target_vertex_count + 3 &&
              (!params.require_triangle || has_cycle(g, 3)) &&
              (!params.require_four_or_six_cycle || has_cycle(g, 4) || has_cycle(g, 6)) &&
              in_class_g(g);
    if (ok) return g;
  }
  fail(Errc::ExhaustedAttempts,
       "no admissible graph after " + std::to_string(params.max_attempts) + " attempts");
}

namespace {

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, std::string desc, PlaneGraph g,
                 std::map<std::string, std::string> expected) {
    expected["n"] = std::to_string(g.vertex_count());
    out.push_back(
        CorpusEntry{std::move(name), std::move(desc), std::move(g), std::move(expected)});
  };

  add("triangle", "smallest cycle; both faces are 3-faces", cycle_graph(3),
      {{"in_class", "true"}, {"triangle_count", "1"}, {"faces", "2"}, {"colorable", "true"}});

  add("nine_cycle", "chordless 9-cycle; extension from its face is direct", cycle_graph(9),
      {{"in_class", "true"}, {"triangle_count", "0"}, {"faces", "2"}, {"colorable", "true"}});

  add("five_cycle", "negative fixture: forbidden 5-cycle", cycle_graph(5),
      {{"in_class", "false"}, {"witness", "five_cycle"}});

  add("seven_cycle", "negative fixture: forbidden 7-cycle", cycle_graph(7),
      {{"in_class", "false"}, {"witness", "seven_cycle"}});

  {
    // Diamond: two triangles sharing an edge.
    PlaneGraph g =
        PlaneGraph::build({"a", "b", "c", "d"}, {{2, 1}, {0, 2, 3}, {1, 0, 3}, {1, 2}});
    add("adjacent_triangles", "negative fixture: two triangles on a common edge", std::move(g),
        {{"in_class", "false"}, {"witness", "adjacent_triangles"}});
  }

  {
    PlaneGraph g = add_path_across_face(cycle_graph(11), 0, 0, 2, 2, "v");
    add("ear_basic", "11-cycle with one ear apex over u1,u2,u3", std::move(g),
        {{"in_class", "true"},
         {"outer_walk", "u1,u2,u3,u4,u5,u6,u7,u8,u9,u10,u11"},
         {"ears_outer", "1"},
         {"collapses_outer", "2"}});
  }

  {
    PlaneGraph g = add_path_across_face(cycle_graph(9), 0, 0, 2, 1);
    add("chord_cut_vertex", "9-cycle with a chord cutting off u2", std::move(g),
        {{"in_class", "true"},
         {"outer_walk", "u1,u2,u3,u4,u5,u6,u7,u8,u9"},
         {"chord", "u1,u3"},
         {"cut_vertex", "u2"},
         {"extend_outer", "true"}});
  }

  {
    // Separating 11-cycle with an interior triangle apex and a designated
    // 9-face outside.
    PlaneGraph g = add_path_across_face(cycle_graph(11), 0, 0, 1, 2, "x");  // x1 adj u1,u2
    int outer = unique_face_of_degree(g, 11);
    g = add_path_across_face(g, outer, walk_pos(g, outer, 0), walk_pos(g, outer, 7), 2, "w");
    add("separating_eleven", "separating 11-cycle whose interior holds one triangle apex",
        std::move(g),
        {{"in_class", "true"},
         {"eleven_cycle", "u1,u2,u3,u4,u5,u6,u7,u8,u9,u10,u11"},
         {"outer_walk", "u1,u2,u3,u4,u5,u6,u7,u8,w1"},
         {"separating_11_special", "true"}});
  }

  {
    PlaneGraph g = add_path_across_face(cycle_graph(9), 0, 0, 2, 2, "x");
    add("two_apart_apex", "9-cycle with an inner vertex joined to u1 and u3", std::move(g),
        {{"in_class", "true"},
         {"outer_walk", "u1,u2,u3,u4,u5,u6,u7,u8,u9"},
         {"extend_outer", "true"}});
  }

  {
    PlaneGraph g = add_path_across_face(cycle_graph(11), 0, 5, 6, 2, "t");
    add("special_face_basic", "11-face with a triangle on one boundary edge", std::move(g),
        {{"in_class", "true"},
         {"outer_walk", "u1,u2,u3,u4,u5,u6,u7,u8,u9,u10,u11"},
         {"special_outer", "true"},
         {"extend_outer", "true"}});
  }

  {
    // Triangle apex t1 on u6,u7, then z1 adjacent to u1, u5 and u9: a
    // claw-center of the outer 11-face (class membership is not claimed).
    PlaneGraph g = add_path_across_face(cycle_graph(11), 0, 5, 6, 2, "t");
    int f = unique_face_of_degree(g, 12);
    g = add_path_across_face(g, f, walk_pos(g, f, 0), walk_pos(g, f, 4), 2, "z");
    f = unique_face_of_degree(g, 10);
    g = add_path_across_face(g, f, walk_pos(g, f, *g.index_of("z1")), walk_pos(g, f, 8), 1);
    add("claw_center", "off-face vertex with three boundary neighbors", std::move(g),
        {{"outer_walk", "u1,u2,u3,u4,u5,u6,u7,u8,u9,u10,u11"},
         {"claw_labels", "z1"},
         {"special_outer", "false"}});
  }

  {
    // Ear apex v1 over u1,u2,u3; triangle t1 on u6,u7; z1 adj {v1,u9}; y1 adj
    // {z1,u10,u1}. The pair {z1,y1} becomes a d-claw-center only after an ear
    // reduction puts v1 on the boundary.
    PlaneGraph g = add_path_across_face(cycle_graph(11), 0, 5, 6, 2, "t");
    int f = unique_face_of_degree(g, 12);
    g = add_path_across_face(g, f, walk_pos(g, f, 0), walk_pos(g, f, 2), 2, "v");
    f = unique_face_of_degree(g, 12);
    g = add_path_across_face(g, f, walk_pos(g, f, *g.index_of("v1")), walk_pos(g, f, 8), 2, "z");
    f = unique_face_of_degree(g, 6);
    g = add_path_across_face(g, f, walk_pos(g, f, *g.index_of("z1")), walk_pos(g, f, 9), 2, "y");
    f = unique_face_of_degree(g, 6);
    g = add_path_across_face(g, f, walk_pos(g, f, *g.index_of("y1")), walk_pos(g, f, 0), 1);
    add("special_after_collapse_dclaw",
        "special-face violation visible only in a collapse state", std::move(g),
        {{"in_class", "true"},
         {"outer_walk", "u1,u2,u3,u4,u5,u6,u7,u8,u9,u10,u11"},
         {"special_outer", "false"},
         {"violation", "d_claw"},
         {"violation_state_positive", "true"}});
  }

  {
    PlaneGraph g = add_path_across_face(cycle_graph(9), 0, 0, 4, 4, "p");
    int f = unique_face_of_degree(g, 8);
    g = add_path_across_face(g, f, walk_pos(g, f, *g.index_of("p1")),
                             walk_pos(g, f, *g.index_of("p3")), 2, "q");
    add("interior_four_face", "4-face disjoint from the designated 9-face boundary", std::move(g),
        {{"in_class", "true"},
         {"outer_walk", "u1,u2,u3,u4,u5,u6,u7,u8,u9"},
         {"four_face", "p1,p2,p3,q1"},
         {"extend_outer", "true"}});
  }

  {
    PlaneGraph g = add_path_across_face(cycle_graph(9), 0, 0, 3, 3, "q");
    add("boundary_six_face", "6-face sharing vertices with the designated 9-face", std::move(g),
        {{"in_class", "true"},
         {"outer_walk", "u1,u2,u3,u4,u5,u6,u7,u8,u9"},
         {"six_face", "u1,u2,u3,u4,q2,q1"},
         {"extend_outer", "true"}});
  }

  return out;
}

}  // namespace

const std::vector<CorpusEntry>& curated_corpus() {
  static const std::vector<CorpusEntry> corpus = build_corpus();
  return corpus;
}

}  // namespace planecol
