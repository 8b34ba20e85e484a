#include "planecol/surgery.hpp"

#include <algorithm>
#include <unordered_set>

#include "planecol/structure.hpp"

namespace planecol {

namespace {

std::string fresh_label(std::unordered_set<std::string>& used, const std::string& prefix) {
  for (int i = 1;; ++i) {
    std::string cand = prefix + std::to_string(i);
    if (used.insert(cand).second) return cand;
  }
}

std::string merge_label(std::unordered_set<std::string>& used, const std::string& a,
                        const std::string& b) {
  std::string cand = a + "+" + b;
  if (used.insert(cand).second) return cand;
  return fresh_label(used, cand + ".");
}

std::unordered_set<std::string> label_set(const PlaneGraph& g) {
  return {g.labels().begin(), g.labels().end()};
}

// Directed walk edge (s,t) of `face` avoiding the given vertices and the given
// unordered edge; lies on the face, so it identifies it after a surgery that
// leaves it in place.
std::optional<std::pair<int, int>> tracking_edge(const PlaneGraph& g, int face,
                                                 const std::vector<int>& avoid_vertices,
                                                 std::optional<std::pair<int, int>> avoid_edge) {
  const auto& walk = g.face(face).walk;
  const int d = static_cast<int>(walk.size());
  for (int i = 0; i < d; ++i) {
    int s = walk[i], t = walk[(i + 1) % d];
    bool bad = false;
    for (int a : avoid_vertices)
      if (s == a || t == a) bad = true;
    if (avoid_edge) {
      auto [x, y] = *avoid_edge;
      if ((s == x && t == y) || (s == y && t == x)) bad = true;
    }
    if (!bad) return std::make_pair(s, t);
  }
  return std::nullopt;
}

std::vector<int> map_walk(const std::vector<int>& walk, const std::vector<int>& vertex_map) {
  std::vector<int> out;
  out.reserve(walk.size());
  for (int v : walk) out.push_back(vertex_map.at(v));
  return out;
}

bool all_distinct(const std::vector<int>& xs) {
  std::vector<int> s = xs;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

// Resolves the designated face after a surgery: prefer the face holding the
// surviving tracked edge, verify it against the expected walk, otherwise
// search by walk. Returns nullopt when the face did not survive intact.
std::optional<int> resolve_face(const PlaneGraph& result,
                                std::optional<std::pair<int, int>> tracked,
                                const std::vector<int>& expected_walk) {
  if (!all_distinct(expected_walk)) return std::nullopt;
  std::vector<int> want = canonical_cycle(expected_walk);
  if (tracked) {
    int f = result.face_of(tracked->first, tracked->second);
    if (canonical_cycle(result.face(f).walk) == want) return f;
  }
  return find_face(result, expected_walk);
}

struct IdentifyResult {
  PlaneGraph graph;
  std::vector<int> vertex_map;  // old -> new, both u and w map to the merged vertex
  int merged = -1;
};

// Identifies u and w across `face` (both on its boundary, non-adjacent). The
// merged rotation is u's rotation opened at its face corner followed by w's
// rotation opened at its corner; parallel edges collapse keeping the first
// occurrence, removing the twin slot at the far endpoint as well.
IdentifyResult identify_through_face(const PlaneGraph& g, int face, int u, int w) {
  const FacialWalk& fw = g.face(face);
  if (!fw.is_cycle) fail(Errc::PreconditionViolated, "identification face boundary must be a cycle");
  const int d = fw.degree();
  int pu = -1, pw = -1;
  for (int i = 0; i < d; ++i) {
    if (fw.walk[i] == u) pu = i;
    if (fw.walk[i] == w) pw = i;
  }
  if (pu < 0 || pw < 0 || u == w)
    fail(Errc::PreconditionViolated, "both vertices must lie on the face");
  if (g.adjacent(u, w)) fail(Errc::MergeWouldLoop, "identifying adjacent vertices makes a loop");

  int a = fw.walk[(pu + d - 1) % d], b = fw.walk[(pu + 1) % d];
  int c = fw.walk[(pw + d - 1) % d], e = fw.walk[(pw + 1) % d];

  auto opened = [&](int v, int start, int expect_end) {
    const auto& rot = g.rotation(v);
    int k = static_cast<int>(rot.size());
    int s = -1;
    for (int i = 0; i < k; ++i)
      if (rot[i] == start) s = i;
    if (s < 0) fail(Errc::PreconditionViolated, "face corner missing in rotation");
    std::vector<int> out;
    for (int i = 0; i < k; ++i) out.push_back(rot[(s + i) % k]);
    if (out.back() != expect_end)
      fail(Errc::PreconditionViolated, "rotation does not close the face corner");
    return out;
  };
  std::vector<int> arc_u = opened(u, a, b);
  std::vector<int> arc_w = opened(w, c, e);

  // Merged slots with provenance; duplicates keep the first occurrence and
  // delete the twin's slot at the far endpoint.
  std::vector<std::pair<int, int>> slots;  // (neighbor, source vertex)
  for (int x : arc_u) slots.push_back({x, u});
  for (int x : arc_w) slots.push_back({x, w});
  std::vector<int> drop_at(g.vertex_count(), -1);  // neighbor -> source slot to drop
  std::vector<int> merged_rotation;
  std::unordered_set<int> first;
  for (auto [nbr, src] : slots) {
    if (first.insert(nbr).second) {
      merged_rotation.push_back(nbr);
    } else {
      drop_at[nbr] = src;
    }
  }

  const int n = g.vertex_count();
  int keep = std::min(u, w), gone = std::max(u, w);
  std::vector<int> map(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (v == gone) continue;
    map[v] = next++;
  }
  map[gone] = map[keep];

  std::vector<std::string> labels;
  std::unordered_set<std::string> used = label_set(g);
  used.erase(g.label(u));
  used.erase(g.label(w));
  std::string rlabel = merge_label(used, g.label(u), g.label(w));
  for (int v = 0; v < n; ++v) {
    if (v == gone) continue;
    labels.push_back(v == keep ? rlabel : g.label(v));
  }

  std::vector<std::vector<int>> rotation(n - 1);
  for (int v = 0; v < n; ++v) {
    if (v == gone) continue;
    std::vector<int> row;
    if (v == keep) {
      for (int nbr : merged_rotation) row.push_back(map[nbr]);
    } else {
      for (int nbr : g.rotation(v)) {
        if ((nbr == u || nbr == w) && drop_at[v] == nbr) continue;
        row.push_back(map[nbr]);
      }
    }
    rotation[map[v]] = std::move(row);
  }

  IdentifyResult res;
  res.graph = PlaneGraph::build(std::move(labels), std::move(rotation));
  res.vertex_map = std::move(map);
  res.merged = res.vertex_map[keep];
  return res;
}

}  // namespace

const char* surgery_kind_name(SurgeryKind k) {
  switch (k) {
    case SurgeryKind::SubdivideEdge: return "SubdivideEdge";
    case SurgeryKind::RemoveAndSubdivide: return "RemoveAndSubdivide";
    case SurgeryKind::IdentifyDiagonal: return "IdentifyDiagonal";
    case SurgeryKind::IdentifySixFace: return "IdentifySixFace";
    case SurgeryKind::SplitSeparating: return "SplitSeparating";
  }
  return "Unknown";
}

Surgery subdivide_edge(const PlaneGraph& g, int u, int v, int k, std::optional<int> track_face) {
  if (k < 1) fail(Errc::InvalidArgument, "subdivision needs at least one new vertex");
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() || !g.adjacent(u, v))
    fail(Errc::NoSuchEdge, "edge to subdivide does not exist");

  const int n = g.vertex_count();
  std::vector<std::string> labels = g.labels();
  std::unordered_set<std::string> used = label_set(g);
  std::vector<int> path;  // new vertex indices
  for (int i = 0; i < k; ++i) {
    path.push_back(n + i);
    labels.push_back(fresh_label(used, "s"));
  }

  std::vector<std::vector<int>> rotation(n + k);
  for (int x = 0; x < n; ++x) {
    rotation[x] = g.rotation(x);
    for (int& nbr : rotation[x]) {
      if (x == u && nbr == v) nbr = path.front();
      if (x == v && nbr == u) nbr = path.back();
    }
  }
  for (int i = 0; i < k; ++i) {
    int prev = i == 0 ? u : path[i - 1];
    int next = i == k - 1 ? v : path[i + 1];
    rotation[path[i]] = {prev, next};
  }

  ReducedPart part;
  std::optional<std::pair<int, int>> tracked;
  std::vector<int> expected_walk;
  if (track_face) {
    const auto& walk = g.face(*track_face).walk;
    tracked = tracking_edge(g, *track_face, {}, std::make_pair(u, v));
    const int d = static_cast<int>(walk.size());
    for (int i = 0; i < d; ++i) {
      int s = walk[i], t = walk[(i + 1) % d];
      expected_walk.push_back(s);
      if (s == u && t == v)
        expected_walk.insert(expected_walk.end(), path.begin(), path.end());
      if (s == v && t == u)
        expected_walk.insert(expected_walk.end(), path.rbegin(), path.rend());
    }
  }

  part.graph = PlaneGraph::build(std::move(labels), std::move(rotation));
  part.vertex_map.resize(n);
  for (int x = 0; x < n; ++x) part.vertex_map[x] = x;
  part.created = path;
  part.padding_path = path;
  part.pinned_distinct.push_back({u, v});
  if (track_face) {
    if (!tracked) {
      // Walk consisted solely of the subdivided edge; follow the new path.
      int f = g.face_of(u, v) == *track_face ? 0 : 1;
      tracked = f == 0 ? std::make_pair(u, path.front()) : std::make_pair(v, path.back());
    }
    part.face = resolve_face(part.graph, tracked, expected_walk);
  }

  Surgery s;
  s.kind = SurgeryKind::SubdivideEdge;
  s.params = {{"edge", g.label(u) + "," + g.label(v)}, {"k", std::to_string(k)}};
  s.parts.push_back(std::move(part));
  return s;
}

Surgery remove_and_subdivide(const PlaneGraph& g, int face, int u, int v, int w) {
  const FacialWalk& fw = g.face(face);
  if (!fw.is_cycle)
    fail(Errc::PreconditionViolated, "designated face boundary must be a cycle");
  const int d = fw.degree();
  int pw = -1;
  for (int i = 0; i < d; ++i)
    if (fw.walk[i] == w) pw = i;
  if (pw < 0) fail(Errc::PreconditionViolated, "w is not on the designated face");
  int x = fw.walk[(pw + d - 1) % d], y = fw.walk[(pw + 1) % d];
  if (!((x == u && y == v) || (x == v && y == u)))
    fail(Errc::PreconditionViolated, "u,w,v must be consecutive on the face walk");
  if (!g.adjacent(u, v)) fail(Errc::NoSuchEdge, "uv is not an edge");
  bool uv_on_walk = false;
  for (int i = 0; i < d; ++i) {
    int s = fw.walk[i], t = fw.walk[(i + 1) % d];
    if ((s == u && t == v) || (s == v && t == u)) uv_on_walk = true;
  }
  if (uv_on_walk) fail(Errc::PreconditionViolated, "uv must be a chord, not a boundary edge");
  if (g.degree(w) != 2)
    fail(Errc::PreconditionViolated, "w has neighbors besides u and v");
  int f1 = g.face_of(w, u);
  int tri = f1 != face ? f1 : g.face_of(w, v);
  if (g.face(tri).degree() != 3)
    fail(Errc::PreconditionViolated, "uvw does not bound a 3-face");

  auto tracked = tracking_edge(g, face, {w}, std::make_pair(u, v));
  if (!tracked) fail(Errc::PreconditionViolated, "designated face too small to track");

  DeletionResult del = delete_vertices(g, {w});
  int mu = del.vertex_map[u], mv = del.vertex_map[v];
  int mid_face = del.graph.face_of(del.vertex_map[tracked->first], del.vertex_map[tracked->second]);
  Surgery sub = subdivide_edge(del.graph, mu, mv, 1, mid_face);
  ReducedPart inner = std::move(sub.parts[0]);

  ReducedPart part;
  part.graph = std::move(inner.graph);
  part.face = inner.face;
  part.vertex_map.resize(g.vertex_count(), -1);
  for (int o = 0; o < g.vertex_count(); ++o)
    if (del.vertex_map[o] >= 0) part.vertex_map[o] = del.vertex_map[o];
  part.created = inner.created;
  part.pinned_distinct.push_back({mu, mv});

  if (part.face && g.face(face).degree() != part.graph.face(*part.face).degree())
    fail(Errc::PreconditionViolated, "designated face degree changed");

  Surgery s;
  s.kind = SurgeryKind::RemoveAndSubdivide;
  s.params = {{"chord", g.label(u) + "," + g.label(v)}, {"w", g.label(w)}};
  s.parts.push_back(std::move(part));
  s.dropped.push_back(w);
  return s;
}

Surgery identify_diagonal(const PlaneGraph& g, int four_face, std::pair<int, int> diagonal,
                          std::optional<int> track_face) {
  const FacialWalk& fw = g.face(four_face);
  if (fw.degree() != 4 || !fw.is_cycle) fail(Errc::NotAFourFace, "face is not a 4-face");
  auto [p, q] = diagonal;
  bool ok = (p == fw.walk[0] && q == fw.walk[2]) || (p == fw.walk[2] && q == fw.walk[0]) ||
            (p == fw.walk[1] && q == fw.walk[3]) || (p == fw.walk[3] && q == fw.walk[1]);
  if (!ok) fail(Errc::PreconditionViolated, "vertices are not a diagonal of the face");
  if (g.adjacent(p, q)) fail(Errc::DiagonalAdjacent, "diagonal vertices are adjacent");

  std::optional<std::pair<int, int>> tracked;
  std::vector<int> expected_walk;
  if (track_face) tracked = tracking_edge(g, *track_face, {p, q}, std::nullopt);

  IdentifyResult idr = identify_through_face(g, four_face, p, q);
  if (track_face) expected_walk = map_walk(g.face(*track_face).walk, idr.vertex_map);

  ReducedPart part;
  part.graph = std::move(idr.graph);
  part.vertex_map = idr.vertex_map;
  if (track_face) {
    std::optional<std::pair<int, int>> mt;
    if (tracked)
      mt = std::make_pair(idr.vertex_map[tracked->first], idr.vertex_map[tracked->second]);
    part.face = resolve_face(part.graph, mt, expected_walk);
  }

  Surgery s;
  s.kind = SurgeryKind::IdentifyDiagonal;
  s.params = {{"face", std::to_string(four_face)},
              {"diagonal", g.label(p) + "," + g.label(q)}};
  s.parts.push_back(std::move(part));
  return s;
}

Surgery identify_six_face(const PlaneGraph& g, const std::array<int, 6>& boundary,
                          std::optional<int> track_face) {
  std::vector<int> bvec(boundary.begin(), boundary.end());
  auto f6 = find_face(g, bvec);
  if (!f6 || g.face(*f6).degree() != 6 || !g.face(*f6).is_cycle)
    fail(Errc::NotASixFace, "boundary does not bound a 6-face");

  std::optional<std::pair<int, int>> tracked;
  if (track_face)
    tracked = tracking_edge(g, *track_face,
                            {boundary[1], boundary[2], boundary[4], boundary[5]}, std::nullopt);

  IdentifyResult first = identify_through_face(g, *f6, boundary[1], boundary[5]);

  // The pinched remnant of the 6-face is the 4-face r15, u2, u3, u4.
  int m2 = first.vertex_map[boundary[2]], m3 = first.vertex_map[boundary[3]],
      m4 = first.vertex_map[boundary[4]];
  int mid = first.graph.face_of(m2, m3);
  {
    const FacialWalk& midw = first.graph.face(mid);
    bool has4 = std::find(midw.walk.begin(), midw.walk.end(), m4) != midw.walk.end();
    if (midw.degree() != 4 || !has4) {
      mid = first.graph.face_of(m3, m2);
      const FacialWalk& alt = first.graph.face(mid);
      bool ok = alt.degree() == 4 &&
                std::find(alt.walk.begin(), alt.walk.end(), m4) != alt.walk.end();
      if (!ok) fail(Errc::PreconditionViolated, "first identification did not leave a 4-face");
    }
  }
  IdentifyResult second = identify_through_face(first.graph, mid, m2, m4);

  std::vector<int> map(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) map[v] = second.vertex_map[first.vertex_map[v]];

  ReducedPart part;
  part.graph = std::move(second.graph);
  part.vertex_map = map;
  if (track_face) {
    std::optional<std::pair<int, int>> mt;
    if (tracked) mt = std::make_pair(map[tracked->first], map[tracked->second]);
    part.face = resolve_face(part.graph, mt, map_walk(g.face(*track_face).walk, map));
  }

  Surgery s;
  s.kind = SurgeryKind::IdentifySixFace;
  std::string blabels;
  for (int i = 0; i < 6; ++i) blabels += (i ? "," : "") + g.label(boundary[i]);
  s.params = {{"face", blabels}};
  s.parts.push_back(std::move(part));
  return s;
}

Surgery split_separating(const PlaneGraph& g, const CycleHandle& cycle, int padding,
                         int outer_face, std::optional<int> track_face) {
  if (padding != 0 && padding != 3 && padding != 5)
    fail(Errc::InvalidArgument, "padding must be 0, 3 or 5");
  CycleSides sides = cycle_sides(g, cycle);
  bool outer_right =
      std::binary_search(sides.right_faces.begin(), sides.right_faces.end(), outer_face);
  const std::vector<int>& ext_faces = outer_right ? sides.right_faces : sides.left_faces;
  const std::vector<int>& ext_vertices = outer_right ? sides.right_vertices : sides.left_vertices;
  const std::vector<int>& int_vertices = outer_right ? sides.left_vertices : sides.right_vertices;
  if (int_vertices.empty() || ext_vertices.empty())
    fail(Errc::NotSeparating, "cycle does not separate the graph");

  Surgery s;
  s.kind = SurgeryKind::SplitSeparating;
  std::string clabels;
  for (int i = 0; i < cycle.length(); ++i)
    clabels += (i ? "," : "") + g.label(cycle.vertices[i]);
  s.params = {{"cycle", clabels}, {"k", std::to_string(padding)}};

  // Part 0: exterior side kept, interior deleted.
  {
    DeletionResult del = delete_vertices(g, int_vertices);
    ReducedPart part;
    part.vertex_map = del.vertex_map;
    if (track_face) {
      auto te = tracking_edge(g, *track_face, {}, std::nullopt);
      std::vector<int> expected = map_walk(g.face(*track_face).walk, del.vertex_map);
      std::optional<std::pair<int, int>> mt;
      if (te) mt = std::make_pair(del.vertex_map[te->first], del.vertex_map[te->second]);
      part.face = resolve_face(del.graph, mt, expected);
    } else {
      // Face bounded by the cycle where the interior used to be.
      for (int i = 0; i < cycle.length() && !part.face; ++i) {
        int a = cycle.vertices[i], b = cycle.vertices[(i + 1) % cycle.length()];
        bool a_right = std::binary_search(ext_faces.begin(), ext_faces.end(), g.face_of(a, b));
        int ia = a_right ? b : a, ib = a_right ? a : b;
        part.face = del.graph.face_of(del.vertex_map[ia], del.vertex_map[ib]);
      }
    }
    part.graph = std::move(del.graph);
    s.parts.push_back(std::move(part));
  }

  // Part 1: interior side kept, exterior deleted, one cycle edge padded.
  {
    int ta = -1, tb = -1;
    for (int i = 0; i < cycle.length() && ta < 0; ++i) {
      int a = cycle.vertices[i], b = cycle.vertices[(i + 1) % cycle.length()];
      if (std::binary_search(ext_faces.begin(), ext_faces.end(), g.face_of(a, b))) {
        ta = a;
        tb = b;
      } else if (std::binary_search(ext_faces.begin(), ext_faces.end(), g.face_of(b, a))) {
        ta = b;
        tb = a;
      }
    }
    if (ta < 0) fail(Errc::PreconditionViolated, "no exterior-side edge on the cycle");
    DeletionResult del = delete_vertices(g, ext_vertices);
    int cycle_face = del.graph.face_of(del.vertex_map[ta], del.vertex_map[tb]);

    ReducedPart part;
    if (padding == 0) {
      part.graph = std::move(del.graph);
      part.face = cycle_face;
      part.vertex_map = del.vertex_map;
    } else {
      // Deterministic choice: lexicographically smallest cycle edge.
      int pu = -1, pv = -1;
      for (int i = 0; i < cycle.length(); ++i) {
        int a = cycle.vertices[i], b = cycle.vertices[(i + 1) % cycle.length()];
        int lo = std::min(a, b), hi = std::max(a, b);
        if (pu < 0 || std::make_pair(lo, hi) < std::make_pair(pu, pv)) {
          pu = lo;
          pv = hi;
        }
      }
      Surgery sub =
          subdivide_edge(del.graph, del.vertex_map[pu], del.vertex_map[pv], padding, cycle_face);
      ReducedPart& inner = sub.parts[0];
      part.graph = std::move(inner.graph);
      part.face = inner.face;
      part.vertex_map.resize(g.vertex_count(), -1);
      for (int o = 0; o < g.vertex_count(); ++o)
        if (del.vertex_map[o] >= 0) part.vertex_map[o] = del.vertex_map[o];
      part.created = inner.created;
      part.padding_path = inner.padding_path;
      part.pinned_distinct = inner.pinned_distinct;
    }
    s.parts.push_back(std::move(part));
  }
  return s;
}

Coloring pull_back(const PlaneGraph& original, const Surgery& s,
                   const std::vector<Coloring>& part_colorings, const Coloring* pinned) {
  if (part_colorings.size() != s.parts.size())
    fail(Errc::InvalidArgument, "one coloring per part required");
  Coloring out(original.vertex_count());
  for (std::size_t p = 0; p < s.parts.size(); ++p) {
    const ReducedPart& part = s.parts[p];
    const Coloring& col = part_colorings[p];
    for (int v = 0; v < original.vertex_count(); ++v) {
      int m = part.vertex_map[v];
      if (m < 0) continue;
      int c = col[m];
      if (c < 0) fail(Errc::PreconditionViolated, "part coloring misses a mapped vertex");
      if (out.colored(v) && out[v] != c)
        fail(Errc::PreconditionViolated, "part colorings disagree on a shared vertex");
      out.set(v, c);
    }
    for (auto [a, b] : part.pinned_distinct)
      if (col[a] >= 0 && col[a] == col[b])
        fail(Errc::PreconditionViolated,
             "subdivided edge endpoints share a color; pull-back would be improper");
  }
  for (int v : s.dropped) {
    int c = -1;
    if (pinned && v < pinned->size() && pinned->colored(v)) c = (*pinned)[v];
    if (c < 0) {
      bool used[3] = {false, false, false};
      for (int u : original.sorted_neighbors(v))
        if (out.colored(u)) used[out[u]] = true;
      for (int k = 0; k < 3 && c < 0; ++k)
        if (!used[k]) c = k;
      if (c < 0) fail(Errc::PreconditionViolated, "dropped vertex has three colored constraints");
    }
    for (int u : original.sorted_neighbors(v))
      if (out.colored(u) && out[u] == c)
        fail(Errc::PreconditionViolated, "pinned color conflicts with a neighbor");
    out.set(v, c);
  }
  return out;
}

}  // namespace planecol
