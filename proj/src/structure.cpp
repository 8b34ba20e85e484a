#include "planecol/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "planecol/class_check.hpp"

namespace planecol {

namespace {

std::set<std::pair<int, int>> edge_set_of(const std::vector<int>& cyclic) {
  std::set<std::pair<int, int>> es;
  const int k = static_cast<int>(cyclic.size());
  for (int i = 0; i < k; ++i) {
    int u = cyclic[i], v = cyclic[(i + 1) % k];
    es.insert({std::min(u, v), std::max(u, v)});
  }
  return es;
}

// Faces reachable in the dual from `seed` without crossing `blocked` edges.
std::vector<int> dual_side(const PlaneGraph& g, const std::set<std::pair<int, int>>& blocked,
                           int seed) {
  std::vector<char> vis(g.face_count(), 0);
  std::deque<int> q{seed};
  vis[seed] = 1;
  std::vector<int> out;
  while (!q.empty()) {
    int f = q.front();
    q.pop_front();
    out.push_back(f);
    const auto& walk = g.face(f).walk;
    const int d = static_cast<int>(walk.size());
    for (int i = 0; i < d; ++i) {
      int u = walk[i], v = walk[(i + 1) % d];
      if (blocked.count({std::min(u, v), std::max(u, v)})) continue;
      int other = g.face_of(v, u);
      if (!vis[other]) {
        vis[other] = 1;
        q.push_back(other);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> side_vertices(const PlaneGraph& g, const std::vector<int>& side_faces,
                               const std::vector<char>& on_cycle) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> out;
  for (int f : side_faces)
    for (int v : g.face(f).walk)
      if (!on_cycle[v] && !seen[v]) {
        seen[v] = 1;
        out.push_back(v);
      }
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const std::vector<int>& sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

std::vector<std::string> canonical_label_cycle(const std::vector<std::string>& seq) {
  const int k = static_cast<int>(seq.size());
  std::vector<std::string> best;
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<std::string> s = seq;
    if (dir) std::reverse(s.begin(), s.end());
    for (int r = 0; r < k; ++r) {
      std::vector<std::string> rot(s.begin() + r, s.end());
      rot.insert(rot.end(), s.begin(), s.begin() + r);
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

// Labels survive every ear reduction, so a state is identified by its vertex
// label set plus the face walk, no isomorphism search needed.
std::string collapse_key(const PlaneGraph& g, int face) {
  std::vector<std::string> labels = g.labels();
  std::sort(labels.begin(), labels.end());
  std::vector<std::string> walk;
  for (int v : g.face(face).walk) walk.push_back(g.label(v));
  std::ostringstream key;
  for (const auto& l : labels) key << l << ' ';
  key << '|';
  for (const auto& l : canonical_label_cycle(walk)) key << l << ' ';
  return key.str();
}

}  // namespace

CycleSides cycle_sides(const PlaneGraph& g, const CycleHandle& cycle) {
  make_cycle(g, cycle.vertices);  // revalidate
  std::vector<char> on_cycle(g.vertex_count(), 0);
  for (int v : cycle.vertices) on_cycle[v] = 1;
  auto blocked = edge_set_of(cycle.vertices);
  CycleSides s;
  s.right_faces = dual_side(g, blocked, g.face_of(cycle.vertices[0], cycle.vertices[1]));
  s.left_faces = dual_side(g, blocked, g.face_of(cycle.vertices[1], cycle.vertices[0]));
  s.right_vertices = side_vertices(g, s.right_faces, on_cycle);
  s.left_vertices = side_vertices(g, s.left_faces, on_cycle);
  return s;
}

CycleKind classify_cycle(const PlaneGraph& g, const CycleHandle& cycle, int outer_face) {
  if (outer_face < 0 || outer_face >= g.face_count())
    fail(Errc::NoSuchFace, "outer face index out of range");
  CycleSides s = cycle_sides(g, cycle);
  CycleKind kind;
  if (contains(s.right_faces, outer_face)) {
    kind.interior = s.left_vertices;
  } else {
    // Outer face on the left side, or in another component: the right side of
    // the clockwise handle is the interior.
    kind.interior = s.right_vertices;
  }
  std::vector<char> on_cycle(g.vertex_count(), 0);
  for (int v : cycle.vertices) on_cycle[v] = 1;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!on_cycle[v] && !contains(kind.interior, v)) kind.exterior.push_back(v);
  kind.kind = (!kind.interior.empty() && !kind.exterior.empty()) ? CycleClass::Separating
                                                                 : CycleClass::Facial;
  return kind;
}

std::vector<std::pair<int, int>> chords_of(const PlaneGraph& g, const CycleHandle& cycle) {
  make_cycle(g, cycle.vertices);
  const int k = cycle.length();
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (j == i + 1 || (i == 0 && j == k - 1)) continue;
      int u = cycle.vertices[i], v = cycle.vertices[j];
      if (g.adjacent(u, v)) out.push_back({std::min(u, v), std::max(u, v)});
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EarRecord> find_ears(const PlaneGraph& g, int face) {
  if (face < 0 || face >= g.face_count()) fail(Errc::NoSuchFace, "face index out of range");
  const FacialWalk& fw = g.face(face);
  if (fw.degree() != 11 || !fw.is_cycle)
    fail(Errc::NotAnElevenFace, "ears are defined on 11-faces bounded by a cycle");
  std::vector<char> on_face(g.vertex_count(), 0);
  for (int v : fw.walk) on_face[v] = 1;
  std::vector<EarRecord> out;
  for (int i = 0; i < 11; ++i) {
    int u1 = fw.walk[i], u2 = fw.walk[(i + 1) % 11], u3 = fw.walk[(i + 2) % 11];
    for (int v : g.sorted_neighbors(u1)) {
      if (on_face[v]) continue;
      if (g.adjacent(v, u3)) out.push_back(EarRecord{face, {u1, u2, u3}, v});
    }
  }
  return out;
}

EarReduction ear_reduce(const PlaneGraph& g, const EarRecord& ear) {
  const FacialWalk& fw = g.face(ear.face);
  if (fw.degree() != 11 || !fw.is_cycle)
    fail(Errc::NotAnElevenFace, "ear reduction needs an 11-face bounded by a cycle");
  int pos = -1;
  for (int i = 0; i < 11; ++i)
    if (fw.walk[i] == ear.span[0] && fw.walk[(i + 1) % 11] == ear.span[1] &&
        fw.walk[(i + 2) % 11] == ear.span[2]) {
      pos = i;
      break;
    }
  if (pos < 0) fail(Errc::PreconditionViolated, "span is not consecutive on the face walk");
  int u1 = ear.span[0], u2 = ear.span[1], u3 = ear.span[2], apex = ear.apex;
  if (!g.adjacent(apex, u1) || !g.adjacent(apex, u3))
    fail(Errc::PreconditionViolated, "apex is not adjacent to both span ends");

  std::set<std::pair<int, int>> blocked = edge_set_of({u1, u2, u3, apex});
  std::vector<int> inside_faces = dual_side(g, blocked, g.face_of(u2, u1));
  if (contains(inside_faces, ear.face))
    fail(Errc::PreconditionViolated, "ear cycle does not separate the face from its interior");
  std::vector<char> on_ear(g.vertex_count(), 0);
  on_ear[u1] = on_ear[u2] = on_ear[u3] = on_ear[apex] = 1;
  std::vector<int> doomed = side_vertices(g, inside_faces, on_ear);
  doomed.push_back(u2);
  std::sort(doomed.begin(), doomed.end());

  DeletionResult del = delete_vertices(g, doomed);
  int s = del.vertex_map[u3], t = del.vertex_map[fw.walk[(pos + 3) % 11]];
  int nf = del.graph.face_of(s, t);
  const FacialWalk& nw = del.graph.face(nf);
  if (nw.degree() != 11 || !nw.is_cycle)
    fail(Errc::PreconditionViolated, "reduced face is not an 11-cycle");
  return EarReduction{std::move(del.graph), nf, std::move(del.vertex_map)};
}

std::vector<CollapseState> enumerate_collapses(const PlaneGraph& g, int face) {
  const FacialWalk& fw = g.face(face);
  if (fw.degree() != 11 || !fw.is_cycle)
    fail(Errc::NotAnElevenFace, "collapses are defined on 11-faces bounded by a cycle");
  std::vector<CollapseState> states;
  std::set<std::string> seen;
  std::deque<int> queue;
  states.push_back(CollapseState{g, face});
  seen.insert(collapse_key(g, face));
  queue.push_back(0);
  while (!queue.empty()) {
    int idx = queue.front();
    queue.pop_front();
    // Copy: states may reallocate while we append.
    CollapseState state = states[idx];
    for (const EarRecord& ear : find_ears(state.graph, state.face)) {
      EarReduction red = ear_reduce(state.graph, ear);
      std::string key = collapse_key(red.graph, red.face);
      if (seen.insert(key).second) {
        states.push_back(CollapseState{std::move(red.graph), red.face});
        queue.push_back(static_cast<int>(states.size()) - 1);
      }
    }
  }
  return states;
}

std::vector<int> claw_centers(const PlaneGraph& g, int face) {
  const FacialWalk& fw = g.face(face);
  if (!fw.is_cycle) fail(Errc::NotACycleBoundary, "face boundary is not a cycle");
  std::vector<char> on_face(g.vertex_count(), 0);
  for (int v : fw.walk) on_face[v] = 1;
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (on_face[v]) continue;
    int cnt = 0;
    for (int u : g.sorted_neighbors(v)) cnt += on_face[u];
    if (cnt >= 3) out.push_back(v);
  }
  return out;
}

std::vector<std::pair<int, int>> d_claw_centers(const PlaneGraph& g, int face) {
  const FacialWalk& fw = g.face(face);
  if (!fw.is_cycle) fail(Errc::NotACycleBoundary, "face boundary is not a cycle");
  std::vector<char> on_face(g.vertex_count(), 0);
  for (int v : fw.walk) on_face[v] = 1;
  std::vector<int> boundary_neighbors(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int u : g.sorted_neighbors(v)) boundary_neighbors[v] += on_face[u];
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (on_face[u]) continue;
    for (int v : g.sorted_neighbors(u)) {
      if (v <= u || on_face[v]) continue;
      if (boundary_neighbors[u] + boundary_neighbors[v] >= 4) out.push_back({u, v});
    }
  }
  return out;
}

SpecialFaceCertificate is_special_face(const PlaneGraph& g, int face) {
  SpecialFaceCertificate cert;
  cert.face = face;
  const FacialWalk& fw = g.face(face);
  if (fw.degree() != 11 || !fw.is_cycle) {
    cert.reason = "boundary is not an 11-cycle";
    return cert;
  }

  auto walk_edges = edge_set_of(fw.walk);
  for (const CycleHandle& t : cycles_of_length(g, 3)) {
    int shared = 0;
    auto tri_edges = edge_set_of(t.vertices);
    for (const auto& e : tri_edges) shared += walk_edges.count(e);
    if (shared == 1) {
      cert.adjacent_triangle = t;
      break;
    }
  }

  cert.collapse_set = enumerate_collapses(g, face);
  for (int s = 0; s < static_cast<int>(cert.collapse_set.size()); ++s) {
    const CollapseState& st = cert.collapse_set[s];
    std::vector<int> claws = claw_centers(st.graph, st.face);
    if (!claws.empty()) {
      cert.violation = SpecialViolation{SpecialViolation::ClawCenter, s, {claws[0]}};
      cert.reason = "claw-center in collapse state " + std::to_string(s);
      return cert;
    }
    auto dclaws = d_claw_centers(st.graph, st.face);
    if (!dclaws.empty()) {
      cert.violation =
          SpecialViolation{SpecialViolation::DClawCenter, s, {dclaws[0].first, dclaws[0].second}};
      cert.reason = "d-claw-center in collapse state " + std::to_string(s);
      return cert;
    }
  }

  if (!cert.adjacent_triangle) {
    cert.reason = "no triangle shares exactly one edge with the face";
    return cert;
  }
  cert.valid = true;
  return cert;
}

SpecialCycleResult is_special_cycle(const PlaneGraph& g, const CycleHandle& cycle,
                                    int outer_face) {
  if (cycle.length() != 11) fail(Errc::NotElevenCycle, "special cycles have length 11");
  make_cycle(g, cycle.vertices);
  CycleSides s = cycle_sides(g, cycle);
  bool outer_right = contains(s.right_faces, outer_face);
  const std::vector<int>& ext_faces = outer_right ? s.right_faces : s.left_faces;
  const std::vector<int>& ext_vertices = outer_right ? s.right_vertices : s.left_vertices;

  // Directed edge of C whose right face lies on the exterior side; it
  // survives the deletion and identifies the face bounded by C.
  int ta = -1, tb = -1;
  for (int i = 0; i < cycle.length(); ++i) {
    int u = cycle.vertices[i], v = cycle.vertices[(i + 1) % cycle.length()];
    if (contains(ext_faces, g.face_of(u, v))) {
      ta = u;
      tb = v;
      break;
    }
    if (contains(ext_faces, g.face_of(v, u))) {
      ta = v;
      tb = u;
      break;
    }
  }
  if (ta < 0) fail(Errc::PreconditionViolated, "no exterior-side edge found on the cycle");

  DeletionResult del = delete_vertices(g, ext_vertices);
  SpecialCycleResult res;
  res.inner_face = del.graph.face_of(del.vertex_map[ta], del.vertex_map[tb]);
  res.certificate = is_special_face(del.graph, res.inner_face);
  res.special = res.certificate.valid;
  res.inner = std::move(del.graph);
  res.vertex_map = std::move(del.vertex_map);
  return res;
}

}  // namespace planecol
