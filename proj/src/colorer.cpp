#include "planecol/colorer.hpp"

#include <algorithm>
#include <array>

#include "planecol/class_check.hpp"
#include "planecol/structure.hpp"

namespace planecol {

namespace {

int popcount3(unsigned x) { return (x & 1) + ((x >> 1) & 1) + ((x >> 2) & 1); }

// Forward-checking backtracking over domains {0,1,2}; MRV variable order with
// lowest-index tie break, colors tried ascending.
struct FcSolver {
  const PlaneGraph& g;
  std::vector<unsigned> dom;
  std::vector<int> col;
  int remaining;

  explicit FcSolver(const PlaneGraph& graph)
      : g(graph), dom(graph.vertex_count(), 0b111), col(graph.vertex_count(), -1),
        remaining(graph.vertex_count()) {}

  bool assign(int v, int c, std::vector<std::pair<int, unsigned>>& undo) {
    col[v] = c;
    --remaining;
    for (int u : g.sorted_neighbors(v)) {
      if (col[u] >= 0) continue;
      unsigned nd = dom[u] & ~(1u << c);
      if (nd != dom[u]) {
        undo.push_back({u, dom[u]});
        dom[u] = nd;
        if (nd == 0) return false;
      }
    }
    return true;
  }

  void undo_assign(int v, const std::vector<std::pair<int, unsigned>>& undo) {
    col[v] = -1;
    ++remaining;
    for (auto [u, d] : undo) dom[u] = d;
  }

  bool search() {
    if (remaining == 0) return true;
    int best = -1, best_size = 4;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (col[v] >= 0) continue;
      int s = popcount3(dom[v]);
      if (s < best_size) {
        best_size = s;
        best = v;
        if (s == 1) break;
      }
    }
    for (int c = 0; c < 3; ++c) {
      if (!(dom[best] & (1u << c))) continue;
      std::vector<std::pair<int, unsigned>> undo;
      if (assign(best, c, undo) && search()) return true;
      undo_assign(best, undo);
    }
    return false;
  }
};

std::string surgery_params(const Surgery& s) {
  std::string out;
  for (const auto& [k, v] : s.params) {
    if (!out.empty()) out += " ";
    out += k + "=" + v;
  }
  return out;
}

bool proper_on_vertex_set(const PlaneGraph& g, const std::vector<int>& vs, const Coloring& c) {
  for (int v : vs) {
    if (!c.colored(v)) return false;
    for (int u : g.sorted_neighbors(v))
      if (u > v && c.colored(u) && c[u] == c[v] &&
          std::find(vs.begin(), vs.end(), u) != vs.end())
        return false;
  }
  return true;
}

// The reduction engine. Trace steps of abandoned candidates are rolled back,
// so the recorded trace is the audit trail of the successful derivation only.
class Engine {
public:
  Trace trace;

  std::optional<Coloring> run(const PlaneGraph& g, int face, const Coloring& phi, int depth) {
    const int sigma0 = sigma_measure(g);
    if (phi.total()) {
      trace.steps.push_back({depth, "Direct", "", sigma0, sigma0});
      return phi;
    }

    if (auto r = try_splits(g, face, phi, depth)) return r;
    if (auto r = try_chords(g, face, phi, depth)) return r;
    if (auto r = try_four_faces(g, face, phi, depth)) return r;
    if (auto r = try_six_faces(g, face, phi, depth)) return r;

    trace.steps.push_back({depth, "FallbackSearch", "", sigma0, sigma0});
    return brute_force_extend(g, phi);
  }

private:
  // (a) separating 3-, 9- and special 11-cycles: color the outer side first,
  // then extend the cycle's colors inward.
  std::optional<Coloring> try_splits(const PlaneGraph& g, int face, const Coloring& phi,
                                     int depth) {
    const int sigma0 = sigma_measure(g);
    for (int len : {3, 9, 11}) {
      for (const CycleHandle& cand : cycles_of_length(g, len)) {
        CycleKind ck = classify_cycle(g, cand, face);
        if (ck.kind != CycleClass::Separating) continue;
        if (len == 11 && !is_special_cycle(g, cand, face).special) continue;
        Surgery s;
        try {
          s = split_separating(g, cand, 0, face, face);
        } catch (const Error&) {
          continue;
        }
        const ReducedPart& outer = s.parts[0];
        const ReducedPart& inner = s.parts[1];
        if (!outer.face || !inner.face) continue;
        if (sigma_measure(outer.graph) >= sigma0 || sigma_measure(inner.graph) >= sigma0)
          continue;
        if (!face_qualifies(outer.graph, *outer.face)) continue;

        Coloring phi_outer(outer.graph.vertex_count());
        bool lost = false;
        for (int v = 0; v < g.vertex_count() && !lost; ++v) {
          if (!phi.colored(v)) continue;
          int m = outer.vertex_map[v];
          if (m < 0)
            lost = true;
          else
            phi_outer.set(m, phi[v]);
        }
        if (lost) continue;

        std::size_t mark = trace.steps.size();
        trace.steps.push_back({depth, surgery_kind_name(s.kind), surgery_params(s), sigma0,
                               sigma_measure(outer.graph)});
        auto psi = run(outer.graph, *outer.face, phi_outer, depth + 1);
        if (!psi) {
          trace.steps.resize(mark);
          continue;
        }
        Coloring chi(inner.graph.vertex_count());
        for (int v : cand.vertices) chi.set(inner.vertex_map[v], (*psi)[outer.vertex_map[v]]);
        trace.steps.push_back({depth, surgery_kind_name(s.kind), surgery_params(s), sigma0,
                               sigma_measure(inner.graph)});
        auto chi_total = run(inner.graph, *inner.face, chi, depth + 1);
        if (!chi_total) {
          trace.steps.resize(mark);
          continue;
        }
        return pull_back(g, s, {*psi, *chi_total}, &phi);
      }
    }
    return std::nullopt;
  }

  // (b) chord of the designated boundary cutting off a single vertex.
  std::optional<Coloring> try_chords(const PlaneGraph& g, int face, const Coloring& phi,
                                     int depth) {
    const FacialWalk& fw = g.face(face);
    if (!fw.is_cycle || (fw.degree() != 9 && fw.degree() != 11)) return std::nullopt;
    const int d = fw.degree();
    const int sigma0 = sigma_measure(g);
    std::vector<int> pos(g.vertex_count(), -1);
    for (int i = 0; i < d; ++i) pos[fw.walk[i]] = i;
    CycleHandle bc{fw.walk};
    for (auto [u, v] : chords_of(g, bc)) {
      int forward = (pos[v] - pos[u] + d) % d - 1;
      int backward = d - 2 - forward;
      int w = -1;
      if (forward == 1)
        w = fw.walk[(pos[u] + 1) % d];
      else if (backward == 1)
        w = fw.walk[(pos[v] + 1) % d];
      else
        continue;
      Surgery s;
      try {
        s = remove_and_subdivide(g, face, u, v, w);
      } catch (const Error&) {
        continue;
      }
      const ReducedPart& part = s.parts[0];
      if (!part.face) continue;
      if (!in_class_g(part.graph)) continue;
      if (!face_qualifies(part.graph, *part.face)) continue;

      Coloring phi2(part.graph.vertex_count());
      for (int x = 0; x < g.vertex_count(); ++x)
        if (phi.colored(x) && part.vertex_map[x] >= 0) phi2.set(part.vertex_map[x], phi[x]);
      int z = part.created[0];
      for (int c = 0; c < 3; ++c)
        if (c != phi[u] && c != phi[v]) {
          phi2.set(z, c);
          break;
        }

      std::size_t mark = trace.steps.size();
      trace.steps.push_back({depth, surgery_kind_name(s.kind), surgery_params(s), sigma0,
                             sigma_measure(part.graph)});
      auto r = run(part.graph, *part.face, phi2, depth + 1);
      if (!r) {
        trace.steps.resize(mark);
        continue;
      }
      return pull_back(g, s, {*r}, &phi);
    }
    return std::nullopt;
  }

  // (c) identify a diagonal of some 4-face, preferring diagonals off the
  // designated boundary.
  std::optional<Coloring> try_four_faces(const PlaneGraph& g, int face, const Coloring& phi,
                                         int depth) {
    const int sigma0 = sigma_measure(g);
    std::vector<char> on_c(g.vertex_count(), 0);
    for (int v : g.face(face).walk) on_c[v] = 1;
    for (int f4 = 0; f4 < g.face_count(); ++f4) {
      if (f4 == face) continue;
      const FacialWalk& w4 = g.face(f4);
      if (w4.degree() != 4 || !w4.is_cycle) continue;
      std::array<std::pair<int, int>, 2> diags = {
          std::make_pair(w4.walk[0], w4.walk[2]), std::make_pair(w4.walk[1], w4.walk[3])};
      std::stable_sort(diags.begin(), diags.end(), [&](const auto& a, const auto& b) {
        return on_c[a.first] + on_c[a.second] < on_c[b.first] + on_c[b.second];
      });
      for (auto [p, q] : diags) {
        if (g.adjacent(p, q)) continue;
        if (on_c[p] && on_c[q] && phi[p] != phi[q]) continue;
        Surgery s;
        try {
          s = identify_diagonal(g, f4, {p, q}, face);
        } catch (const Error&) {
          continue;
        }
        if (auto r = recurse_identified(g, phi, depth, s, sigma0)) return r;
      }
    }
    return std::nullopt;
  }

  // (d) identify across a 6-face using the anchor rule: either the anchor is
  // on the designated boundary and its successor off it, or the face misses
  // the boundary and the merged successor has no neighbors on it.
  std::optional<Coloring> try_six_faces(const PlaneGraph& g, int face, const Coloring& phi,
                                        int depth) {
    const int sigma0 = sigma_measure(g);
    std::vector<char> on_c(g.vertex_count(), 0);
    for (int v : g.face(face).walk) on_c[v] = 1;
    for (int f6 = 0; f6 < g.face_count(); ++f6) {
      if (f6 == face) continue;
      const FacialWalk& w6 = g.face(f6);
      if (w6.degree() != 6 || !w6.is_cycle) continue;
      bool touches = false;
      for (int v : w6.walk) touches |= on_c[v];
      for (int variant = 0; variant < 12; ++variant) {
        int start = variant / 2;
        bool rev = variant % 2;
        std::array<int, 6> b{};
        for (int i = 0; i < 6; ++i)
          b[i] = w6.walk[rev ? (start + 6 - i) % 6 : (start + i) % 6];
        if (touches) {
          if (!on_c[b[0]] || on_c[b[1]]) continue;
        } else {
          bool u1_touches = false;
          for (int u : g.sorted_neighbors(b[1])) u1_touches |= on_c[u];
          if (u1_touches) continue;
        }
        if (g.adjacent(b[1], b[5]) || g.adjacent(b[2], b[4])) continue;
        Surgery s;
        try {
          s = identify_six_face(g, b, face);
        } catch (const Error&) {
          continue;
        }
        if (auto r = recurse_identified(g, phi, depth, s, sigma0)) return r;
      }
    }
    return std::nullopt;
  }

  std::optional<Coloring> recurse_identified(const PlaneGraph& g, const Coloring& phi,
                                             int depth, const Surgery& s, int sigma0) {
    const ReducedPart& part = s.parts[0];
    if (!part.face) return std::nullopt;
    if (sigma_measure(part.graph) >= sigma0) return std::nullopt;
    if (!in_class_g(part.graph)) return std::nullopt;
    if (!face_qualifies(part.graph, *part.face)) return std::nullopt;

    Coloring phi2(part.graph.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!phi.colored(v)) continue;
      int m = part.vertex_map[v];
      if (m < 0) return std::nullopt;
      if (phi2.colored(m) && phi2[m] != phi[v]) return std::nullopt;  // merged across colors
      phi2.set(m, phi[v]);
    }
    if (!proper_on_vertex_set(part.graph, part.graph.face(*part.face).walk, phi2))
      return std::nullopt;

    std::size_t mark = trace.steps.size();
    trace.steps.push_back({depth, surgery_kind_name(s.kind), surgery_params(s), sigma0,
                           sigma_measure(part.graph)});
    auto r = run(part.graph, *part.face, phi2, depth + 1);
    if (!r) {
      trace.steps.resize(mark);
      return std::nullopt;
    }
    return pull_back(g, s, {*r}, &phi);
  }
};

}  // namespace

int Trace::max_depth() const {
  int best = 0;
  std::vector<int> chain;
  for (const TraceStep& s : steps) {
    chain.resize(s.depth);
    chain.push_back(1);
    best = std::max(best, static_cast<int>(chain.size()));
  }
  return best;
}

bool verify_coloring(const PlaneGraph& g, const Coloring& c) {
  if (c.size() != g.vertex_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (c[v] < 0 || c[v] > 2) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int u : g.sorted_neighbors(v))
      if (u > v && c[u] == c[v]) return false;
  return true;
}

std::optional<Coloring> brute_force_extend(const PlaneGraph& g, const Coloring& partial) {
  const int n = g.vertex_count();
  if (partial.size() != n) fail(Errc::InvalidArgument, "partial coloring has wrong size");
  for (int v = 0; v < n; ++v) {
    if (!partial.colored(v)) continue;
    if (partial[v] > 2) return std::nullopt;
    for (int u : g.sorted_neighbors(v))
      if (u > v && partial.colored(u) && partial[u] == partial[v]) return std::nullopt;
  }
  FcSolver solver(g);
  for (int v = 0; v < n; ++v) {
    if (!partial.colored(v)) continue;
    std::vector<std::pair<int, unsigned>> undo;
    if (!solver.assign(v, partial[v], undo)) return std::nullopt;
  }
  if (!solver.search()) return std::nullopt;
  Coloring out(n);
  for (int v = 0; v < n; ++v) out.set(v, solver.col[v]);
  return out;
}

bool face_qualifies(const PlaneGraph& g, int face) {
  if (face < 0 || face >= g.face_count()) return false;
  const FacialWalk& fw = g.face(face);
  if (fw.degree() == 3) return true;
  if (fw.degree() == 9) return fw.is_cycle;
  if (fw.degree() == 11) return fw.is_cycle && is_special_face(g, face).valid;
  return false;
}

bool color_padding_greedily(const PlaneGraph& part_graph, const std::vector<int>& padding_path,
                            Coloring& coloring) {
  for (int p : padding_path) {
    bool used[3] = {false, false, false};
    for (int u : part_graph.sorted_neighbors(p))
      if (coloring.colored(u)) used[coloring[u]] = true;
    int c = -1;
    for (int k = 0; k < 3 && c < 0; ++k)
      if (!used[k]) c = k;
    if (c < 0) return false;
    coloring.set(p, c);
  }
  return true;
}

ExtensionResult extend_coloring(const ExtensionTask& task) {
  const PlaneGraph& g = task.graph;
  if (task.face < 0 || task.face >= g.face_count())
    fail(Errc::NoSuchFace, "designated face index out of range");
  if (!g.connected()) fail(Errc::NotConnected, "the colorer requires a connected graph");
  if (!in_class_g(g)) fail(Errc::NotInClass, "graph has a 5-cycle, 7-cycle or adjacent triangles");

  const FacialWalk& fw = g.face(task.face);
  std::vector<char> on_face(g.vertex_count(), 0);
  for (int v : fw.walk) on_face[v] = 1;
  const Coloring& phi = task.boundary;
  if (phi.size() != g.vertex_count())
    fail(Errc::ImproperBoundaryColoring, "boundary coloring has wrong size");
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (on_face[v] != (phi.colored(v) ? 1 : 0))
      fail(Errc::ImproperBoundaryColoring,
           "boundary coloring must color exactly the face vertices");
    if (phi.colored(v) && phi[v] > 2)
      fail(Errc::ImproperBoundaryColoring, "colors must lie in {0,1,2}");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!on_face[v]) continue;
    for (int u : g.sorted_neighbors(v))
      if (u > v && on_face[u] && phi[u] == phi[v])
        fail(Errc::ImproperBoundaryColoring,
             "boundary coloring conflicts on an edge within the face vertices");
  }
  if (!face_qualifies(g, task.face))
    fail(Errc::UnqualifiedFace,
         "face must be a 3-face, a 9-face with cyclic boundary, or a special 11-face");

  Engine engine;
  auto r = engine.run(g, task.face, phi, 0);
  if (!r) fail(Errc::Infeasible, "boundary coloring does not extend to the graph");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (phi.colored(v) && (*r)[v] != phi[v])
      throw std::logic_error("extension disagrees with the boundary coloring");
  if (!verify_coloring(g, *r)) throw std::logic_error("extension engine produced an improper coloring");
  return ExtensionResult{std::move(*r), std::move(engine.trace)};
}

ColorResult color_graph(const PlaneGraph& g) {
  if (!in_class_g(g)) fail(Errc::NotInClass, "graph has a 5-cycle, 7-cycle or adjacent triangles");
  if (g.vertex_count() == 0) return {Coloring(0), Trace{}};
  if (!g.connected()) fail(Errc::NotConnected, "the colorer requires a connected graph");

  const int sigma0 = sigma_measure(g);
  auto triangles = cycles_of_length(g, 3);
  bool has46 = !cycles_of_length(g, 4).empty() || !cycles_of_length(g, 6).empty();

  Trace trace;
  auto fallback = [&](const std::string& why) -> ColorResult {
    trace.steps.push_back({0, "FallbackSearch", why, sigma0, sigma0});
    auto r = brute_force_extend(g, Coloring(g.vertex_count()));
    if (!r) fail(Errc::Infeasible, "graph admits no proper 3-coloring");
    return {std::move(*r), std::move(trace)};
  };
  if (triangles.empty()) return fallback("triangle-free base case");
  if (!has46) return fallback("no 4- or 6-cycles base case");

  const CycleHandle& tri = triangles.front();
  Coloring phi(g.vertex_count());
  for (int i = 0; i < 3; ++i) phi.set(tri.vertices[i], i);

  CycleKind ck = classify_cycle(g, tri, 0);
  if (ck.kind == CycleClass::Facial) {
    int fa = g.face_of(tri.vertices[0], tri.vertices[1]);
    int fb = g.face_of(tri.vertices[1], tri.vertices[0]);
    int face = g.face(fa).degree() == 3 && g.face(fa).is_cycle ? fa : fb;
    Engine engine;
    auto r = engine.run(g, face, phi, 0);
    if (!r) return fallback("triangle extension failed");
    if (!verify_coloring(g, *r)) throw std::logic_error("improper coloring from extension engine");
    return {std::move(*r), std::move(engine.trace)};
  }

  Surgery s = split_separating(g, tri, 0, 0, std::nullopt);
  Engine engine;
  engine.trace.steps.push_back({0, surgery_kind_name(s.kind), surgery_params(s), sigma0,
                                sigma_measure(s.parts[0].graph)});
  std::vector<Coloring> part_colorings;
  for (const ReducedPart& part : s.parts) {
    if (!part.face) {
      trace = std::move(engine.trace);
      return fallback("triangle face lost in split");
    }
    Coloring phi_part(part.graph.vertex_count());
    for (int i = 0; i < 3; ++i) phi_part.set(part.vertex_map[tri.vertices[i]], i);
    auto r = engine.run(part.graph, *part.face, phi_part, 1);
    if (!r) {
      trace = std::move(engine.trace);
      return fallback("triangle extension failed on a split part");
    }
    part_colorings.push_back(std::move(*r));
  }
  Coloring combined = pull_back(g, s, part_colorings, &phi);
  if (!verify_coloring(g, combined)) throw std::logic_error("improper combined coloring");
  return {std::move(combined), std::move(engine.trace)};
}

}  // namespace planecol
