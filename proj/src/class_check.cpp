#include "planecol/class_check.hpp"

#include <algorithm>
#include <queue>

namespace planecol {

namespace {

// BFS distance from `root` over vertices >= root, used to prune the cycle
// search: a partial path cannot close if the remaining budget is below the
// distance back to the root.
std::vector<int> root_distances(const PlaneGraph& g, int root) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  dist[root] = 0;
  q.push(root);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : g.sorted_neighbors(v)) {
      if (u < root || dist[u] >= 0) continue;
      dist[u] = dist[v] + 1;
      q.push(u);
    }
  }
  return dist;
}

// Rooted DFS enumeration: each cycle is produced exactly once, rooted at its
// minimum vertex, oriented so the second vertex is smaller than the last.
// With `first_only`, stops after one hit.
void dfs_cycles(const PlaneGraph& g, int k, int root, const std::vector<int>& dist,
                std::vector<int>& path, std::vector<char>& used,
                std::vector<CycleHandle>& out, bool first_only) {
  if (first_only && !out.empty()) return;
  int v = path.back();
  int depth = static_cast<int>(path.size());
  if (depth == k) {
    if (g.adjacent(v, root) && path[1] < path.back())
      out.push_back(CycleHandle{path});
    return;
  }
  for (int u : g.sorted_neighbors(v)) {
    if (u <= root || used[u]) continue;
    if (dist[u] < 0 || dist[u] > k - depth) continue;
    used[u] = 1;
    path.push_back(u);
    dfs_cycles(g, k, root, dist, path, used, out, first_only);
    path.pop_back();
    used[u] = 0;
    if (first_only && !out.empty()) return;
  }
}

std::vector<CycleHandle> enumerate_cycles(const PlaneGraph& g, int k, bool first_only) {
  if (k < 3) fail(Errc::InvalidArgument, "cycle length must be at least 3");
  std::vector<CycleHandle> out;
  std::vector<char> used(g.vertex_count(), 0);
  for (int root = 0; root < g.vertex_count(); ++root) {
    std::vector<int> dist = root_distances(g, root);
    std::vector<int> path{root};
    used[root] = 1;
    dfs_cycles(g, k, root, dist, path, used, out, first_only);
    used[root] = 0;
    if (first_only && !out.empty()) return out;
  }
  return out;
}

}  // namespace

std::vector<CycleHandle> cycles_of_length(const PlaneGraph& g, int k) {
  return enumerate_cycles(g, k, false);
}

std::optional<std::pair<CycleHandle, CycleHandle>> adjacent_triangles(const PlaneGraph& g) {
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.sorted_neighbors(u)) {
      if (v <= u) continue;
      std::vector<int> common;
      for (int w : g.sorted_neighbors(u))
        if (w != v && g.adjacent(w, v)) common.push_back(w);
      if (common.size() >= 2)
        return std::make_pair(CycleHandle{canonical_cycle({u, v, common[0]})},
                              CycleHandle{canonical_cycle({u, v, common[1]})});
    }
  return std::nullopt;
}

ClassReport check_class(const PlaneGraph& g) {
  ClassReport r;
  auto fives = enumerate_cycles(g, 5, true);
  if (!fives.empty()) r.five_cycle_witness = fives.front();
  auto sevens = enumerate_cycles(g, 7, true);
  if (!sevens.empty()) r.seven_cycle_witness = sevens.front();
  r.adjacent_triangle_witness = adjacent_triangles(g);
  r.triangle_count = static_cast<int>(cycles_of_length(g, 3).size());
  r.in_class = !r.five_cycle_witness && !r.seven_cycle_witness && !r.adjacent_triangle_witness;
  return r;
}

bool in_class_g(const PlaneGraph& g) {
  if (!enumerate_cycles(g, 5, true).empty()) return false;
  if (!enumerate_cycles(g, 7, true).empty()) return false;
  return !adjacent_triangles(g).has_value();
}

bool has_cycle(const PlaneGraph& g, int k) { return !enumerate_cycles(g, k, true).empty(); }

}  // namespace planecol
