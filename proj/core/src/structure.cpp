#include "zf/structure.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "zf/errors.hpp"

namespace zf {

namespace {

bool is_k4(const Graph& g) { return g.n() == 4 && g.m() == 6; }

std::vector<int> common_neighbors(const Graph& g, int u, int v) {
  std::vector<int> out;
  for (int w : g.neighbors(u))
    if (w != v && g.has_edge(v, w)) out.push_back(w);
  return out;
}

}  // namespace

int UnitMultigraph::weighted_degree(int unit) const {
  int total = 0;
  for (int other = 0; other < k; ++other) total += multiplicity[unit][other];
  return total;
}

UnitPartition triangle_diamond_partition(const Graph& g) {
  if (is_k4(g)) throw Error(Errc::IsK4, "K4 has no triangle-diamond partition");
  if (!is_cubic(g) || !is_claw_free(g))
    throw Error(Errc::NotClawFreeCubic,
                "partition requires a claw-free cubic graph");

  const int n = g.n();
  std::vector<Unit> units;
  std::vector<int> owner(n, -1);  // provisional: index into `units`

  // Diamonds first: an edge lying in two triangles spans one. The discovered
  // edge is the interior edge and the two common neighbors are the ends
  // (non-adjacent, else the four vertices would induce K4).
  for (const auto& [u, v] : g.edges()) {
    const auto common = common_neighbors(g, u, v);
    if (common.size() < 2) continue;
    if (common.size() > 2)
      throw Error(Errc::PartitionFailure, "edge in more than two triangles");
    const int w = common[0];
    const int x = common[1];
    if (g.has_edge(w, x))
      throw Error(Errc::PartitionFailure, "K4 block inside the graph");
    std::vector<int> members = {u, v, w, x};
    std::sort(members.begin(), members.end());
    // The same diamond is found once per interior edge; there is exactly one.
    bool fresh = true;
    for (int vertex : members) {
      if (owner[vertex] >= 0) {
        if (units[owner[vertex]].members == members) {
          fresh = false;
          continue;
        }
        throw Error(Errc::PartitionFailure, "overlapping diamonds");
      }
    }
    if (!fresh) continue;
    Unit unit;
    unit.kind = UnitKind::Diamond;
    unit.members = members;
    unit.ends = {std::min(w, x), std::max(w, x)};
    const int index = static_cast<int>(units.size());
    for (int vertex : members) owner[vertex] = index;
    units.push_back(std::move(unit));
  }

  // Every vertex not in a diamond lies in exactly one triangle, and that
  // triangle avoids diamond vertices.
  for (int v = 0; v < n; ++v) {
    if (owner[v] >= 0) continue;
    const auto& nbrs = g.neighbors(v);
    std::vector<std::pair<int, int>> candidates;
    for (std::size_t a = 0; a < nbrs.size(); ++a)
      for (std::size_t b = a + 1; b < nbrs.size(); ++b)
        if (g.has_edge(nbrs[a], nbrs[b]) && owner[nbrs[a]] < 0 &&
            owner[nbrs[b]] < 0)
          candidates.emplace_back(nbrs[a], nbrs[b]);
    if (candidates.size() != 1)
      throw Error(Errc::PartitionFailure,
                  "vertex " + std::to_string(v) + " lies in " +
                      std::to_string(candidates.size()) +
                      " candidate triangles");
    const auto [a, b] = candidates.front();
    Unit unit;
    unit.kind = UnitKind::Triangle;
    unit.members = {v, a, b};
    std::sort(unit.members.begin(), unit.members.end());
    const int index = static_cast<int>(units.size());
    for (int vertex : unit.members) {
      if (owner[vertex] >= 0)
        throw Error(Errc::PartitionFailure, "triangle collision at vertex " +
                                                std::to_string(vertex));
      owner[vertex] = index;
    }
    units.push_back(std::move(unit));
  }

  std::sort(units.begin(), units.end(), [](const Unit& a, const Unit& b) {
    return a.members.front() < b.members.front();
  });

  UnitPartition partition;
  partition.units = std::move(units);
  partition.unit_of.assign(n, -1);
  for (int i = 0; i < static_cast<int>(partition.units.size()); ++i)
    for (int vertex : partition.units[i].members) partition.unit_of[vertex] = i;
  return partition;
}

UnitMultigraph contraction_multigraph(const UnitPartition& p, const Graph& g) {
  UnitMultigraph mg;
  mg.k = static_cast<int>(p.units.size());
  mg.multiplicity.assign(mg.k, std::vector<int>(mg.k, 0));
  for (const auto& [u, v] : g.edges()) {
    const int a = p.unit_of[u];
    const int b = p.unit_of[v];
    if (a != b) {
      ++mg.multiplicity[a][b];
      ++mg.multiplicity[b][a];
    }
  }
  return mg;
}

namespace {

// Depth-first search for the lexicographically smallest cycle of exactly
// `length` through `start`, visiting only units > start.
bool cycle_dfs(const UnitMultigraph& m, int start, int length,
               std::vector<int>& path, std::vector<char>& on_path) {
  const int v = path.back();
  if (static_cast<int>(path.size()) == length)
    return m.multiplicity[v][start] > 0;
  for (int to = start + 1; to < m.k; ++to) {
    if (on_path[to] || m.multiplicity[v][to] == 0) continue;
    path.push_back(to);
    on_path[to] = 1;
    if (cycle_dfs(m, start, length, path, on_path)) return true;
    on_path[to] = 0;
    path.pop_back();
  }
  return false;
}

int bfs_girth(const UnitMultigraph& m) {
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(m.k), parent(m.k), queue;
  for (int s = 0; s < m.k; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    queue.assign(1, s);
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int to = 0; to < m.k; ++to) {
        if (m.multiplicity[v][to] == 0) continue;
        if (dist[to] < 0) {
          dist[to] = dist[v] + 1;
          parent[to] = v;
          queue.push_back(to);
        } else if (to != parent[v]) {
          best = std::min(best, dist[v] + dist[to] + 1);
        }
      }
    }
  }
  return best;
}

}  // namespace

std::vector<int> shortest_cycle(const UnitMultigraph& m) {
  for (int a = 0; a < m.k; ++a) {
    if (m.multiplicity[a][a] != 0)
      throw Error(Errc::NotSimpleCubic, "loop at unit " + std::to_string(a));
    for (int b = 0; b < m.k; ++b)
      if (m.multiplicity[a][b] > 1)
        throw Error(Errc::NotSimpleCubic,
                    "multiple edges between units " + std::to_string(a) +
                        " and " + std::to_string(b));
    if (m.weighted_degree(a) != 3)
      throw Error(Errc::NotSimpleCubic,
                  "unit " + std::to_string(a) + " has degree " +
                      std::to_string(m.weighted_degree(a)));
  }

  const int girth = bfs_girth(m);
  for (int start = 0; start < m.k; ++start) {
    std::vector<int> path = {start};
    std::vector<char> on_path(m.k, 0);
    on_path[start] = 1;
    if (cycle_dfs(m, start, girth, path, on_path)) return path;
  }
  throw Error(Errc::NotSimpleCubic, "acyclic multigraph");  // cubic => cycle
}

}  // namespace zf
