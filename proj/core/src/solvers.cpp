#include "zf/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "zf/errors.hpp"

namespace zf {

namespace {

struct IndependenceSearch {
  std::vector<std::uint64_t> closed_nb;  // N[v] as a mask
  std::vector<std::uint64_t> nb;
  int best = -1;
  std::uint64_t best_set = 0;

  explicit IndependenceSearch(const Graph& g)
      : closed_nb(g.n()), nb(g.n(), 0) {
    for (const auto& [u, v] : g.edges()) {
      nb[u] |= 1ULL << v;
      nb[v] |= 1ULL << u;
    }
    for (int v = 0; v < g.n(); ++v) closed_nb[v] = nb[v] | (1ULL << v);
  }

  void run(std::uint64_t candidates, int size, std::uint64_t chosen) {
    if (size + std::popcount(candidates) <= best) return;
    if (candidates == 0) {
      best = size;
      best_set = chosen;
      return;
    }
    // Branch on the candidate of maximum residual degree, lowest id first.
    int pick = -1;
    int pick_degree = -1;
    std::uint64_t scan = candidates;
    while (scan) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      const int d = std::popcount(nb[v] & candidates);
      if (d > pick_degree) {
        pick_degree = d;
        pick = v;
      }
    }
    run(candidates & ~closed_nb[pick], size + 1, chosen | (1ULL << pick));
    run(candidates & ~(1ULL << pick), size, chosen);
  }
};

}  // namespace

IndependenceResult independence_number(const Graph& g, int cap) {
  const int n = g.n();
  if (n > cap)
    throw Error(Errc::InstanceTooLarge,
                "n=" + std::to_string(n) + " exceeds cap " +
                    std::to_string(cap));
  if (n > 64)
    throw Error(Errc::InstanceTooLarge, "branch and bound tops out at 64");
  if (n == 0) return {0, {}};

  IndependenceSearch search(g);
  const std::uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;
  search.run(all, 0, 0);

  IndependenceResult result;
  result.alpha = search.best;
  std::uint64_t set = search.best_set;
  while (set) {
    result.witness.push_back(std::countr_zero(set));
    set &= set - 1;
  }
  return result;
}

namespace {

// Maximum matching in a general graph: grow alternating trees from free
// vertices, contracting odd cycles (blossoms) onto their base as they
// appear.
struct Blossom {
  const Graph& g;
  int n;
  std::vector<int> match, parent, base;
  std::vector<char> used, in_blossom;

  explicit Blossom(const Graph& graph)
      : g(graph),
        n(graph.n()),
        match(n, -1),
        parent(n, -1),
        base(n, 0),
        used(n, 0),
        in_blossom(n, 0) {}

  int lowest_common_base(int a, int b) {
    std::vector<char> seen(n, 0);
    int v = a;
    while (true) {
      v = base[v];
      seen[v] = 1;
      if (match[v] == -1) break;
      v = parent[match[v]];
    }
    v = b;
    while (!seen[base[v]]) v = parent[match[v]];
    return base[v];
  }

  void mark_path(int v, int stem, int child) {
    while (base[v] != stem) {
      in_blossom[base[v]] = 1;
      in_blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  }

  bool augment_from(int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    for (int v = 0; v < n; ++v) base[v] = v;
    used[root] = 1;
    std::vector<int> queue = {root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int to : g.neighbors(v)) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          // Odd cycle: contract the blossom onto its base.
          const int stem = lowest_common_base(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), 0);
          mark_path(v, stem, to);
          mark_path(to, stem, v);
          for (int u = 0; u < n; ++u) {
            if (in_blossom[base[u]]) {
              base[u] = stem;
              if (!used[u]) {
                used[u] = 1;
                queue.push_back(u);
              }
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) {
            // Augmenting path: alternate matched edges back to the root.
            int u = to;
            while (u != -1) {
              const int pv = parent[u];
              const int next = match[pv];
              match[u] = pv;
              match[pv] = u;
              u = next;
            }
            return true;
          }
          used[match[to]] = 1;
          queue.push_back(match[to]);
        }
      }
    }
    return false;
  }
};

}  // namespace

MatchingResult matching_number(const Graph& g) {
  Blossom solver(g);
  for (int v = 0; v < solver.n; ++v)
    if (solver.match[v] == -1) solver.augment_from(v);

  MatchingResult result;
  for (int v = 0; v < solver.n; ++v)
    if (solver.match[v] > v)
      result.witness.emplace_back(v, solver.match[v]);
  result.alpha_prime = static_cast<int>(result.witness.size());
  return result;
}

}  // namespace zf
