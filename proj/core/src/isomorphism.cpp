#include "zf/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

namespace zf {

namespace {

// Iterated neighborhood refinement (1-WL): vertices get integer colors,
// repeatedly replaced by the hash of (own color, sorted neighbor colors)
// until the partition into color classes stabilizes.
std::vector<std::uint64_t> refine_colors(const Graph& g) {
  const int n = g.n();
  std::vector<std::uint64_t> color(n);
  for (int v = 0; v < n; ++v) color[v] = static_cast<std::uint64_t>(g.degree(v));
  for (int round = 0; round < n; ++round) {
    std::vector<std::uint64_t> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::uint64_t> sig;
      sig.reserve(g.degree(v));
      for (int u : g.neighbors(v)) sig.push_back(color[u]);
      std::sort(sig.begin(), sig.end());
      std::uint64_t h = color[v] * 0x9e3779b97f4a7c15ULL + 1;
      for (std::uint64_t s : sig) h = (h ^ s) * 0x100000001b3ULL;
      next[v] = h;
    }
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

std::map<std::uint64_t, int> color_histogram(
    const std::vector<std::uint64_t>& colors) {
  std::map<std::uint64_t, int> hist;
  for (auto c : colors) ++hist[c];
  return hist;
}

struct Matcher {
  const Graph& g;
  const Graph& h;
  const std::vector<std::uint64_t>& gc;
  const std::vector<std::uint64_t>& hc;
  std::vector<int> order;    // g-vertices, rarest color class first
  std::vector<int> mapping;  // g -> h, -1 while unassigned
  std::vector<char> used;    // h-vertices already taken

  bool extend(std::size_t idx) {
    if (idx == order.size()) return true;
    const int v = order[idx];
    for (int w = 0; w < h.n(); ++w) {
      if (used[w] || hc[w] != gc[v]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < idx && ok; ++j) {
        const int u = order[j];
        if (g.has_edge(u, v) != h.has_edge(mapping[u], w)) ok = false;
      }
      if (!ok) continue;
      mapping[v] = w;
      used[w] = 1;
      if (extend(idx + 1)) return true;
      mapping[v] = -1;
      used[w] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g,
                                                 const Graph& h) {
  if (g.n() != h.n() || g.m() != h.m()) return std::nullopt;
  const int n = g.n();
  if (n == 0) return std::vector<int>{};

  auto gc = refine_colors(g);
  auto hc = refine_colors(h);
  if (color_histogram(gc) != color_histogram(hc)) return std::nullopt;

  std::map<std::uint64_t, int> class_size = color_histogram(gc);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return class_size[gc[a]] < class_size[gc[b]];
  });

  Matcher matcher{g, h, gc, hc, std::move(order),
                  std::vector<int>(n, -1), std::vector<char>(n, 0)};
  if (matcher.extend(0)) return matcher.mapping;
  return std::nullopt;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

}  // namespace zf
