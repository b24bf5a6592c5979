#pragma once

// Named graphs and small helpers shared across the test suites.

#include <functional>
#include <vector>

#include "zf/errors.hpp"
#include "zf/graph.hpp"

namespace fixtures {

inline zf::Graph claw() {
  return zf::Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
}

inline zf::Graph path(int n) {
  std::vector<zf::Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return zf::Graph::from_edge_list(n, edges);
}

inline zf::Graph cycle(int n) {
  std::vector<zf::Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return zf::Graph::from_edge_list(n, edges);
}

// Vertices are the 3-bit strings, edges flip one bit.
inline zf::Graph cube_q3() {
  std::vector<zf::Edge> edges;
  for (int v = 0; v < 8; ++v)
    for (int bit : {1, 2, 4})
      if ((v ^ bit) > v) edges.emplace_back(v, v ^ bit);
  return zf::Graph::from_edge_list(8, edges);
}

inline zf::Graph k33() {
  std::vector<zf::Edge> edges;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) edges.emplace_back(a, b);
  return zf::Graph::from_edge_list(6, edges);
}

inline zf::Graph two_triangles() {
  return zf::Graph::from_edge_list(6,
                                   {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
}

inline zf::Graph petersen() {
  std::vector<zf::Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return zf::Graph::from_edge_list(10, edges);
}

// Runs f and reports the zf::Error code it throws; throws if it does not.
template <typename F>
zf::Errc thrown_code(F&& f) {
  try {
    f();
  } catch (const zf::Error& e) {
    return e.code();
  }
  throw std::logic_error("expected a zf::Error");
}

}  // namespace fixtures
