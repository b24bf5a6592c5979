#pragma once

#include <vector>

#include "zf/graph.hpp"

namespace zf {

inline constexpr int kDefaultIndependenceCap = 40;

struct IndependenceResult {
  int alpha = 0;
  std::vector<int> witness;  // sorted maximum independent set
};

// Exact maximum independent set by branch and bound: branch on a vertex of
// maximum residual degree (include/exclude), bound by the remaining vertex
// count. Deterministic tie-breaks by vertex id. Throws InstanceTooLarge
// above the cap.
IndependenceResult independence_number(const Graph& g,
                                       int cap = kDefaultIndependenceCap);

struct MatchingResult {
  int alpha_prime = 0;
  std::vector<Edge> witness;  // maximum matching, normalized u < v, sorted
};

// Exact maximum matching by augmenting-path search with blossom
// contraction. Polynomial; no size cap.
MatchingResult matching_number(const Graph& g);

}  // namespace zf
