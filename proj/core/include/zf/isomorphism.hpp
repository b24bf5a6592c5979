#pragma once

#include <optional>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

// Searches for an edge-preserving bijection g -> h by backtracking over
// degree-refined vertex classes. Intended for small instances (n <= 24 or
// so); returns the mapping found, with mapping[v in g] = image in h. The
// search is deterministic, so equal inputs always yield the same bijection.
std::optional<std::vector<int>> find_isomorphism(const Graph& g,
                                                 const Graph& h);

bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace zf
