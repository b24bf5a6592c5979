#include "zf/graph.hpp"

#include <algorithm>
#include <string>

#include "zf/errors.hpp"

namespace zf {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::EndpointOutOfRange: return "EndpointOutOfRange";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::TruncatedBitVector: return "TruncatedBitVector";
    case Errc::NonPrintableByte: return "NonPrintableByte";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::IsK4: return "IsK4";
    case Errc::NotClawFreeCubic: return "NotClawFreeCubic";
    case Errc::Disconnected: return "Disconnected";
    case Errc::PartitionFailure: return "PartitionFailure";
    case Errc::NotSimpleCubic: return "NotSimpleCubic";
    case Errc::StuckNoEligibleVertex: return "StuckNoEligibleVertex";
    case Errc::PreconditionBreach: return "PreconditionBreach";
    case Errc::BadParameter: return "BadParameter";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::Unsatisfiable: return "Unsatisfiable";
  }
  return "UnknownError";
}

Graph Graph::from_edge_list(int n, std::span<const Edge> pairs) {
  if (n < 0) throw Error(Errc::EndpointOutOfRange, "negative vertex count");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error(Errc::EndpointOutOfRange,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) +
                      ") with n=" + std::to_string(n));
    if (a == b)
      throw Error(Errc::SelfLoop, "loop at vertex " + std::to_string(a));
    g.edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()),
                 g.edges_.end());
  g.adj_.assign(n, {});
  for (const auto& [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<Edge> pairs) {
  return from_edge_list(n, std::span<const Edge>(pairs.begin(), pairs.size()));
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw Error(Errc::BadParameter, "permutation size mismatch");
  std::vector<Edge> mapped;
  mapped.reserve(edges_.size());
  for (const auto& [u, v] : edges_) mapped.emplace_back(perm[u], perm[v]);
  return from_edge_list(n_, mapped);
}

bool is_connected(const Graph& g) {
  const int n = g.n();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

bool is_cubic(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != 3) return false;
  return true;
}

bool is_claw_free(const Graph& g) {
  for (int v = 0; v < g.n(); ++v) {
    const auto& nbrs = g.neighbors(v);
    const int d = static_cast<int>(nbrs.size());
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b)
        for (int c = b + 1; c < d; ++c) {
          if (!g.has_edge(nbrs[a], nbrs[b]) && !g.has_edge(nbrs[a], nbrs[c]) &&
              !g.has_edge(nbrs[b], nbrs[c]))
            return false;
        }
  }
  return true;
}

}  // namespace zf
