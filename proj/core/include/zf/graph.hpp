#pragma once

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace zf {

using Edge = std::pair<int, int>;

// Simple undirected graph on dense vertex ids 0..n-1. Immutable after
// construction: the edge set is stored sorted with u < v in every pair, and
// each adjacency list is sorted ascending, so all traversals are
// deterministic. Safe to share across threads.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from (possibly unnormalized, possibly duplicated) vertex
  // pairs. Throws EndpointOutOfRange / SelfLoop.
  static Graph from_edge_list(int n, std::span<const Edge> pairs);
  static Graph from_edge_list(int n, std::initializer_list<Edge> pairs);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  int min_degree() const;
  int max_degree() const;

  // Copy with vertex v renamed to perm[v]; perm must be a permutation of
  // 0..n-1.
  Graph relabeled(std::span<const int> perm) const;

  bool operator==(const Graph& other) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// True iff a single DFS tree spans V(G); vacuously true for n <= 1.
bool is_connected(const Graph& g);

// True iff every vertex has degree 3.
bool is_cubic(const Graph& g);

// True iff no induced K_{1,3}: for every vertex, every 3-subset of its
// neighborhood spans at least one edge.
bool is_claw_free(const Graph& g);

}  // namespace zf
