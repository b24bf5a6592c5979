#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

enum class UnitKind { Triangle, Diamond };

// One block of the triangle-diamond partition: either an induced K3 that is
// not inside a diamond, or an induced K4-minus-an-edge. For diamonds, `ends`
// is the missing-edge pair (the two vertices of in-unit degree 2, each of
// which carries the unit's external edges).
struct Unit {
  UnitKind kind = UnitKind::Triangle;
  std::vector<int> members;  // sorted, size 3 or 4
  std::optional<std::pair<int, int>> ends;

  bool operator==(const Unit&) const = default;
};

struct UnitPartition {
  std::vector<Unit> units;  // sorted by minimum member id
  std::vector<int> unit_of;

  bool operator==(const UnitPartition&) const = default;
};

// Units as vertices, cross-edge counts between units as multiplicities.
struct UnitMultigraph {
  int k = 0;
  std::vector<std::vector<int>> multiplicity;  // symmetric, zero diagonal

  int weighted_degree(int unit) const;
};

// The unique partition of a connected, claw-free, cubic graph (other than
// K4) into triangle and diamond units. Diamonds are detected first, via
// edges lying in two triangles; every remaining vertex then lies in exactly
// one triangle. Throws IsK4 / NotClawFreeCubic; PartitionFailure signals an
// input that slipped past those checks (e.g. a disconnected graph with a K4
// component) and never fires on valid input.
UnitPartition triangle_diamond_partition(const Graph& g);

UnitMultigraph contraction_multigraph(const UnitPartition& p, const Graph& g);

// A minimum-length cycle b0 b1 ... bk (b0 adjacent to bk) in a simple cubic
// unit multigraph, as needed when every unit is a triangle joined to its
// neighbors by single edges. Deterministic: b0 is the smallest unit on any
// shortest cycle and the neighbor sequence is lexicographically minimal.
// Throws NotSimpleCubic when the multigraph has loops, multiple edges, or a
// weighted degree other than 3.
std::vector<int> shortest_cycle(const UnitMultigraph& m);

}  // namespace zf
