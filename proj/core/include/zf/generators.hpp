#pragma once

#include <cstdint>
#include <vector>

#include "zf/graph.hpp"
#include "zf/structure.hpp"

namespace zf {

// Two triangles joined by a perfect matching; vertices 0,1,2 and 3,4,5 with
// rungs (0,3), (1,4), (2,5).
Graph prism();

Graph k4();

// Cyclic chain of k diamond units, order 4k. Diamond j occupies vertices
// 4j..4j+3 with ends 4j and 4j+3; end 4j+3 is joined to end 4(j+1) of the
// next diamond. Throws BadParameter for k < 2.
Graph necklace(int k);

// Blueprint for a claw-free cubic graph: a loop-free connected multigraph on
// unit slots, degree 3 for triangle slots and 2 for diamond slots.
struct UnitSpec {
  std::vector<UnitKind> kinds;
  std::vector<std::vector<int>> multiplicity;  // symmetric, zero diagonal

  int slot_count() const { return static_cast<int>(kinds.size()); }
  int inflated_order() const;
};

// Expands each slot into its unit (triangle slots get one external stub per
// vertex; diamond slots get one stub per end) and joins stubs between slot
// pairs in deterministic lowest-id order. The result is connected, claw-free
// and cubic, and its triangle-diamond partition recovers the spec. Throws
// InvalidSpec.
Graph inflate(const UnitSpec& spec);

// Seeded sampler: draws slot kinds with the given diamond probability,
// pairs stubs uniformly at random, rejects invalid wirings, and inflates.
// Identical arguments always produce the identical labeled graph. Throws
// Unsatisfiable when no valid spec appears within the rejection budget.
Graph random_claw_free_cubic(int units, double diamond_fraction,
                             std::uint64_t seed);

inline constexpr int kDefaultEnumerationCap = 20;

// Exactly one representative per isomorphism class of connected, claw-free,
// cubic graphs with 6 <= n <= max_n (K4 excluded), produced by enumerating
// unit specs, inflating and deduplicating by isomorphism. Throws
// InstanceTooLarge when max_n exceeds the cap.
std::vector<Graph> enumerate_connected_claw_free_cubic(
    int max_n, int cap = kDefaultEnumerationCap);

}  // namespace zf
