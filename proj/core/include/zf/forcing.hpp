#pragma once

#include <span>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

struct Play {
  int forcer = -1;
  int forced = -1;

  bool operator==(const Play&) const = default;
};

// Replayable record of one forcing run: starting from `initial`, each play
// (forcer, forced) is legal at the moment it is applied, i.e. the forcer is
// colored and the forced vertex is its unique uncolored neighbor.
struct Chronicle {
  std::vector<int> initial;  // sorted
  std::vector<Play> plays;

  bool operator==(const Chronicle&) const = default;
};

struct ClosureResult {
  std::vector<int> colored;  // sorted fixpoint of the color-change rule
  Chronicle chronicle;
};

// Runs the color-change rule to its fixpoint from s. The fixpoint does not
// depend on play order; the chronicle follows the deterministic order
// (repeatedly scan ids ascending, first eligible forcer plays).
ClosureResult closure(const Graph& g, std::span<const int> s);

bool is_forcing_set(const Graph& g, std::span<const int> s);

// Forcing and G[s] has no isolated vertex.
bool is_total_forcing_set(const Graph& g, std::span<const int> s);

struct ForcingNumber {
  int size = 0;
  std::vector<int> witness;  // first hit in the deterministic search order
};

inline constexpr int kDefaultForcingCap = 24;

// Exact minimum zero forcing set by cardinality-ascending subset search
// (lexicographic within each cardinality, starting at the minimum degree for
// connected regular graphs). Exponential; throws InstanceTooLarge when
// n exceeds the cap.
ForcingNumber zero_forcing_number(const Graph& g,
                                  int cap = kDefaultForcingCap);

// Same search restricted to total forcing sets. The graph must have no
// isolated vertex.
ForcingNumber total_forcing_number(const Graph& g,
                                   int cap = kDefaultForcingCap);

}  // namespace zf
