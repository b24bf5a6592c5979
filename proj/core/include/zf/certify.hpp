#pragma once

#include <span>
#include <string>
#include <vector>

#include "zf/forcing.hpp"
#include "zf/graph.hpp"
#include "zf/structure.hpp"

namespace zf {

enum class CertMode { SmallCase, DiamondStart, Claim2, CycleChain };

const char* cert_mode_name(CertMode mode);

// Constructive witness that Z(G) <= alpha(G) + 1 and Z(G) <= alpha'(G) for
// one graph: a forcing set s, an independent set i with |s| = |i| + 1, and
// the matching m of first-forcing edges of s-vertices (pairwise disjoint,
// |m| = |s|). The chronicle replays legally from s and colors all of V(G),
// with every s-vertex playing at least once.
struct Certificate {
  std::vector<int> s;          // sorted
  std::vector<int> i;          // sorted
  std::vector<Play> m;         // (forcer, first target), sorted by forcer
  Chronicle chronicle;
  int initial_unit = -1;
  CertMode mode = CertMode::SmallCase;

  bool operator==(const Certificate&) const = default;
};

// Mutable state threaded through the greedy coloring rules while a
// certificate is under construction. `play` validates each move, so a rule
// applied to an ineligible configuration fails loudly instead of recording
// an illegal chronicle.
struct BuildState {
  BuildState(const Graph& g, const UnitPartition& partition);

  const Graph* g;
  const UnitPartition* partition;
  std::vector<char> colored;
  int colored_count = 0;
  std::vector<int> forcing_set;      // S, in insertion order
  std::vector<int> independent_set;  // I, in insertion order
  std::vector<Play> plays;

  bool is_colored(int v) const { return colored[v] != 0; }
  void color(int v);                    // greedy coloring, no play recorded
  void play(int forcer, int forced);    // throws PreconditionBreach if illegal
  void run_closure();                   // deterministic free forcing to a halt
  // Lowest-id colored vertex whose two uncolored neighbors both lie in its
  // own unit; -1 when none exists.
  int find_halting_vertex() const;
  // The unique neighbor of v outside v's unit; -1 for diamond interiors.
  int external_neighbor(int v) const;
};

// Greedy rule for a halting vertex v in a triangle unit {v, w, y} with both
// unit-mates uncolored (and v's outside neighbor already colored). Colors
// the lower-id mate w, adds it to S and I, and plays (w,y) when w's outside
// neighbor is colored, else (v,y) then (w, w'). Returns w.
int triangle_rule(BuildState& state, int v);

// Greedy rule for a halting vertex v that is an end of a diamond unit
// {v, w, y, z} (z = v's non-neighbor, w < y the interiors, both uncolored).
// Colors w, adds it to S and I, and plays (w,y) when z is colored, else
// (v,y) then (w,z). Returns w.
int diamond_rule(BuildState& state, int v);

// Runs the constructive procedure on a connected, claw-free, cubic graph
// other than K4: fixed witnesses for the two order-6/order-8 graphs, a
// diamond-unit initialization when one exists, the double-edge shortcut when
// all units are triangles and some pair is joined twice, and otherwise the
// shortest-cycle chain through the contraction multigraph; in every case the
// halting loop applies the greedy rules until the whole graph is colored.
// Throws IsK4 / NotClawFreeCubic / Disconnected; StuckNoEligibleVertex is a
// bug trap that never fires on valid input.
Certificate build_certificate(const Graph& g);

struct VerifyClause {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyClause> clauses;

  bool all_pass() const;
  const VerifyClause* find(const std::string& name) const;
};

// Re-checks a certificate against the graph alone, independently of the
// builder: legal replay from c.s, full coverage, independence of c.i,
// |s| = |i| + 1, every s-vertex forces, and the first-forcing edges form a
// matching of size |s| equal to c.m. Failures are report entries, never
// exceptions.
VerifyReport verify_certificate(const Graph& g, const Certificate& c);

}  // namespace zf
