#pragma once

#include <string>
#include <vector>

#include "zf/certify.hpp"
#include "zf/forcing.hpp"
#include "zf/graph.hpp"
#include "zf/solvers.hpp"

namespace zf {

// One inequality evaluated on a graph. Fractional bounds are cleared to
// integers (e.g. alpha <= 2n/5 is stored as 5*alpha <= 2*n) so that `holds`
// and `equality` are exact integer comparisons.
struct InequalityRow {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
  bool equality = false;
};

struct BoundsFlags {
  bool is_prism = false;
  bool is_n2 = false;
  bool is_n3 = false;
  bool z_equals_alpha_plus_one = false;
};

struct SolverCaps {
  int forcing_cap = kDefaultForcingCap;
  int independence_cap = kDefaultIndependenceCap;
};

// Every quantity the inequalities mention, with auditable witnesses.
struct BoundsReport {
  int n = 0;
  int n3 = 0;  // triangle units
  int n4 = 0;  // diamond units
  int z = 0;
  int ft = 0;
  int alpha = 0;
  int alpha_prime = 0;
  int cert_size = 0;

  std::vector<int> z_witness;
  std::vector<int> ft_witness;
  std::vector<int> alpha_witness;
  std::vector<Edge> matching_witness;
  Certificate certificate;

  // Rows, in order: Thm1, Thm2, Thm3, Thm4a, Thm4b, Cor5, Cor7a, Cor7b.
  std::vector<InequalityRow> inequalities;
  BoundsFlags flags;

  bool all_hold() const;
  const InequalityRow* find(const std::string& name) const;
};

// Evaluates every inequality on a connected, claw-free, cubic graph other
// than K4. Errors from the component solvers propagate unchanged.
BoundsReport bounds_report(const Graph& g, const SolverCaps& caps = {});

}  // namespace zf
