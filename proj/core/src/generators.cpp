#include "zf/generators.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>

#include "zf/errors.hpp"
#include "zf/isomorphism.hpp"

namespace zf {

namespace {

int slot_degree(UnitKind kind) { return kind == UnitKind::Triangle ? 3 : 2; }

// Deterministic bounded uniform draw; std::uniform_int_distribution is
// implementation-defined, so roll our own rejection sampler.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool spec_connected(const UnitSpec& spec) {
  const int k = spec.slot_count();
  if (k == 0) return false;
  std::vector<char> seen(k, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < k; ++u) {
      if (!seen[u] && spec.multiplicity[v][u] > 0) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == k;
}

void validate_spec(const UnitSpec& spec) {
  const int k = spec.slot_count();
  if (k < 2) throw Error(Errc::InvalidSpec, "at least two unit slots needed");
  if (static_cast<int>(spec.multiplicity.size()) != k)
    throw Error(Errc::InvalidSpec, "multiplicity matrix size mismatch");
  for (int a = 0; a < k; ++a) {
    if (static_cast<int>(spec.multiplicity[a].size()) != k)
      throw Error(Errc::InvalidSpec, "multiplicity row size mismatch");
    if (spec.multiplicity[a][a] != 0)
      throw Error(Errc::InvalidSpec, "loop at slot " + std::to_string(a));
    int degree = 0;
    for (int b = 0; b < k; ++b) {
      if (spec.multiplicity[a][b] < 0 ||
          spec.multiplicity[a][b] != spec.multiplicity[b][a])
        throw Error(Errc::InvalidSpec, "multiplicity matrix not symmetric");
      degree += spec.multiplicity[a][b];
    }
    if (degree != slot_degree(spec.kinds[a]))
      throw Error(Errc::InvalidSpec,
                  "slot " + std::to_string(a) + " has degree " +
                      std::to_string(degree));
  }
  if (!spec_connected(spec))
    throw Error(Errc::InvalidSpec, "unit multigraph not connected");
}

}  // namespace

Graph prism() {
  return Graph::from_edge_list(
      6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph k4() {
  return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Graph necklace(int k) {
  if (k < 2)
    throw Error(Errc::BadParameter,
                "necklace needs at least two diamonds, got " +
                    std::to_string(k));
  std::vector<Edge> edges;
  for (int j = 0; j < k; ++j) {
    const int base = 4 * j;
    // ends base and base+3, interiors base+1 and base+2
    edges.insert(edges.end(), {{base, base + 1},
                               {base, base + 2},
                               {base + 1, base + 2},
                               {base + 1, base + 3},
                               {base + 2, base + 3}});
    edges.emplace_back(base + 3, (base + 4) % (4 * k));
  }
  return Graph::from_edge_list(4 * k, edges);
}

int UnitSpec::inflated_order() const {
  int order = 0;
  for (UnitKind kind : kinds) order += kind == UnitKind::Triangle ? 3 : 4;
  return order;
}

Graph inflate(const UnitSpec& spec) {
  validate_spec(spec);
  const int k = spec.slot_count();

  std::vector<int> base(k, 0);
  std::vector<std::vector<int>> stubs(k);
  int next = 0;
  std::vector<Edge> edges;
  for (int slot = 0; slot < k; ++slot) {
    base[slot] = next;
    if (spec.kinds[slot] == UnitKind::Triangle) {
      edges.insert(edges.end(),
                   {{next, next + 1}, {next, next + 2}, {next + 1, next + 2}});
      stubs[slot] = {next, next + 1, next + 2};
      next += 3;
    } else {
      edges.insert(edges.end(), {{next, next + 1},
                                 {next, next + 2},
                                 {next + 1, next + 2},
                                 {next + 1, next + 3},
                                 {next + 2, next + 3}});
      stubs[slot] = {next, next + 3};  // the two ends
      next += 4;
    }
  }

  std::vector<std::size_t> cursor(k, 0);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int copy = 0; copy < spec.multiplicity[a][b]; ++copy)
        edges.emplace_back(stubs[a][cursor[a]++], stubs[b][cursor[b]++]);

  return Graph::from_edge_list(next, edges);
}

Graph random_claw_free_cubic(int units, double diamond_fraction,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  constexpr int kAttempts = 10000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    UnitSpec spec;
    spec.kinds.resize(std::max(units, 0));
    int stub_total = 0;
    for (auto& kind : spec.kinds) {
      kind = uniform01(rng) < diamond_fraction ? UnitKind::Diamond
                                               : UnitKind::Triangle;
      stub_total += slot_degree(kind);
    }
    if (units < 2 || stub_total % 2 != 0) continue;

    std::vector<int> stub_owner;
    stub_owner.reserve(stub_total);
    for (int slot = 0; slot < units; ++slot)
      for (int s = 0; s < slot_degree(spec.kinds[slot]); ++s)
        stub_owner.push_back(slot);
    for (int i = stub_total - 1; i > 0; --i) {
      const int j = static_cast<int>(uniform_below(rng, i + 1));
      std::swap(stub_owner[i], stub_owner[j]);
    }

    spec.multiplicity.assign(units, std::vector<int>(units, 0));
    bool looped = false;
    for (int i = 0; i < stub_total; i += 2) {
      const int a = stub_owner[i];
      const int b = stub_owner[i + 1];
      if (a == b) {
        looped = true;
        break;
      }
      ++spec.multiplicity[a][b];
      ++spec.multiplicity[b][a];
    }
    if (looped || !spec_connected(spec)) continue;
    return inflate(spec);
  }
  throw Error(Errc::Unsatisfiable,
              "no valid unit wiring found for units=" + std::to_string(units) +
                  " diamond_fraction=" + std::to_string(diamond_fraction));
}

namespace {

// All labeled degree-exact multigraphs over the given slot kinds, by
// backtracking on the upper-triangle multiplicities.
void enumerate_wirings(const std::vector<UnitKind>& kinds,
                       std::vector<std::vector<int>>& mult,
                       std::vector<int>& residual, int a, int b,
                       std::vector<UnitSpec>& out) {
  const int k = static_cast<int>(kinds.size());
  if (a == k) {
    for (int slot = 0; slot < k; ++slot)
      if (residual[slot] != 0) return;
    UnitSpec spec{kinds, mult};
    if (spec_connected(spec)) out.push_back(std::move(spec));
    return;
  }
  if (b == k) {
    if (residual[a] != 0) return;  // later pairs cannot feed slot a anymore
    enumerate_wirings(kinds, mult, residual, a + 1, a + 2, out);
    return;
  }
  const int cap = std::min(residual[a], residual[b]);
  for (int copies = 0; copies <= cap; ++copies) {
    mult[a][b] = mult[b][a] = copies;
    residual[a] -= copies;
    residual[b] -= copies;
    enumerate_wirings(kinds, mult, residual, a, b + 1, out);
    residual[a] += copies;
    residual[b] += copies;
  }
  mult[a][b] = mult[b][a] = 0;
}

}  // namespace

std::vector<Graph> enumerate_connected_claw_free_cubic(int max_n, int cap) {
  if (max_n > cap)
    throw Error(Errc::InstanceTooLarge,
                "max_n=" + std::to_string(max_n) + " exceeds cap " +
                    std::to_string(cap));
  std::vector<Graph> corpus;
  for (int triangles = 0; 3 * triangles <= max_n; triangles += 2) {
    for (int diamonds = 0;; ++diamonds) {
      const int order = 3 * triangles + 4 * diamonds;
      if (order > max_n) break;
      if (order < 6 || triangles + diamonds < 2) continue;

      std::vector<UnitKind> kinds(triangles, UnitKind::Triangle);
      kinds.insert(kinds.end(), diamonds, UnitKind::Diamond);
      const int k = static_cast<int>(kinds.size());
      std::vector<std::vector<int>> mult(k, std::vector<int>(k, 0));
      std::vector<int> residual(k);
      for (int slot = 0; slot < k; ++slot)
        residual[slot] = slot_degree(kinds[slot]);
      std::vector<UnitSpec> specs;
      enumerate_wirings(kinds, mult, residual, 0, 1, specs);

      for (const auto& spec : specs) {
        Graph candidate = inflate(spec);
        bool duplicate = false;
        for (const auto& existing : corpus) {
          if (existing.n() == candidate.n() &&
              are_isomorphic(existing, candidate)) {
            duplicate = true;
            break;
          }
        }
        if (!duplicate) corpus.push_back(std::move(candidate));
      }
    }
  }
  std::stable_sort(corpus.begin(), corpus.end(),
                   [](const Graph& a, const Graph& b) { return a.n() < b.n(); });
  return corpus;
}

}  // namespace zf
