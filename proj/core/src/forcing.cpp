#include "zf/forcing.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "zf/errors.hpp"

namespace zf {

namespace {

// Fixed-width kernel for the subset searches (n <= 64).
struct MaskKernel {
  std::vector<std::uint64_t> nb;
  std::uint64_t full = 0;

  explicit MaskKernel(const Graph& g) : nb(g.n(), 0) {
    const int n = g.n();
    full = n == 64 ? ~0ULL : (1ULL << n) - 1;
    for (const auto& [u, v] : g.edges()) {
      nb[u] |= 1ULL << v;
      nb[v] |= 1ULL << u;
    }
  }

  std::uint64_t close(std::uint64_t s) const {
    std::uint64_t colored = s;
    bool again = true;
    while (again && colored != full) {
      again = false;
      std::uint64_t pending = colored;
      while (pending) {
        const int v = std::countr_zero(pending);
        pending &= pending - 1;
        const std::uint64_t uncolored = nb[v] & ~colored;
        if (uncolored != 0 && (uncolored & (uncolored - 1)) == 0) {
          colored |= uncolored;
          again = true;
        }
      }
    }
    return colored;
  }

  bool forces_all(std::uint64_t s) const { return close(s) == full; }

  // G[s] has no isolated vertex.
  bool no_isolated(std::uint64_t s) const {
    std::uint64_t pending = s;
    while (pending) {
      const int v = std::countr_zero(pending);
      pending &= pending - 1;
      if ((nb[v] & s) == 0) return false;
    }
    return true;
  }
};

std::uint64_t to_mask(std::span<const int> s) {
  std::uint64_t mask = 0;
  for (int v : s) mask |= 1ULL << v;
  return mask;
}

// General-width closure used by the public closure(); also produces the
// deterministic chronicle.
ClosureResult closure_general(const Graph& g, std::span<const int> s) {
  const int n = g.n();
  std::vector<char> colored(n, 0);
  ClosureResult result;
  result.chronicle.initial.assign(s.begin(), s.end());
  std::sort(result.chronicle.initial.begin(), result.chronicle.initial.end());
  result.chronicle.initial.erase(
      std::unique(result.chronicle.initial.begin(),
                  result.chronicle.initial.end()),
      result.chronicle.initial.end());
  for (int v : result.chronicle.initial) {
    if (v < 0 || v >= n)
      throw Error(Errc::EndpointOutOfRange,
                  "set member " + std::to_string(v) + " with n=" +
                      std::to_string(n));
    colored[v] = 1;
  }

  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int v = 0; v < n && !progressed; ++v) {
      if (!colored[v]) continue;
      int target = -1;
      int uncolored = 0;
      for (int u : g.neighbors(v)) {
        if (!colored[u]) {
          ++uncolored;
          target = u;
        }
      }
      if (uncolored == 1) {
        colored[target] = 1;
        result.chronicle.plays.push_back({v, target});
        progressed = true;
      }
    }
  }

  for (int v = 0; v < n; ++v)
    if (colored[v]) result.colored.push_back(v);
  return result;
}

// Lexicographically next k-combination of 0..n-1; false when exhausted.
bool next_combination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= 0; --i) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool is_regular(const Graph& g) {
  return g.n() == 0 || g.min_degree() == g.max_degree();
}

template <typename Accept>
ForcingNumber search_minimum(const Graph& g, int cap, Accept accept) {
  const int n = g.n();
  if (n > cap)
    throw Error(Errc::InstanceTooLarge,
                "n=" + std::to_string(n) + " exceeds cap " +
                    std::to_string(cap));
  if (n > 64)
    throw Error(Errc::InstanceTooLarge, "subset search kernel tops out at 64");
  if (n == 0) return {0, {}};

  MaskKernel kernel(g);
  const int start = (is_connected(g) && is_regular(g)) ? g.min_degree() : 1;
  for (int k = start; k <= n; ++k) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    do {
      const std::uint64_t mask = to_mask(comb);
      if (accept(kernel, mask)) return {k, comb};
    } while (next_combination(comb, n));
  }
  // Unreachable for the plain forcing search (V(G) always forces); total
  // forcing callers screen isolated vertices first.
  throw Error(Errc::PreconditionBreach, "no admissible set up to n");
}

}  // namespace

ClosureResult closure(const Graph& g, std::span<const int> s) {
  return closure_general(g, s);
}

bool is_forcing_set(const Graph& g, std::span<const int> s) {
  return static_cast<int>(closure_general(g, s).colored.size()) == g.n();
}

bool is_total_forcing_set(const Graph& g, std::span<const int> s) {
  if (!is_forcing_set(g, s)) return false;
  if (g.n() >= 1 && s.empty()) return false;
  for (int v : s) {
    bool has_mate = false;
    for (int u : g.neighbors(v)) {
      if (std::find(s.begin(), s.end(), u) != s.end()) {
        has_mate = true;
        break;
      }
    }
    if (!has_mate) return false;
  }
  return true;
}

ForcingNumber zero_forcing_number(const Graph& g, int cap) {
  return search_minimum(g, cap, [](const MaskKernel& kernel,
                                   std::uint64_t mask) {
    return kernel.forces_all(mask);
  });
}

ForcingNumber total_forcing_number(const Graph& g, int cap) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0)
      throw Error(Errc::PreconditionBreach,
                  "isolated vertex " + std::to_string(v) +
                      " admits no total forcing set");
  return search_minimum(g, cap, [](const MaskKernel& kernel,
                                   std::uint64_t mask) {
    return kernel.no_isolated(mask) && kernel.forces_all(mask);
  });
}

}  // namespace zf
