#include "zf/certify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>

#include "zf/errors.hpp"
#include "zf/generators.hpp"
#include "zf/isomorphism.hpp"

namespace zf {

const char* cert_mode_name(CertMode mode) {
  switch (mode) {
    case CertMode::SmallCase: return "small-case";
    case CertMode::DiamondStart: return "diamond-start";
    case CertMode::Claim2: return "claim2";
    case CertMode::CycleChain: return "cycle-chain";
  }
  return "unknown";
}

BuildState::BuildState(const Graph& graph, const UnitPartition& units)
    : g(&graph), partition(&units), colored(graph.n(), 0) {}

void BuildState::color(int v) {
  if (colored[v])
    throw Error(Errc::PreconditionBreach,
                "greedy coloring of already-colored vertex " +
                    std::to_string(v));
  colored[v] = 1;
  ++colored_count;
}

void BuildState::play(int forcer, int forced) {
  if (!colored[forcer] || colored[forced])
    throw Error(Errc::PreconditionBreach,
                "illegal play (" + std::to_string(forcer) + " -> " +
                    std::to_string(forced) + ")");
  for (int u : g->neighbors(forcer)) {
    if (!colored[u] && u != forced)
      throw Error(Errc::PreconditionBreach,
                  "forcer " + std::to_string(forcer) +
                      " has another uncolored neighbor " + std::to_string(u));
  }
  colored[forced] = 1;
  ++colored_count;
  plays.push_back({forcer, forced});
}

void BuildState::run_closure() {
  const int n = g->n();
  bool progressed = true;
  while (progressed && colored_count < n) {
    progressed = false;
    for (int v = 0; v < n && !progressed; ++v) {
      if (!colored[v]) continue;
      int target = -1;
      int uncolored = 0;
      for (int u : g->neighbors(v)) {
        if (!colored[u]) {
          ++uncolored;
          target = u;
        }
      }
      if (uncolored == 1) {
        colored[target] = 1;
        ++colored_count;
        plays.push_back({v, target});
        progressed = true;
      }
    }
  }
}

int BuildState::find_halting_vertex() const {
  const int n = g->n();
  for (int v = 0; v < n; ++v) {
    if (!colored[v]) continue;
    int uncolored = 0;
    bool all_in_unit = true;
    for (int u : g->neighbors(v)) {
      if (!colored[u]) {
        ++uncolored;
        if (partition->unit_of[u] != partition->unit_of[v])
          all_in_unit = false;
      }
    }
    if (uncolored == 2 && all_in_unit) return v;
  }
  return -1;
}

int BuildState::external_neighbor(int v) const {
  const int unit = partition->unit_of[v];
  for (int u : g->neighbors(v))
    if (partition->unit_of[u] != unit) return u;
  return -1;
}

int triangle_rule(BuildState& state, int v) {
  const auto& partition = *state.partition;
  if (v < 0 || v >= state.g->n() || !state.is_colored(v))
    throw Error(Errc::PreconditionBreach, "triangle rule needs a colored v");
  const Unit& unit = partition.units[partition.unit_of[v]];
  if (unit.kind != UnitKind::Triangle)
    throw Error(Errc::PreconditionBreach, "vertex not in a triangle unit");
  std::array<int, 2> mates{-1, -1};
  int count = 0;
  for (int u : unit.members)
    if (u != v) mates[count++] = u;
  if (state.is_colored(mates[0]) || state.is_colored(mates[1]))
    throw Error(Errc::PreconditionBreach, "unit-mate already colored");
  const int outside = state.external_neighbor(v);
  if (!state.is_colored(outside))
    throw Error(Errc::PreconditionBreach,
                "vertex " + std::to_string(v) +
                    " is not a halting vertex of its unit");

  const int w = std::min(mates[0], mates[1]);
  const int y = std::max(mates[0], mates[1]);
  const int w_out = state.external_neighbor(w);
  state.color(w);
  state.forcing_set.push_back(w);
  state.independent_set.push_back(w);
  if (state.is_colored(w_out)) {
    state.play(w, y);
  } else {
    state.play(v, y);
    state.play(w, w_out);
  }
  return w;
}

int diamond_rule(BuildState& state, int v) {
  const auto& partition = *state.partition;
  if (v < 0 || v >= state.g->n() || !state.is_colored(v))
    throw Error(Errc::PreconditionBreach, "diamond rule needs a colored v");
  const Unit& unit = partition.units[partition.unit_of[v]];
  if (unit.kind != UnitKind::Diamond)
    throw Error(Errc::PreconditionBreach, "vertex not in a diamond unit");
  const auto [end_a, end_b] = *unit.ends;
  if (v != end_a && v != end_b)
    throw Error(Errc::PreconditionBreach,
                "vertex " + std::to_string(v) +
                    " is interior to its diamond (no missing-edge partner)");
  const int z = v == end_a ? end_b : end_a;
  std::array<int, 2> interiors{-1, -1};
  int count = 0;
  for (int u : unit.members)
    if (u != end_a && u != end_b) interiors[count++] = u;
  if (state.is_colored(interiors[0]) || state.is_colored(interiors[1]))
    throw Error(Errc::PreconditionBreach, "diamond interior already colored");
  const int outside = state.external_neighbor(v);
  if (!state.is_colored(outside))
    throw Error(Errc::PreconditionBreach,
                "vertex " + std::to_string(v) +
                    " is not a halting vertex of its unit");

  const int w = std::min(interiors[0], interiors[1]);
  const int y = std::max(interiors[0], interiors[1]);
  state.color(w);
  state.forcing_set.push_back(w);
  state.independent_set.push_back(w);
  if (state.is_colored(z)) {
    state.play(w, y);
  } else {
    state.play(v, y);
    state.play(w, z);
  }
  return w;
}

namespace {

bool is_k4(const Graph& g) { return g.n() == 4 && g.m() == 6; }

struct SmallCaseTemplate {
  Graph graph;
  std::vector<int> s;
  std::vector<int> i;
  std::vector<Play> plays;
};

// Order-6: one triangle forces along the three rungs.
SmallCaseTemplate prism_template() {
  return {prism(), {0, 1, 2}, {0, 4}, {{0, 3}, {1, 4}, {2, 5}}};
}

// Order-8: an interior and an end of the first diamond, plus the end of the
// second diamond adjacent to it and one of its interiors; the four forcing
// edges form a perfect matching.
SmallCaseTemplate n2_template() {
  return {necklace(2), {1, 3, 4, 5}, {0, 3, 5}, {{3, 2}, {1, 0}, {4, 6}, {5, 7}}};
}

Certificate small_case_certificate(const Graph& g,
                                   const SmallCaseTemplate& tmpl) {
  const auto mapping = find_isomorphism(tmpl.graph, g);
  if (!mapping)
    throw Error(Errc::StuckNoEligibleVertex,
                "order-" + std::to_string(g.n()) +
                    " input does not match the unique graph of that order");
  const auto& map = *mapping;

  Certificate cert;
  cert.mode = CertMode::SmallCase;
  for (int v : tmpl.s) cert.s.push_back(map[v]);
  for (int v : tmpl.i) cert.i.push_back(map[v]);
  for (const auto& play : tmpl.plays)
    cert.chronicle.plays.push_back({map[play.forcer], map[play.forced]});
  for (const auto& play : cert.chronicle.plays)
    cert.m.push_back(play);  // small-case plays are exactly the S-forces
  std::sort(cert.m.begin(), cert.m.end(),
            [](const Play& a, const Play& b) { return a.forcer < b.forcer; });
  cert.chronicle.initial = cert.s;
  std::sort(cert.chronicle.initial.begin(), cert.chronicle.initial.end());
  std::sort(cert.s.begin(), cert.s.end());
  std::sort(cert.i.begin(), cert.i.end());

  const auto partition = triangle_diamond_partition(g);
  cert.initial_unit = partition.unit_of[map[tmpl.s.front()]];
  return cert;
}

int first_diamond_unit(const UnitPartition& partition) {
  for (int i = 0; i < static_cast<int>(partition.units.size()); ++i)
    if (partition.units[i].kind == UnitKind::Diamond) return i;
  return -1;
}

// The vertex of `unit` whose external neighbor lies in `target`.
int exit_vertex(const BuildState& state, const Unit& unit, int target) {
  for (int v : unit.members) {
    const int out = state.external_neighbor(v);
    if (out >= 0 && state.partition->unit_of[out] == target) return v;
  }
  throw Error(Errc::StuckNoEligibleVertex,
              "no edge from unit toward unit " + std::to_string(target));
}

int diamond_start_init(BuildState& state) {
  const auto& partition = *state.partition;
  const int unit_index = first_diamond_unit(partition);
  const Unit& unit = partition.units[unit_index];
  const auto [x1, x4] = *unit.ends;  // the missing edge, x1 < x4
  std::array<int, 2> interiors{-1, -1};
  int count = 0;
  for (int u : unit.members)
    if (u != x1 && u != x4) interiors[count++] = u;
  const int x2 = std::min(interiors[0], interiors[1]);
  const int x3 = std::max(interiors[0], interiors[1]);

  for (int v : {x1, x2, x4}) {
    state.color(v);
    state.forcing_set.push_back(v);
  }
  state.independent_set = {x1, x4};
  state.play(x2, x3);
  state.play(x1, state.external_neighbor(x1));
  state.play(x4, state.external_neighbor(x4));
  return unit_index;
}

int claim2_init(BuildState& state, const UnitMultigraph& mg) {
  const auto& partition = *state.partition;
  int u1 = -1;
  int u3 = -1;
  for (int a = 0; a < mg.k && u1 < 0; ++a)
    for (int b = 0; b < mg.k; ++b)
      if (mg.multiplicity[a][b] >= 2) {
        u1 = a;
        u3 = b;
        break;
      }
  const Unit& unit1 = partition.units[u1];

  std::vector<int> doubled;  // vertices of U1 pointing into U3
  int x1 = -1;
  for (int v : unit1.members) {
    const int out = state.external_neighbor(v);
    if (partition.unit_of[out] == u3)
      doubled.push_back(v);
    else
      x1 = v;
  }
  if (doubled.size() != 2 || x1 < 0)
    throw Error(Errc::StuckNoEligibleVertex, "double join shape mismatch");
  const int x2 = std::min(doubled[0], doubled[1]);
  const int x3 = std::max(doubled[0], doubled[1]);
  const int w1 = state.external_neighbor(x1);
  const int y1 = state.external_neighbor(x2);
  const int z1 = state.external_neighbor(x3);
  int r = -1;
  for (int v : partition.units[u3].members)
    if (v != y1 && v != z1) r = v;

  for (int v : {x1, x2, x3}) {
    state.color(v);
    state.forcing_set.push_back(v);
  }
  state.independent_set = {x1, y1};
  state.play(x1, w1);
  state.play(x2, y1);
  state.play(x3, z1);

  triangle_rule(state, w1);
  // q's forcing may already have colored r when q and r are adjacent.
  if (!state.is_colored(r)) state.play(y1, r);
  return u1;
}

int cycle_chain_init(BuildState& state, const UnitMultigraph& mg) {
  const auto& partition = *state.partition;
  const std::vector<int> cycle = shortest_cycle(mg);
  const int k = static_cast<int>(cycle.size()) - 1;  // units b0..bk

  const Unit& unit1 = partition.units[cycle[0]];
  const int x1 = exit_vertex(state, unit1, cycle[1]);
  const int x2 = exit_vertex(state, unit1, cycle[k]);
  int x3 = -1;
  for (int v : unit1.members)
    if (v != x1 && v != x2) x3 = v;

  // Walk the chain T_1..T_k: w_i is the entry vertex, v_i the exit toward
  // T_{i+1} (v_k's exit is x2 itself), u_i the third vertex.
  std::vector<int> w(k + 1, -1), v(k + 1, -1), u(k + 1, -1);
  int entry_from = x1;
  for (int i = 1; i <= k; ++i) {
    const Unit& unit = partition.units[cycle[i]];
    w[i] = state.external_neighbor(entry_from);
    if (partition.unit_of[w[i]] != cycle[i])
      throw Error(Errc::StuckNoEligibleVertex, "chain entry mismatch");
    v[i] = exit_vertex(state, unit, cycle[(i + 1) % (k + 1)]);
    for (int member : unit.members)
      if (member != w[i] && member != v[i]) u[i] = member;
    entry_from = v[i];
  }
  const int y1 = state.external_neighbor(x2);
  if (y1 != v[k])
    throw Error(Errc::StuckNoEligibleVertex, "chain does not close at x2");

  state.forcing_set = {x1, x2, x3};
  state.independent_set = {x1, y1};
  for (int i = 1; i <= k - 1; ++i) {
    state.forcing_set.push_back(v[i]);
    state.independent_set.push_back(v[i]);
  }
  for (int vertex : state.forcing_set) state.color(vertex);

  state.play(x1, w[1]);
  state.play(x2, y1);
  state.play(x3, state.external_neighbor(x3));
  for (int i = 1; i <= k - 1; ++i) {
    state.play(w[i], u[i]);
    state.play(v[i], w[i + 1]);
  }
  state.play(y1, u[k]);
  return cycle[0];
}

Certificate assemble(BuildState& state, CertMode mode, int initial_unit) {
  Certificate cert;
  cert.mode = mode;
  cert.initial_unit = initial_unit;
  cert.s = state.forcing_set;
  std::sort(cert.s.begin(), cert.s.end());
  cert.i = state.independent_set;
  std::sort(cert.i.begin(), cert.i.end());
  cert.chronicle.initial = cert.s;
  cert.chronicle.plays = state.plays;

  std::map<int, int> first_target;
  for (const auto& play : state.plays)
    first_target.emplace(play.forcer, play.forced);
  for (int v : cert.s) {
    const auto it = first_target.find(v);
    if (it == first_target.end())
      throw Error(Errc::StuckNoEligibleVertex,
                  "constructed vertex " + std::to_string(v) + " never forces");
    cert.m.push_back({v, it->second});
  }
  return cert;
}

}  // namespace

Certificate build_certificate(const Graph& g) {
  if (is_k4(g))
    throw Error(Errc::IsK4, "the construction excludes K4");
  if (!is_cubic(g) || !is_claw_free(g))
    throw Error(Errc::NotClawFreeCubic,
                "certificate construction requires a claw-free cubic graph");
  if (!is_connected(g))
    throw Error(Errc::Disconnected, "certificate construction requires a connected graph");

  if (g.n() == 6) return small_case_certificate(g, prism_template());
  if (g.n() == 8) return small_case_certificate(g, n2_template());

  const UnitPartition partition = triangle_diamond_partition(g);
  BuildState state(g, partition);

  CertMode mode;
  int initial_unit;
  if (first_diamond_unit(partition) >= 0) {
    mode = CertMode::DiamondStart;
    initial_unit = diamond_start_init(state);
  } else {
    const UnitMultigraph mg = contraction_multigraph(partition, g);
    bool doubled = false;
    for (int a = 0; a < mg.k && !doubled; ++a)
      for (int b = a + 1; b < mg.k; ++b)
        if (mg.multiplicity[a][b] >= 2) {
          doubled = true;
          break;
        }
    if (doubled) {
      mode = CertMode::Claim2;
      initial_unit = claim2_init(state, mg);
    } else {
      mode = CertMode::CycleChain;
      initial_unit = cycle_chain_init(state, mg);
    }
  }

  while (true) {
    state.run_closure();
    if (state.colored_count == g.n()) break;
    const int v = state.find_halting_vertex();
    if (v < 0)
      throw Error(Errc::StuckNoEligibleVertex,
                  "forcing halted with no eligible unit entry");
    if (partition.units[partition.unit_of[v]].kind == UnitKind::Triangle)
      triangle_rule(state, v);
    else
      diamond_rule(state, v);
  }

  return assemble(state, mode, initial_unit);
}

bool VerifyReport::all_pass() const {
  for (const auto& clause : clauses)
    if (!clause.pass) return false;
  return true;
}

const VerifyClause* VerifyReport::find(const std::string& name) const {
  for (const auto& clause : clauses)
    if (clause.name == name) return &clause;
  return nullptr;
}

VerifyReport verify_certificate(const Graph& g, const Certificate& c) {
  VerifyReport report;
  const int n = g.n();
  auto add = [&report](const std::string& name, bool pass,
                       const std::string& detail = "") {
    report.clauses.push_back({name, pass, detail});
  };

  // Replay the chronicle from c.s.
  std::set<int> s_set(c.s.begin(), c.s.end());
  std::set<int> initial_set(c.chronicle.initial.begin(),
                            c.chronicle.initial.end());
  bool replay_ok = s_set == initial_set;
  std::string replay_detail = replay_ok ? "" : "chronicle initial differs from S";
  std::vector<char> colored(n, 0);
  std::set<int> forced_once;
  for (int v : c.s) {
    if (v < 0 || v >= n) {
      replay_ok = false;
      replay_detail = "S member out of range";
    } else {
      colored[v] = 1;
    }
  }
  if (replay_ok) {
    for (const auto& play : c.chronicle.plays) {
      if (play.forcer < 0 || play.forcer >= n || play.forced < 0 ||
          play.forced >= n || !colored[play.forcer] || colored[play.forced] ||
          !g.has_edge(play.forcer, play.forced)) {
        replay_ok = false;
        replay_detail = "illegal play";
        break;
      }
      if (!forced_once.insert(play.forced).second) {
        replay_ok = false;
        replay_detail = "vertex forced twice";
        break;
      }
      int uncolored = 0;
      for (int u : g.neighbors(play.forcer))
        if (!colored[u]) ++uncolored;
      if (uncolored != 1) {
        replay_ok = false;
        replay_detail = "forcer had " + std::to_string(uncolored) +
                        " uncolored neighbors";
        break;
      }
      colored[play.forced] = 1;
    }
  }
  add("replay-legal", replay_ok, replay_detail);

  int colored_total = 0;
  for (int v = 0; v < n; ++v) colored_total += colored[v];
  add("covers-graph", replay_ok && colored_total == n,
      "colored " + std::to_string(colored_total) + " of " + std::to_string(n));

  bool independent = true;
  for (std::size_t a = 0; a < c.i.size() && independent; ++a)
    for (std::size_t b = a + 1; b < c.i.size(); ++b)
      if (g.has_edge(c.i[a], c.i[b])) {
        independent = false;
        break;
      }
  add("independent", independent);

  add("size-offset",
      c.s.size() == c.i.size() + 1,
      "|S|=" + std::to_string(c.s.size()) + " |I|=" + std::to_string(c.i.size()));

  std::set<int> forcers;
  std::map<int, int> first_target;
  for (const auto& play : c.chronicle.plays) {
    forcers.insert(play.forcer);
    first_target.emplace(play.forcer, play.forced);
  }
  bool all_force = true;
  for (int v : c.s)
    if (!forcers.count(v)) all_force = false;
  add("all-forcers", all_force);

  bool matching_ok = c.m.size() == c.s.size();
  std::set<int> touched;
  for (const auto& [forcer, target] : c.m) {
    const auto it = first_target.find(forcer);
    if (!s_set.count(forcer) || it == first_target.end() ||
        it->second != target) {
      matching_ok = false;
      break;
    }
    if (!touched.insert(forcer).second || !touched.insert(target).second) {
      matching_ok = false;  // shared endpoint: not a matching
      break;
    }
  }
  add("matching", matching_ok);

  return report;
}

}  // namespace zf
