#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "zf/errors.hpp"
#include "zf/generators.hpp"
#include "zf/structure.hpp"

using zf::Graph;
using zf::UnitKind;
using zf::UnitMultigraph;

namespace {

// 2 triangles doubly joined plus a diamond hanging off both: the unique
// connected claw-free cubic graph on 10 vertices.
Graph ten_vertex_graph() {
  zf::UnitSpec spec;
  spec.kinds = {UnitKind::Triangle, UnitKind::Triangle, UnitKind::Diamond};
  spec.multiplicity = {{0, 2, 1}, {2, 0, 1}, {1, 1, 0}};
  return zf::inflate(spec);
}

UnitMultigraph complete_unit_graph(int k) {
  UnitMultigraph m;
  m.k = k;
  m.multiplicity.assign(k, std::vector<int>(k, 1));
  for (int i = 0; i < k; ++i) m.multiplicity[i][i] = 0;
  return m;
}

}  // namespace

TEST_CASE("the prism splits into its two triangles") {
  const auto partition = zf::triangle_diamond_partition(zf::prism());
  REQUIRE(partition.units.size() == 2);
  CHECK(partition.units[0].kind == UnitKind::Triangle);
  CHECK(partition.units[0].members == std::vector<int>{0, 1, 2});
  CHECK(partition.units[1].members == std::vector<int>{3, 4, 5});
  CHECK_FALSE(partition.units[0].ends.has_value());
}

TEST_CASE("necklaces split into their diamonds") {
  const auto two = zf::triangle_diamond_partition(zf::necklace(2));
  REQUIRE(two.units.size() == 2);
  for (const auto& unit : two.units) CHECK(unit.kind == UnitKind::Diamond);
  CHECK(two.units[0].ends == std::pair<int, int>{0, 3});
  CHECK(two.units[1].ends == std::pair<int, int>{4, 7});

  const auto three = zf::triangle_diamond_partition(zf::necklace(3));
  CHECK(three.units.size() == 3);
}

TEST_CASE("partition preconditions") {
  CHECK(fixtures::thrown_code([] {
          zf::triangle_diamond_partition(zf::k4());
        }) == zf::Errc::IsK4);
  CHECK(fixtures::thrown_code([] {
          zf::triangle_diamond_partition(fixtures::path(3));
        }) == zf::Errc::NotClawFreeCubic);
  CHECK(fixtures::thrown_code([] {
          zf::triangle_diamond_partition(fixtures::k33());
        }) == zf::Errc::NotClawFreeCubic);
}

TEST_CASE("mixed partition on the order-10 graph") {
  const Graph g = ten_vertex_graph();
  CHECK(g.n() == 10);
  CHECK(zf::is_cubic(g));
  CHECK(zf::is_claw_free(g));
  const auto partition = zf::triangle_diamond_partition(g);
  int triangles = 0;
  int diamonds = 0;
  for (const auto& unit : partition.units)
    (unit.kind == UnitKind::Triangle ? triangles : diamonds) += 1;
  CHECK(triangles == 2);
  CHECK(diamonds == 1);
}

TEST_CASE("unit bookkeeping is consistent across the corpus") {
  for (const auto& g : zf::enumerate_connected_claw_free_cubic(14)) {
    const auto partition = zf::triangle_diamond_partition(g);
    int n3 = 0;
    int n4 = 0;
    for (const auto& unit : partition.units) {
      if (unit.kind == UnitKind::Triangle) {
        CHECK(unit.members.size() == 3);
        ++n3;
      } else {
        CHECK(unit.members.size() == 4);
        REQUIRE(unit.ends.has_value());
        CHECK_FALSE(g.has_edge(unit.ends->first, unit.ends->second));
        ++n4;
      }
    }
    CHECK(3 * n3 + 4 * n4 == g.n());
    for (int v = 0; v < g.n(); ++v) {
      const int unit = partition.unit_of[v];
      REQUIRE(unit >= 0);
      bool member = false;
      for (int u : partition.units[unit].members) member = member || u == v;
      CHECK(member);
    }
    // Units are indexed by minimum member id.
    for (std::size_t i = 1; i < partition.units.size(); ++i)
      CHECK(partition.units[i - 1].members.front() <
            partition.units[i].members.front());

    const auto mg = zf::contraction_multigraph(partition, g);
    for (std::size_t i = 0; i < partition.units.size(); ++i)
      CHECK(mg.weighted_degree(static_cast<int>(i)) ==
            (partition.units[i].kind == UnitKind::Triangle ? 3 : 2));
  }
}

TEST_CASE("contraction multiplicities of the named graphs") {
  const auto prism_mg = zf::contraction_multigraph(
      zf::triangle_diamond_partition(zf::prism()), zf::prism());
  CHECK(prism_mg.k == 2);
  CHECK(prism_mg.multiplicity[0][1] == 3);

  const auto n2 = zf::necklace(2);
  const auto n2_mg =
      zf::contraction_multigraph(zf::triangle_diamond_partition(n2), n2);
  CHECK(n2_mg.multiplicity[0][1] == 2);
}

TEST_CASE("partition commutes with relabeling") {
  std::mt19937_64 rng(67);
  for (const Graph& g :
       {zf::prism(), zf::necklace(2), zf::necklace(3), ten_vertex_graph()}) {
    const auto base = zf::triangle_diamond_partition(g);
    for (int trial = 0; trial < 20; ++trial) {
      const auto perm = oracle::random_permutation(g.n(), rng);
      const auto relabeled = zf::triangle_diamond_partition(g.relabeled(perm));
      // Map the base partition through perm and compare as canonical sets.
      std::set<std::vector<int>> expected, actual;
      for (const auto& unit : base.units) {
        std::vector<int> members;
        for (int v : unit.members) members.push_back(perm[v]);
        std::sort(members.begin(), members.end());
        expected.insert(members);
      }
      for (const auto& unit : relabeled.units) actual.insert(unit.members);
      CHECK(expected == actual);
    }
  }
}

TEST_CASE("shortest cycle in a K4-shaped unit graph") {
  const auto cycle = zf::shortest_cycle(complete_unit_graph(4));
  CHECK(cycle == std::vector<int>{0, 1, 2});
}

TEST_CASE("shortest cycle in a K33-shaped unit graph") {
  // Units 0,1,2 vs 3,4,5, all cross pairs joined once.
  UnitMultigraph m;
  m.k = 6;
  m.multiplicity.assign(6, std::vector<int>(6, 0));
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) m.multiplicity[a][b] = m.multiplicity[b][a] = 1;
  const auto cycle = zf::shortest_cycle(m);
  CHECK(cycle.size() == 4);
  CHECK(oracle::girth(oracle::multigraph_as_graph(m)) == 4);
  CHECK(cycle == std::vector<int>{0, 3, 1, 4});
}

TEST_CASE("shortest cycle precondition errors") {
  UnitMultigraph doubled;
  doubled.k = 3;
  doubled.multiplicity = {{0, 2, 1}, {2, 0, 1}, {1, 1, 0}};
  CHECK(fixtures::thrown_code([&] { zf::shortest_cycle(doubled); }) ==
        zf::Errc::NotSimpleCubic);

  UnitMultigraph square;  // simple but 2-regular
  square.k = 4;
  square.multiplicity = {{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}};
  CHECK(fixtures::thrown_code([&] { zf::shortest_cycle(square); }) ==
        zf::Errc::NotSimpleCubic);
}
