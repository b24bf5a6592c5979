#include <set>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "zf/errors.hpp"
#include "zf/generators.hpp"
#include "zf/isomorphism.hpp"
#include "zf/structure.hpp"

using zf::Graph;
using zf::UnitKind;
using zf::UnitSpec;

namespace {

bool passes_filters(const Graph& g) {
  return zf::is_connected(g) && zf::is_cubic(g) && zf::is_claw_free(g);
}

// Rebuilds the spec realized by a graph's partition.
UnitSpec spec_of(const Graph& g) {
  const auto partition = zf::triangle_diamond_partition(g);
  const auto mg = zf::contraction_multigraph(partition, g);
  UnitSpec spec;
  for (const auto& unit : partition.units) spec.kinds.push_back(unit.kind);
  spec.multiplicity = mg.multiplicity;
  return spec;
}

}  // namespace

TEST_CASE("named constructions") {
  CHECK(zf::prism().n() == 6);
  CHECK(zf::prism().m() == 9);
  CHECK(passes_filters(zf::prism()));

  CHECK(zf::k4().n() == 4);
  CHECK(zf::k4().m() == 6);

  for (int k = 2; k <= 5; ++k) {
    const Graph g = zf::necklace(k);
    CHECK(g.n() == 4 * k);
    CHECK(passes_filters(g));
    const auto partition = zf::triangle_diamond_partition(g);
    CHECK(partition.units.size() == static_cast<std::size_t>(k));
    for (const auto& unit : partition.units)
      CHECK(unit.kind == UnitKind::Diamond);
  }

  CHECK(fixtures::thrown_code([] { zf::necklace(1); }) ==
        zf::Errc::BadParameter);
}

TEST_CASE("inflating the all-rungs two-triangle spec gives the prism") {
  UnitSpec spec;
  spec.kinds = {UnitKind::Triangle, UnitKind::Triangle};
  spec.multiplicity = {{0, 3}, {3, 0}};
  CHECK(zf::inflate(spec) == zf::prism());
}

TEST_CASE("inflating the double-joined two-diamond spec gives N2") {
  UnitSpec spec;
  spec.kinds = {UnitKind::Diamond, UnitKind::Diamond};
  spec.multiplicity = {{0, 2}, {2, 0}};
  CHECK(zf::are_isomorphic(zf::inflate(spec), zf::necklace(2)));
}

TEST_CASE("inflating a K4-shaped all-triangle spec") {
  UnitSpec spec;
  spec.kinds.assign(4, UnitKind::Triangle);
  spec.multiplicity = {{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}};
  const Graph g = zf::inflate(spec);
  CHECK(g.n() == 12);
  CHECK(passes_filters(g));
  const auto mg =
      zf::contraction_multigraph(zf::triangle_diamond_partition(g), g);
  CHECK(zf::are_isomorphic(oracle::multigraph_as_graph(mg), zf::k4()));
}

TEST_CASE("invalid specs are rejected") {
  SUBCASE("wrong slot degree") {
    UnitSpec spec;
    spec.kinds = {UnitKind::Triangle, UnitKind::Triangle};
    spec.multiplicity = {{0, 2}, {2, 0}};
    CHECK(fixtures::thrown_code([&] { zf::inflate(spec); }) ==
          zf::Errc::InvalidSpec);
  }
  SUBCASE("loop") {
    UnitSpec spec;
    spec.kinds = {UnitKind::Triangle, UnitKind::Triangle};
    spec.multiplicity = {{1, 2}, {2, 1}};
    CHECK(fixtures::thrown_code([&] { zf::inflate(spec); }) ==
          zf::Errc::InvalidSpec);
  }
  SUBCASE("asymmetric matrix") {
    UnitSpec spec;
    spec.kinds = {UnitKind::Triangle, UnitKind::Triangle};
    spec.multiplicity = {{0, 3}, {2, 0}};
    CHECK(fixtures::thrown_code([&] { zf::inflate(spec); }) ==
          zf::Errc::InvalidSpec);
  }
  SUBCASE("disconnected") {
    UnitSpec spec;
    spec.kinds = {UnitKind::Diamond, UnitKind::Diamond, UnitKind::Diamond,
                  UnitKind::Diamond};
    spec.multiplicity = {
        {0, 2, 0, 0}, {2, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 2, 0}};
    CHECK(fixtures::thrown_code([&] { zf::inflate(spec); }) ==
          zf::Errc::InvalidSpec);
  }
  SUBCASE("single slot") {
    UnitSpec spec;
    spec.kinds = {UnitKind::Triangle};
    spec.multiplicity = {{0}};
    CHECK(fixtures::thrown_code([&] { zf::inflate(spec); }) ==
          zf::Errc::InvalidSpec);
  }
}

TEST_CASE("random generator hits the forced cases") {
  for (std::uint64_t seed : {1ULL, 7ULL, 42ULL, 1234567ULL}) {
    CHECK(zf::are_isomorphic(zf::random_claw_free_cubic(2, 1.0, seed),
                             zf::necklace(2)));
    CHECK(zf::random_claw_free_cubic(2, 0.0, seed) == zf::prism());
  }
}

TEST_CASE("random generator is deterministic per seed") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Graph a = zf::random_claw_free_cubic(5, 0.4, seed);
    const Graph b = zf::random_claw_free_cubic(5, 0.4, seed);
    CHECK(a == b);
  }
}

TEST_CASE("random outputs satisfy the contract and recover their spec") {
  const std::vector<std::pair<int, double>> params = {
      {2, 0.0}, {4, 0.0}, {6, 0.0}, {2, 1.0}, {3, 1.0}, {5, 1.0},
      {3, 0.6}, {4, 0.5}, {5, 0.5}, {4, 0.25}};
  std::uint64_t seed = 0;
  for (const auto& [units, fraction] : params) {
    for (int repeat = 0; repeat < 2; ++repeat, ++seed) {
      const Graph g = zf::random_claw_free_cubic(units, fraction, seed);
      CHECK(passes_filters(g));
      const auto spec = spec_of(g);
      CHECK(spec.slot_count() == units);
      CHECK(zf::are_isomorphic(zf::inflate(spec), g));
    }
  }
}

TEST_CASE("odd triangle counts are unsatisfiable") {
  CHECK(fixtures::thrown_code([] {
          zf::random_claw_free_cubic(3, 0.0, 5);
        }) == zf::Errc::Unsatisfiable);
  CHECK(fixtures::thrown_code([] {
          zf::random_claw_free_cubic(1, 1.0, 5);
        }) == zf::Errc::Unsatisfiable);
}

TEST_CASE("enumeration starts with the prism and N2") {
  const auto six = zf::enumerate_connected_claw_free_cubic(6);
  REQUIRE(six.size() == 1);
  CHECK(zf::are_isomorphic(six[0], zf::prism()));

  const auto eight = zf::enumerate_connected_claw_free_cubic(8);
  REQUIRE(eight.size() == 2);
  CHECK(zf::are_isomorphic(eight[0], zf::prism()));
  CHECK(zf::are_isomorphic(eight[1], zf::necklace(2)));
}

TEST_CASE("enumerated graphs pass every filter and are pairwise distinct") {
  const auto corpus = zf::enumerate_connected_claw_free_cubic(14);
  for (const auto& g : corpus) {
    CHECK(passes_filters(g));
    CHECK(g.n() >= 6);
    CHECK(g.n() <= 14);
  }
  for (std::size_t a = 0; a < corpus.size(); ++a)
    for (std::size_t b = a + 1; b < corpus.size(); ++b)
      CHECK_FALSE(zf::are_isomorphic(corpus[a], corpus[b]));
}

TEST_CASE("inflation round-trips through the partition") {
  for (const auto& g : zf::enumerate_connected_claw_free_cubic(14)) {
    const auto spec = spec_of(g);
    CHECK(zf::are_isomorphic(zf::inflate(spec), g));
    CHECK(spec.inflated_order() == g.n());
  }
}

TEST_CASE("enumeration cap") {
  CHECK(fixtures::thrown_code([] {
          zf::enumerate_connected_claw_free_cubic(22);
        }) == zf::Errc::InstanceTooLarge);
}
