#include <random>
#include <set>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "zf/bounds.hpp"
#include "zf/errors.hpp"
#include "zf/generators.hpp"
#include "zf/solvers.hpp"

using zf::Graph;

namespace {

Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::vector<zf::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < density)
        edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

}  // namespace

TEST_CASE("independence numbers of the named graphs") {
  CHECK(zf::independence_number(zf::prism()).alpha == 2);
  CHECK(zf::independence_number(zf::necklace(2)).alpha == 3);
  CHECK(zf::independence_number(zf::necklace(3)).alpha == 4);
  CHECK(zf::independence_number(zf::k4()).alpha == 1);
}

TEST_CASE("independence witnesses are independent and maximum") {
  for (const Graph& g : {zf::prism(), zf::necklace(3), fixtures::petersen()}) {
    const auto result = zf::independence_number(g);
    CHECK(static_cast<int>(result.witness.size()) == result.alpha);
    for (std::size_t a = 0; a < result.witness.size(); ++a)
      for (std::size_t b = a + 1; b < result.witness.size(); ++b)
        CHECK_FALSE(g.has_edge(result.witness[a], result.witness[b]));
    CHECK(result.alpha == oracle::independence_number(g));
  }
}

TEST_CASE("independence respects its cap") {
  CHECK(fixtures::thrown_code([] {
          zf::independence_number(zf::prism(), 4);
        }) == zf::Errc::InstanceTooLarge);
}

TEST_CASE("matching numbers of the named graphs") {
  CHECK(zf::matching_number(zf::prism()).alpha_prime == 3);
  CHECK(zf::matching_number(zf::necklace(2)).alpha_prime == 4);
  CHECK(zf::matching_number(Graph::from_edge_list(2, {{0, 1}})).alpha_prime == 1);
  CHECK(zf::matching_number(fixtures::cycle(5)).alpha_prime == 2);
  CHECK(zf::matching_number(fixtures::cycle(7)).alpha_prime == 3);
  CHECK(zf::matching_number(fixtures::petersen()).alpha_prime == 5);
}

TEST_CASE("matching witnesses are matchings of the reported size") {
  for (const Graph& g : {zf::prism(), zf::necklace(3), fixtures::petersen(),
                         fixtures::cycle(9)}) {
    const auto result = zf::matching_number(g);
    CHECK(static_cast<int>(result.witness.size()) == result.alpha_prime);
    std::set<int> touched;
    for (const auto& [u, v] : result.witness) {
      CHECK(g.has_edge(u, v));
      CHECK(touched.insert(u).second);
      CHECK(touched.insert(v).second);
    }
  }
}

TEST_CASE("blossom matching agrees with brute force on random graphs") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 7);  // 4..10
    const Graph g = random_graph(n, 0.25 + 0.08 * (trial % 7), rng);
    CHECK(zf::matching_number(g).alpha_prime == oracle::matching_number(g));
  }
}

TEST_CASE("solvers agree with brute force across the corpus") {
  for (const auto& g : zf::enumerate_connected_claw_free_cubic(12)) {
    CHECK(zf::independence_number(g).alpha == oracle::independence_number(g));
    CHECK(zf::matching_number(g).alpha_prime == oracle::matching_number(g));
  }
}

TEST_CASE("bounds report on the prism") {
  const auto report = zf::bounds_report(zf::prism());
  CHECK(report.n == 6);
  CHECK(report.n3 == 2);
  CHECK(report.n4 == 0);
  CHECK(report.z == 3);
  CHECK(report.ft == 3);
  CHECK(report.alpha == 2);
  CHECK(report.alpha_prime == 3);
  CHECK(report.cert_size == 3);
  CHECK(report.flags.is_prism);
  CHECK(report.flags.z_equals_alpha_plus_one);
  CHECK(report.all_hold());

  const auto* thm3 = report.find("Thm3");
  REQUIRE(thm3 != nullptr);
  CHECK(thm3->holds);
  CHECK(thm3->equality);  // 2z = n on the prism

  const auto* thm4a = report.find("Thm4a");
  REQUIRE(thm4a != nullptr);
  CHECK(thm4a->lhs == 3);
  CHECK(thm4a->rhs == 3);
}

TEST_CASE("bounds report on N3") {
  const auto report = zf::bounds_report(zf::necklace(3));
  CHECK(report.flags.is_n3);
  CHECK(report.flags.z_equals_alpha_plus_one);
  CHECK_FALSE(report.find("Thm3")->equality);  // 2*5 < 12
  CHECK(report.all_hold());
}

TEST_CASE("bounds report rows come in the documented order") {
  const auto report = zf::bounds_report(zf::necklace(2));
  const std::vector<std::string> names = {"Thm1", "Thm2", "Thm3", "Thm4a",
                                          "Thm4b", "Cor5", "Cor7a", "Cor7b"};
  REQUIRE(report.inequalities.size() == names.size());
  for (std::size_t i = 0; i < names.size(); ++i)
    CHECK(report.inequalities[i].name == names[i]);
  CHECK(report.flags.is_n2);
}

TEST_CASE("bounds report refuses K4") {
  CHECK(fixtures::thrown_code([] { zf::bounds_report(zf::k4()); }) ==
        zf::Errc::IsK4);
}

TEST_CASE("every inequality holds across the corpus") {
  for (const auto& g : zf::enumerate_connected_claw_free_cubic(12)) {
    const auto report = zf::bounds_report(g);
    for (const auto& row : report.inequalities) {
      INFO(row.name, " lhs=", row.lhs, " rhs=", row.rhs);
      CHECK(row.holds);
    }
  }
}
