#include "zf/bounds.hpp"

#include <algorithm>

#include "zf/generators.hpp"
#include "zf/isomorphism.hpp"
#include "zf/structure.hpp"

namespace zf {

bool BoundsReport::all_hold() const {
  for (const auto& row : inequalities)
    if (!row.holds) return false;
  return true;
}

const InequalityRow* BoundsReport::find(const std::string& name) const {
  for (const auto& row : inequalities)
    if (row.name == name) return &row;
  return nullptr;
}

BoundsReport bounds_report(const Graph& g, const SolverCaps& caps) {
  BoundsReport report;
  report.n = g.n();

  // build_certificate screens the preconditions (connected, claw-free,
  // cubic, not K4) before anything expensive runs.
  report.certificate = build_certificate(g);
  report.cert_size = static_cast<int>(report.certificate.s.size());

  const UnitPartition partition = triangle_diamond_partition(g);
  for (const auto& unit : partition.units)
    (unit.kind == UnitKind::Triangle ? report.n3 : report.n4) += 1;

  auto zf_result = zero_forcing_number(g, caps.forcing_cap);
  report.z = zf_result.size;
  report.z_witness = std::move(zf_result.witness);

  auto ft_result = total_forcing_number(g, caps.forcing_cap);
  report.ft = ft_result.size;
  report.ft_witness = std::move(ft_result.witness);

  auto alpha_result = independence_number(g, caps.independence_cap);
  report.alpha = alpha_result.alpha;
  report.alpha_witness = std::move(alpha_result.witness);

  auto matching = matching_number(g);
  report.alpha_prime = matching.alpha_prime;
  report.matching_witness = std::move(matching.witness);

  const long long n = report.n;
  const long long z = report.z;
  const long long alpha = report.alpha;
  const long long alpha_prime = report.alpha_prime;
  const long long cert = report.cert_size;
  const long long units = report.n3 + report.n4;

  // Fractional bounds are cleared to integer form so that equality is exact.
  auto add = [&report](const std::string& name, long long lhs, long long rhs) {
    report.inequalities.push_back(
        {name, lhs, rhs, lhs <= rhs, lhs == rhs});
  };
  add("Thm1", 5 * alpha, 2 * n);
  add("Thm2", 2 * z, n + 2);
  add("Thm3", 2 * z, n);
  add("Thm4a", z, alpha + 1);
  add("Thm4b", z, alpha_prime);
  add("Cor5", 5 * z, 2 * n + 5);
  add("Cor7a", cert, units + 2);
  add("Cor7b", 3 * cert, n + 6);

  report.flags.is_prism = are_isomorphic(g, prism());
  report.flags.is_n2 = report.n == 8 && are_isomorphic(g, necklace(2));
  report.flags.is_n3 = report.n == 12 && are_isomorphic(g, necklace(3));
  report.flags.z_equals_alpha_plus_one = report.z == report.alpha + 1;

  return report;
}

}  // namespace zf
