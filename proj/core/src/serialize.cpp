#include "zf/serialize.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"
#include "zf/errors.hpp"

namespace zf {

namespace {

using nlohmann::json;

json edges_to_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

json plays_to_json(const std::vector<Play>& plays) {
  json out = json::array();
  for (const auto& play : plays) out.push_back({play.forcer, play.forced});
  return out;
}

json chronicle_json(const Chronicle& c) {
  return json{{"initial", c.initial}, {"plays", plays_to_json(c.plays)}};
}

}  // namespace

std::string graph_to_json(const Graph& g) {
  json out{{"n", g.n()}, {"edges", edges_to_json(g.edges())}};
  return out.dump();
}

Graph graph_from_json(const std::string& text) {
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::BadParameter, std::string("invalid JSON: ") + e.what());
  }
  if (!parsed.is_object() || !parsed.contains("n") || !parsed.contains("edges"))
    throw Error(Errc::BadParameter, "graph JSON needs \"n\" and \"edges\"");
  const int n = parsed["n"].get<int>();
  std::vector<Edge> edges;
  for (const auto& entry : parsed["edges"]) {
    if (!entry.is_array() || entry.size() != 2)
      throw Error(Errc::BadParameter, "edge entries must be [u,v] pairs");
    edges.emplace_back(entry[0].get<int>(), entry[1].get<int>());
  }
  return Graph::from_edge_list(n, edges);
}

std::string chronicle_to_json(const Chronicle& c) {
  return chronicle_json(c).dump();
}

std::string partition_to_json(const UnitPartition& p) {
  json units = json::array();
  for (const auto& unit : p.units) {
    json entry{{"kind", unit.kind == UnitKind::Triangle ? "triangle"
                                                        : "diamond"},
               {"members", unit.members}};
    if (unit.ends) entry["ends"] = {unit.ends->first, unit.ends->second};
    units.push_back(std::move(entry));
  }
  return json{{"units", units}}.dump();
}

std::string certificate_to_json(const Certificate& c) {
  json out{{"mode", cert_mode_name(c.mode)},
           {"S", c.s},
           {"I", c.i},
           {"M", plays_to_json(c.m)},
           {"chronicle", chronicle_json(c.chronicle)},
           {"initial_unit", c.initial_unit}};
  return out.dump();
}

std::string bounds_report_to_json(const BoundsReport& r) {
  json rows = json::array();
  for (const auto& row : r.inequalities)
    rows.push_back({{"name", row.name},
                    {"lhs", row.lhs},
                    {"rhs", row.rhs},
                    {"holds", row.holds},
                    {"equality", row.equality}});
  json out{
      {"n", r.n},
      {"n3", r.n3},
      {"n4", r.n4},
      {"z", r.z},
      {"ft", r.ft},
      {"alpha", r.alpha},
      {"alpha_prime", r.alpha_prime},
      {"cert_size", r.cert_size},
      {"inequalities", rows},
      {"flags",
       {{"is_prism", r.flags.is_prism},
        {"is_n2", r.flags.is_n2},
        {"is_n3", r.flags.is_n3},
        {"z_equals_alpha_plus_one", r.flags.z_equals_alpha_plus_one}}},
      {"witnesses",
       {{"z", r.z_witness},
        {"ft", r.ft_witness},
        {"alpha", r.alpha_witness},
        {"matching", edges_to_json(r.matching_witness)}}},
      {"certificate", json::parse(certificate_to_json(r.certificate))}};
  return out.dump();
}

std::string certificate_to_dot(const Graph& g, const Certificate& c) {
  std::set<int> in_s(c.s.begin(), c.s.end());
  std::set<int> in_i(c.i.begin(), c.i.end());
  std::set<std::pair<int, int>> bold;
  for (const auto& [forcer, target] : c.m)
    bold.insert({std::min(forcer, target), std::max(forcer, target)});

  std::ostringstream out;
  out << "graph certificate {\n";
  out << "  node [shape=circle fontsize=11];\n";
  for (int v = 0; v < g.n(); ++v) {
    out << "  " << v << " [";
    if (in_s.count(v)) out << "style=filled fillcolor=gray80 ";
    if (in_i.count(v))
      out << "penwidth=2.5 color=red";
    else
      out << "color=black";
    out << "];\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out << "  " << u << " -- " << v;
    if (bold.count({u, v})) out << " [style=bold penwidth=2.5]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace zf
