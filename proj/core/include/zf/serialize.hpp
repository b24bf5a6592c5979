#pragma once

#include <string>

#include "zf/bounds.hpp"
#include "zf/certify.hpp"
#include "zf/forcing.hpp"
#include "zf/graph.hpp"
#include "zf/structure.hpp"

namespace zf {

// JSON forms. Graphs: {"n": int, "edges": [[u,v],...]}. Chronicles:
// {"initial": [...], "plays": [[forcer,forced],...]}. Partitions:
// {"units": [{"kind": "triangle"|"diamond", "members": [...],
// "ends": [u,v]?}, ...]}. Certificates: {"mode": ..., "S": [...],
// "I": [...], "M": [[u,v],...], "chronicle": {...}, "initial_unit": int}.
// Reports carry every count, witness, inequality row and flag.

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);  // throws BadParameter

std::string chronicle_to_json(const Chronicle& c);
std::string partition_to_json(const UnitPartition& p);
std::string certificate_to_json(const Certificate& c);
std::string bounds_report_to_json(const BoundsReport& r);

// DOT rendering of a certificate over its graph: S filled, I with a heavy
// outline, matching edges bold.
std::string certificate_to_dot(const Graph& g, const Certificate& c);

}  // namespace zf
