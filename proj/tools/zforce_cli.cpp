// Command-line surface for the zero forcing toolkit: generate graphs,
// evaluate the bound reports, emit constructive certificates, and hunt for
// graphs where the forcing number meets the independence number plus one.
//
// Exit codes: 0 success, 2 usage or parse error, 3 an inequality row failed,
// 4 a certificate failed verification.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "zf/bounds.hpp"
#include "zf/certify.hpp"
#include "zf/errors.hpp"
#include "zf/forcing.hpp"
#include "zf/generators.hpp"
#include "zf/graph6.hpp"
#include "zf/serialize.hpp"
#include "zf/solvers.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInequality = 3;
constexpr int kExitVerification = 4;

std::string trim(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = line.find_last_not_of(" \t\r\n");
  return line.substr(first, last - first + 1);
}

// One graph per line: graph6 by default, JSON when the line starts with '{'.
// The optional ">>graph6<<" file header is skipped.
std::vector<zf::Graph> read_graphs(const std::string& path) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw zf::Error(zf::Errc::BadParameter, "cannot open " + path);
    in = &file;
  }
  std::vector<zf::Graph> graphs;
  std::string line;
  while (std::getline(*in, line)) {
    std::string body = trim(line);
    if (body.rfind(">>graph6<<", 0) == 0) body = trim(body.substr(10));
    if (body.empty()) continue;
    if (body.front() == '{')
      graphs.push_back(zf::graph_from_json(body));
    else
      graphs.push_back(zf::decode_graph6(body));
  }
  return graphs;
}

struct ItemResult {
  std::string text;
  int status = kExitOk;
};

// Applies fn to every graph with a small worker pool; output order always
// equals input order.
template <typename Fn>
std::vector<ItemResult> ordered_map(const std::vector<zf::Graph>& graphs,
                                    int jobs, Fn fn) {
  std::vector<ItemResult> results(graphs.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) results[i] = fn(graphs[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= graphs.size()) return;
      results[i] = fn(graphs[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& thread : pool) thread.join();
  return results;
}

std::string skip_line(const zf::Graph& g, const zf::Error& e) {
  std::ostringstream out;
  out << "{\"skipped\":true,\"reason\":\"" << zf::errc_name(e.code())
      << "\",\"n\":" << g.n() << ",\"graph6\":\"" << zf::encode_graph6(g)
      << "\"}";
  return out.str();
}

std::string table_row(const zf::BoundsReport& r) {
  std::ostringstream out;
  out << r.n << '\t' << r.n3 << '\t' << r.n4 << '\t' << r.z << '\t' << r.ft
      << '\t' << r.alpha << '\t' << r.alpha_prime << '\t' << r.cert_size
      << '\t' << (r.all_hold() ? "ok" : "VIOLATION");
  if (r.flags.is_prism) out << "\tprism";
  if (r.flags.is_n2) out << "\tN2";
  if (r.flags.is_n3) out << "\tN3";
  if (r.flags.z_equals_alpha_plus_one) out << "\tZ=alpha+1";
  return out.str();
}

int forcing_cap_from_env(int fallback) {
  if (const char* env = std::getenv("ZFORCE_CAP")) {
    try {
      return std::stoi(env);
    } catch (...) {
      // ignore malformed values, keep the default
    }
  }
  return fallback;
}

int run_gen(const std::string& kind, int k, int max_n, int units,
            double diamond_fraction, std::uint64_t seed,
            const std::string& format) {
  std::vector<zf::Graph> graphs;
  if (kind == "prism") {
    graphs.push_back(zf::prism());
  } else if (kind == "k4") {
    graphs.push_back(zf::k4());
  } else if (kind == "necklace") {
    graphs.push_back(zf::necklace(k));
  } else if (kind == "random") {
    graphs.push_back(zf::random_claw_free_cubic(units, diamond_fraction, seed));
  } else if (kind == "enumerate") {
    graphs = zf::enumerate_connected_claw_free_cubic(max_n);
  } else {
    std::cerr << "unknown generator '" << kind
              << "' (try prism|k4|necklace|random|enumerate)\n";
    return kExitUsage;
  }
  for (const auto& g : graphs) {
    if (format == "json")
      std::cout << zf::graph_to_json(g) << '\n';
    else
      std::cout << zf::encode_graph6(g) << '\n';
  }
  return kExitOk;
}

int run_analyze(const std::vector<zf::Graph>& graphs, int cap, int jobs,
                const std::string& format) {
  zf::SolverCaps caps;
  caps.forcing_cap = cap;
  auto results = ordered_map(graphs, jobs, [&](const zf::Graph& g) {
    ItemResult item;
    try {
      const zf::BoundsReport report = zf::bounds_report(g, caps);
      item.text = format == "table" ? table_row(report)
                                    : zf::bounds_report_to_json(report);
      if (!report.all_hold()) item.status = kExitInequality;
    } catch (const zf::Error& e) {
      item.text = skip_line(g, e);
    }
    return item;
  });
  if (format == "table")
    std::cout << "n\tn3\tn4\tZ\tFt\talpha\talpha'\tcert\tstatus\n";
  int status = kExitOk;
  for (const auto& item : results) {
    std::cout << item.text << '\n';
    status = std::max(status, item.status);
  }
  return status;
}

int run_certify(const std::vector<zf::Graph>& graphs, bool emit_dot,
                int jobs) {
  auto results = ordered_map(graphs, jobs, [&](const zf::Graph& g) {
    ItemResult item;
    try {
      const zf::Certificate cert = zf::build_certificate(g);
      const zf::VerifyReport verdict = zf::verify_certificate(g, cert);
      item.text =
          emit_dot ? zf::certificate_to_dot(g, cert) : zf::certificate_to_json(cert);
      if (!verdict.all_pass()) item.status = kExitVerification;
    } catch (const zf::Error& e) {
      item.text = skip_line(g, e);
    }
    return item;
  });
  int status = kExitOk;
  for (const auto& item : results) {
    std::cout << item.text << '\n';
    status = std::max(status, item.status);
  }
  return status;
}

int run_hunt(int max_n, int cap, int jobs) {
  const std::vector<zf::Graph> corpus =
      zf::enumerate_connected_claw_free_cubic(max_n);
  zf::SolverCaps caps;
  caps.forcing_cap = cap;
  auto results = ordered_map(corpus, jobs, [&](const zf::Graph& g) {
    ItemResult item;
    try {
      const auto z = zf::zero_forcing_number(g, caps.forcing_cap);
      const auto alpha = zf::independence_number(g, caps.independence_cap);
      if (z.size != alpha.alpha + 1) return item;
      const zf::BoundsReport report = zf::bounds_report(g, caps);
      std::ostringstream out;
      out << "{\"graph6\":\"" << zf::encode_graph6(g) << "\",\"n\":" << g.n()
          << ",\"z\":" << z.size << ",\"alpha\":" << alpha.alpha
          << ",\"report\":" << zf::bounds_report_to_json(report) << "}";
      item.text = out.str();
    } catch (const zf::Error& e) {
      item.text = std::string("hunt: ") + e.what();
      item.status = kExitUsage;
    }
    return item;
  });
  int findings = 0;
  int status = kExitOk;
  for (const auto& item : results) {
    if (item.status != kExitOk) {
      std::cerr << item.text << '\n';
      status = std::max(status, item.status);
    } else if (!item.text.empty()) {
      std::cout << item.text << '\n';
      ++findings;
    }
  }
  std::cerr << "hunt: " << findings << " graph(s) with Z = alpha+1 among "
            << corpus.size() << " corpus graph(s) up to n=" << max_n << '\n';
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero forcing on claw-free cubic graphs"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "json";
  int cap = forcing_cap_from_env(zf::kDefaultForcingCap);
  int jobs = 1;

  auto* gen = app.add_subcommand("gen", "construct or enumerate graphs");
  std::string gen_kind;
  int gen_k = 2;
  int gen_max_n = 12;
  int gen_units = 4;
  double gen_fraction = 0.5;
  std::uint64_t gen_seed = 1;
  std::string gen_format = "graph6";
  gen->add_option("kind", gen_kind, "prism|k4|necklace|random|enumerate")
      ->required();
  gen->add_option("--k", gen_k, "diamond count for necklace");
  gen->add_option("--max-n", gen_max_n, "largest order to enumerate");
  gen->add_option("--units", gen_units, "unit count for random");
  gen->add_option("--diamond-fraction", gen_fraction,
                  "probability that a random unit is a diamond");
  gen->add_option("--seed", gen_seed, "random generator seed");
  gen->add_option("--format", gen_format, "graph6|json");

  auto* analyze = app.add_subcommand(
      "analyze", "evaluate every bound on each input graph");
  analyze->add_option("--input", input, "graph6/JSON lines file, - for stdin");
  analyze->add_option("--format", format, "json|table");
  analyze->add_option("--cap", cap, "forcing solver size cap");
  analyze->add_option("--jobs", jobs, "worker pool width");

  auto* certify = app.add_subcommand(
      "certify", "emit a constructive certificate for each input graph");
  bool emit_dot = false;
  certify->add_option("--input", input, "graph6/JSON lines file, - for stdin");
  certify->add_flag("--emit-dot", emit_dot, "render DOT instead of JSON");
  certify->add_option("--jobs", jobs, "worker pool width");

  auto* hunt = app.add_subcommand(
      "hunt", "list corpus graphs whose forcing number is alpha+1");
  int hunt_max_n = 12;
  hunt->add_option("--max-n", hunt_max_n, "largest order to enumerate");
  hunt->add_option("--cap", cap, "forcing solver size cap");
  hunt->add_option("--jobs", jobs, "worker pool width");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed())
      return run_gen(gen_kind, gen_k, gen_max_n, gen_units, gen_fraction,
                     gen_seed, gen_format);
    if (analyze->parsed())
      return run_analyze(read_graphs(input), cap, jobs, format);
    if (certify->parsed())
      return run_certify(read_graphs(input), emit_dot, jobs);
    if (hunt->parsed()) return run_hunt(hunt_max_n, cap, jobs);
  } catch (const zf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
