#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cyclebench/atlas.hpp"
#include "cyclebench/graph6.hpp"
#include "cyclebench/search.hpp"
#include "cyclebench/structure.hpp"

namespace {

constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int run_build(const std::string& name, const std::string& format, bool emit_plan) {
  cyc::NamedGraph named = cyc::build_named(name);
  if (emit_plan) {
    if (!named.plan) {
      std::cerr << name << " is not built by inflation; no plan to emit\n";
      return kExitUsage;
    }
    std::cout << cyc::encode_plan(*named.plan);
    return 0;
  }
  if (format == "g6")
    std::cout << cyc::encode_graph6(named.graph) << '\n';
  else if (format == "edgelist")
    std::cout << cyc::encode_edge_list(named.graph);
  else
    std::cout << cyc::to_dot(named.graph);
  return 0;
}

int run_verify(const std::string& name, const cyc::EngineOptions& opts) {
  cyc::NamedGraph named = cyc::build_named(name);
  int passed = 0;
  for (const cyc::Claim& claim : named.claims) {
    auto start = std::chrono::steady_clock::now();
    cyc::ClaimResult res = claim.run(opts);
    std::ostringstream line;
    line << (res.pass ? "[PASS] " : "[FAIL] ") << name << ": " << claim.name;
    if (!res.detail.empty()) line << " -- " << res.detail;
    line << " (" << std::fixed << std::setprecision(2) << seconds_since(start) << "s)";
    std::cout << line.str() << std::endl;
    if (res.pass) ++passed;
  }
  std::cout << passed << "/" << named.claims.size() << " claims passed" << std::endl;
  return passed == static_cast<int>(named.claims.size()) ? 0 : kExitClaimFailure;
}

std::vector<cyc::Graph> read_graphs(const std::string& input) {
  std::string text;
  if (input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(input);
    if (!file) throw cyc::parse_error("cannot open " + input, 0);
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }

  // a line starting with a digit and holding two tokens is an edge-list
  // header; graph6 bytes never start with a digit
  std::istringstream lines(text);
  std::string first;
  while (std::getline(lines, first) && first.empty()) {
  }
  if (first.empty()) throw cyc::parse_error("empty input", 0);
  if (std::isdigit(static_cast<unsigned char>(first[0]))) {
    return {cyc::parse_edge_list(text)};
  }
  std::vector<cyc::Graph> graphs;
  std::istringstream again(text);
  for (std::string line; std::getline(again, line);) {
    if (line.empty()) continue;
    graphs.push_back(cyc::parse_graph6(line));
  }
  if (graphs.empty()) throw cyc::parse_error("empty input", 0);
  return graphs;
}

int run_spectrum(const std::string& input, int lmax, const std::string& existence_list,
                 const cyc::EngineOptions& opts) {
  std::vector<cyc::Graph> graphs = read_graphs(input);

  std::vector<int> lengths;
  if (!existence_list.empty()) {
    std::istringstream in(existence_list);
    for (std::string item; std::getline(in, item, ',');) {
      int len = 0;
      try {
        len = std::stoi(item);
      } catch (const std::exception&) {
        std::cerr << "bad length '" << item << "'\n";
        return kExitUsage;
      }
      if (len < 4 || len > cyc::kMaxCycleLength || (len & (len - 1)) != 0) {
        std::cerr << "length " << len << " is not a power of two in [4, "
                  << cyc::kMaxCycleLength << "]\n";
        return kExitUsage;
      }
      lengths.push_back(len);
    }
  }

  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const cyc::Graph& g = graphs[i];
    if (graphs.size() > 1) std::cout << "graph " << i + 1 << ":\n";
    std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
    if (!lengths.empty()) {
      for (int len : lengths)
        std::cout << len << ' ' << (cyc::has_cycle_of_length(g, len, opts) ? "yes" : "no")
                  << '\n';
    } else {
      std::cout << cyc::count_cycles_by_length(g, lmax, opts).to_text();
    }
  }
  return 0;
}

int run_search(int exponent, int nmax, const cyc::EngineOptions& opts) {
  std::cout << cyc::find_min_pow2_free(exponent, nmax, opts).to_text();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construction and verification workbench for cubic graphs without "
               "power-of-two cycle lengths"};
  app.require_subcommand(1);
  app.fallthrough();  // accept --threads after the subcommand too
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: all hardware threads)");

  std::string name, format = "g6", input, existence_list;
  bool emit_plan = false;
  int lmax = 10, exponent = 2, nmax = 10;

  CLI::App* build = app.add_subcommand("build", "print a named graph");
  build->add_option("name", name)->required();
  build->add_option("--format", format)->check(CLI::IsMember({"g6", "edgelist", "dot"}));
  build->add_flag("--emit-plan", emit_plan, "print the inflation plan instead of the graph");

  CLI::App* verify = app.add_subcommand("verify", "run a named graph's claim suite");
  verify->add_option("name", name)->required();

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "cycle census of a graph6 or edge-list file ('-' = stdin)");
  spectrum->add_option("input", input)->required();
  spectrum->add_option("--max", lmax, "count cycles of length 3..max");
  spectrum->add_option("--existence-only", existence_list,
                       "comma-separated powers of two; report yes/no per length");

  CLI::App* search = app.add_subcommand("search", "smallest cubic graphs without 2^m-cycles");
  search->add_option("--k", exponent, "exponent bound")->required();
  search->add_option("--nmax", nmax, "largest order to scan")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  cyc::EngineOptions opts;
  opts.threads = threads;
  try {
    if (build->parsed()) return run_build(name, format, emit_plan);
    if (verify->parsed()) return run_verify(name, opts);
    if (spectrum->parsed()) return run_spectrum(input, lmax, existence_list, opts);
    return run_search(exponent, nmax, opts);
  } catch (const std::out_of_range& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const cyc::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const cyc::graph_error& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
}
