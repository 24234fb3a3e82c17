#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <random>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "p3c/exact.hpp"
#include "p3c/extremal.hpp"
#include "p3c/graph.hpp"
#include "p3c/json_io.hpp"
#include "p3c/oracle.hpp"
#include "p3c/reduction.hpp"
#include "p3c/threshold.hpp"
#include "p3c/tree.hpp"

using namespace p3c;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error("expected an integer for " + what + ", got \"" + s + "\"");
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error("expected a number for " + what + ", got \"" + s + "\"");
}

// family:params specs: path:N, cycle:N, star:N, complete:N, edgeless:N,
// complete_bipartite:A:B, gnp:N:P (seeded), threshold:SEQ with SEQ over {I,U}
Graph graph_from_family_spec(const std::string& spec, uint64_t seed) {
  auto parts = split(spec, ':');
  if (parts.empty()) throw Error("empty generator spec");
  const std::string& fam = parts[0];
  auto want = [&](size_t k) {
    if (parts.size() != k + 1)
      throw Error("generator \"" + fam + "\" takes " + std::to_string(k) +
                  " parameter(s)");
  };
  if (fam == "path") {
    want(1);
    return path(parse_int(parts[1], fam));
  }
  if (fam == "cycle") {
    want(1);
    return cycle(parse_int(parts[1], fam));
  }
  if (fam == "star") {
    want(1);
    return star(parse_int(parts[1], fam));
  }
  if (fam == "complete") {
    want(1);
    return complete(parse_int(parts[1], fam));
  }
  if (fam == "edgeless") {
    want(1);
    return edgeless(parse_int(parts[1], fam));
  }
  if (fam == "complete_bipartite") {
    want(2);
    return complete_bipartite(parse_int(parts[1], fam),
                              parse_int(parts[2], fam));
  }
  if (fam == "gnp") {
    want(2);
    return random_gnp(parse_int(parts[1], fam), parse_double(parts[2], fam),
                      seed);
  }
  if (fam == "threshold") {
    want(1);
    std::vector<ThresholdTag> tags;
    for (char c : parts[1]) {
      if (c == 'I' || c == 'i')
        tags.push_back(ThresholdTag::Isolated);
      else if (c == 'U' || c == 'u')
        tags.push_back(ThresholdTag::Universal);
      else
        throw Error("threshold sequence must use only I and U, got '" +
                    std::string(1, c) + "'");
    }
    return threshold_from_sequence(tags);
  }
  throw Error("unknown graph family \"" + fam + "\"");
}

// count accepts either a file (edge list, or a json object) or gen:family:...
Graph load_graph(const std::string& input, uint64_t seed) {
  if (input.rfind("gen:", 0) == 0)
    return graph_from_family_spec(input.substr(4), seed);
  std::ifstream in(input);
  if (!in) throw Error("cannot open input file \"" + input + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return graph_from_json(Json::parse(text));
  return parse_edge_list(text);
}

std::string dec(const Count& c) { return to_decimal(c); }

// ---------------------------------------------------------------------------

struct CountOptions {
  std::string input;
  std::string algo = "auto";
  std::string partition_file;
  int cap = kEnumerationCap;
  uint64_t seed = 0;
  bool json = false;
};

int run_count(const CountOptions& opt) {
  Graph g = load_graph(opt.input, opt.seed);
  Count result;
  Json instrumentation = Json::object();
  if (opt.algo == "auto") {
    result = noc_auto(g, opt.cap);
  } else if (opt.algo == "oracle") {
    result = noc_bruteforce(g);
  } else if (opt.algo == "tree") {
    result = noc_tree(g);
  } else if (opt.algo == "threshold") {
    result = noc_threshold(g);
  } else if (opt.algo == "generic") {
    Bitset is = find_independent_set(g, ISStrategy::Greedy);
    result = noc_generic(g, is, opt.cap);
    instrumentation["independent_set_size"] = int(is.count());
    instrumentation["colorings_enumerated"] =
        dec(pow2(unsigned(g.vertex_count() - int(is.count()))));
  } else if (opt.algo.rfind("structured-", 0) == 0 && opt.algo.size() == 12) {
    char v = opt.algo[11];
    Variant variant = v == 'A'   ? Variant::A
                      : v == 'B' ? Variant::B
                      : v == 'C' ? Variant::C
                                 : throw Error("unknown variant in --algo \"" +
                                               opt.algo + "\"");
    StructuredResult r = noc_structured(g, variant, opt.cap);
    result = r.noc;
    instrumentation["colorings_enumerated"] = dec(r.colorings_enumerated);
    instrumentation["blocks"] = int(r.trace.blocks.size());
    instrumentation["stars"] = int(r.trace.stars.size());
    instrumentation["p"] = r.trace.p;
    instrumentation["q"] = r.trace.q;
    instrumentation["r"] = r.trace.r;
    instrumentation["t"] = r.trace.t;
  } else if (opt.algo == "kl") {
    if (opt.partition_file.empty())
      throw Error("--algo kl needs --partition <file>");
    std::ifstream in(opt.partition_file);
    if (!in)
      throw Error("cannot open partition file \"" + opt.partition_file + "\"");
    std::stringstream buf;
    buf << in.rdbuf();
    KLPartition part =
        kl_partition_from_json(Json::parse(buf.str()), g.vertex_count());
    result = noc_kl(g, part, opt.cap);
    int island = 0;
    for (const Bitset& p : part.independent_parts)
      island = std::max(island, int(p.count()));
    Count enumerated = 1;
    int clique_total = 0;
    for (const Bitset& p : part.clique_parts) {
      enumerated *= Count(p.count() + 2);
      clique_total += int(p.count());
    }
    enumerated *= pow2(unsigned(g.vertex_count() - island - clique_total));
    instrumentation["colorings_enumerated"] = dec(enumerated);
    instrumentation["clique_parts"] = int(part.clique_parts.size());
    instrumentation["independent_parts"] = int(part.independent_parts.size());
  } else {
    throw Error("unknown --algo \"" + opt.algo + "\"");
  }
  if (opt.json) {
    Json out{{"n", g.vertex_count()},
             {"m", g.edge_count()},
             {"algo", opt.algo},
             {"noc", dec(result)},
             {"instrumentation", instrumentation}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << dec(result) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::string suite;
  int n = -1;
  int samples = 100;
  int exhaustive_n = 5;
  uint64_t seed = 0;
  bool trees = false;
};

int finish_report(Json report, bool pass) {
  report["pass"] = pass;
  std::cout << report.dump() << "\n";
  return pass ? 0 : 1;
}

int verify_table1_cmd(int n_max) {
  Json rows = Json::array();
  bool pass = true;
  for (const TableRow& row : table1(n_max)) {
    Count path_dp = noc_tree(path(row.n));
    Count star_dp = noc_tree(star(row.n));
    bool ok = path_dp == row.path_noc && star_dp == row.star_noc;
    pass = pass && ok;
    rows.push_back({{"n", row.n},
                    {"path", dec(row.path_noc)},
                    {"star", dec(row.star_noc)},
                    {"ok", ok}});
  }
  return finish_report({{"suite", "table1"}, {"rows", rows}}, pass);
}

int verify_wg_gap_cmd(int n_max) {
  Json rows = Json::array();
  bool pass = true;
  for (int n = 2; n <= n_max; ++n) {
    WgGapReport rep = verify_wg_gap(n);
    Json row{{"n", n},
             {"trees_scanned", rep.trees_scanned},
             {"pairs_checked", rep.pairs_checked},
             {"ok", rep.holds()}};
    if (!rep.holds()) {
      pass = false;
      const auto& v = rep.violations.front();
      Json edges = Json::array();
      for (auto [a, b] : v.tree_edges) edges.push_back({a, b});
      row["witness"] = {{"tree_edges", edges},
                       {"leaf", v.leaf},
                       {"white_free", dec(v.white_free)},
                       {"white_black_parent", dec(v.white_black_parent)}};
    }
    rows.push_back(row);
  }
  return finish_report({{"suite", "wg-gap"}, {"rows", rows}}, pass);
}

int verify_monotonicity_cmd(int n_max, int samples, uint64_t seed) {
  std::mt19937_64 gen(seed);
  long long edges_checked = 0;
  Json witness;
  bool pass = true;
  for (int trial = 0; trial < samples && pass; ++trial) {
    int n = 2 + int(gen() % uint64_t(std::max(1, n_max - 1)));
    Graph g = random_gnp(n, 0.1 * double(1 + gen() % 8), gen());
    EdgeMonotonicityReport rep = verify_edge_monotonicity(g);
    edges_checked += rep.edges_checked;
    if (!rep.holds()) {
      pass = false;
      const auto& v = rep.violations.front();
      Json edges = Json::array();
      for (auto [a, b] : g.edges()) edges.push_back({a, b});
      witness = {{"graph_edges", edges},
                 {"n", n},
                 {"edge", {v.u, v.v}},
                 {"with_edge", dec(v.with_edge)},
                 {"without_edge", dec(v.without_edge)}};
    }
  }
  Json report{{"suite", "monotonicity"},
              {"samples", samples},
              {"max_n", n_max},
              {"edges_checked", edges_checked}};
  if (!pass) report["witness"] = witness;
  return finish_report(std::move(report), pass);
}

int verify_spanning_tree_cmd(int n_max) {
  long long graphs_checked = 0, trees_checked = 0;
  Json witness;
  bool pass = true;
  for (int n = 3; n <= n_max && pass; ++n) {
    all_labeled_graphs(n, [&](const Graph& g) {
      if (!pass || g.edge_count() < n || !is_connected(g)) return;
      SpanningTreeReport rep = verify_spanning_tree_strict(g);
      ++graphs_checked;
      trees_checked += rep.trees_checked;
      if (!rep.holds()) {
        pass = false;
        const auto& v = rep.violations.front();
        Json gedges = Json::array();
        for (auto [a, b] : g.edges()) gedges.push_back({a, b});
        Json tedges = Json::array();
        for (auto [a, b] : v.tree_edges) tedges.push_back({a, b});
        witness = {{"graph_edges", gedges},
                   {"tree_edges", tedges},
                   {"graph_noc", dec(rep.graph_noc)},
                   {"tree_noc", dec(v.tree_noc)}};
      }
    });
  }
  Json report{{"suite", "spanning-tree"},
              {"max_n", n_max},
              {"graphs_checked", graphs_checked},
              {"trees_checked", trees_checked}};
  if (!pass) report["witness"] = witness;
  return finish_report(std::move(report), pass);
}

int verify_extremal_cmd(int n, bool trees) {
  StarMaximalityReport rep = verify_star_maximality(
      n, trees ? StarScan::Trees : StarScan::ConnectedGraphs);
  Json fps = Json::array();
  for (const auto& fp : rep.achiever_degree_sequences) fps.push_back(fp);
  Json report{{"suite", "extremal"},
              {"n", n},
              {"scan", trees ? "trees" : "connected"},
              {"instances_scanned", rep.instances_scanned},
              {"max_noc", dec(rep.max_noc)},
              {"expected_noc", dec(rep.expected_noc)},
              {"achiever_count", rep.achiever_count},
              {"achiever_degree_sequences", fps}};
  return finish_report(std::move(report), rep.holds());
}

int verify_reduction_cmd(int exhaustive_n, int samples, uint64_t seed) {
  long long instances = 0, split_ok = 0, k14_ok = 0, identity_ok = 0;
  Json witness;
  auto check = [&](const Graph& g) {
    ReductionOutput red = build_split_reduction(g);
    ++instances;
    if (is_split(red.h)) ++split_ok;
    if (!has_two_disjoint_induced_k14(red.h)) ++k14_ok;
    ReductionIdentityReport rep = verify_reduction_identity(g);
    if (rep.identity_holds) {
      ++identity_ok;
    } else if (witness.is_null()) {
      Json edges = Json::array();
      for (auto [a, b] : g.edges()) edges.push_back({a, b});
      witness = {{"graph_edges", edges},
                 {"n", g.vertex_count()},
                 {"noc_h", dec(rep.noc_h)},
                 {"noi_g", dec(rep.noi_g)},
                 {"predicted_noc_h", dec(rep.predicted_noc_h)}};
    }
  };
  for (int n = 1; n <= exhaustive_n; ++n)
    all_labeled_graphs(n, [&](const Graph& g) {
      if (g.vertex_count() + g.edge_count() + 1 <= 20) check(g);
    });
  std::mt19937_64 gen(seed);
  for (int trial = 0; trial < samples; ++trial) {
    int n = 2 + int(gen() % 7);
    Graph g = random_gnp(n, 0.1 * double(1 + gen() % 5), gen());
    if (g.vertex_count() + g.edge_count() + 1 <= 20) check(g);
  }
  bool pass = split_ok == instances && k14_ok == instances &&
              identity_ok == instances;
  Json report{{"suite", "reduction"},
              {"instances", instances},
              {"split_ok", split_ok},
              {"no_double_k14_ok", k14_ok},
              {"identity_ok", identity_ok}};
  if (!witness.is_null()) report["witness"] = witness;
  return finish_report(std::move(report), pass);
}

int run_verify(const VerifyOptions& opt) {
  auto n_or = [&](int dflt) { return opt.n < 0 ? dflt : opt.n; };
  if (opt.suite == "table1") return verify_table1_cmd(n_or(10));
  if (opt.suite == "wg-gap") return verify_wg_gap_cmd(n_or(8));
  if (opt.suite == "monotonicity")
    return verify_monotonicity_cmd(n_or(8), opt.samples, opt.seed);
  if (opt.suite == "spanning-tree") return verify_spanning_tree_cmd(n_or(6));
  if (opt.suite == "extremal") return verify_extremal_cmd(n_or(6), opt.trees);
  if (opt.suite == "reduction")
    return verify_reduction_cmd(opt.exhaustive_n, opt.samples, opt.seed);
  throw Error("unknown verify suite \"" + opt.suite + "\"");
}

// ---------------------------------------------------------------------------

struct BenchOptions {
  std::string families = "path,cycle,star";
  std::string n_range = "5..10";
  std::string variants = "A,B,C";
  uint64_t seed = 0;
  bool csv = false;
};

int run_bench(const BenchOptions& opt) {
  size_t dots = opt.n_range.find("..");
  if (dots == std::string::npos)
    throw Error("--n-range expects a..b, got \"" + opt.n_range + "\"");
  int lo = parse_int(opt.n_range.substr(0, dots), "--n-range");
  int hi = parse_int(opt.n_range.substr(dots + 2), "--n-range");
  if (lo > hi) throw Error("--n-range expects a <= b");

  std::vector<Variant> variants;
  for (const std::string& v : split(opt.variants, ',')) {
    if (v == "A")
      variants.push_back(Variant::A);
    else if (v == "B")
      variants.push_back(Variant::B);
    else if (v == "C")
      variants.push_back(Variant::C);
    else
      throw Error("unknown variant \"" + v + "\" in --variants");
  }

  std::cout << "family,n,variant,colorings_enumerated,wall_time_ms,noc\n";
  for (const std::string& fam : split(opt.families, ',')) {
    for (int n = lo; n <= hi; ++n) {
      if (fam == "cycle" && n < 3) continue;
      Graph g = graph_from_family_spec(
          fam == "complete_bipartite"
              ? fam + ":" + std::to_string(n / 2) + ":" +
                    std::to_string(n - n / 2)
              : fam + ":" + std::to_string(n),
          opt.seed);
      for (Variant variant : variants) {
        auto t0 = std::chrono::steady_clock::now();
        StructuredResult r = noc_structured(g, variant);
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        std::cout << fam << ',' << n << ',' << variant_name(variant) << ','
                  << dec(r.colorings_enumerated) << ',' << ms << ','
                  << dec(r.noc) << "\n";
      }
    }
  }
  (void)opt.csv;  // the text format is already csv
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counting of P3-convex vertex sets"};
  app.require_subcommand(1);

  CountOptions count_opt;
  CLI::App* count_cmd =
      app.add_subcommand("count", "count the P3-convex sets of one graph");
  count_cmd->add_option("input", count_opt.input,
                        "edge-list or json file, or gen:family:params")
      ->required();
  count_cmd->add_option("--algo", count_opt.algo,
                        "auto|oracle|tree|threshold|generic|structured-A|"
                        "structured-B|structured-C|kl");
  count_cmd->add_option("--partition", count_opt.partition_file,
                        "json partition file for --algo kl");
  count_cmd->add_option("--cap", count_opt.cap,
                        "enumeration budget, in vertices");
  count_cmd->add_option("--seed", count_opt.seed, "seed for gen:gnp inputs");
  count_cmd->add_flag("--json", count_opt.json, "machine-readable output");

  VerifyOptions verify_opt;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", verify_opt.suite,
                         "reduction|monotonicity|spanning-tree|extremal|"
                         "table1|wg-gap")
      ->required();
  verify_cmd->add_option("--n", verify_opt.n, "size limit for the suite");
  verify_cmd->add_option("--samples", verify_opt.samples,
                         "random instances for sampled suites");
  verify_cmd->add_option("--exhaustive-n", verify_opt.exhaustive_n,
                         "exhaust all graphs up to this order (reduction)");
  verify_cmd->add_option("--seed", verify_opt.seed, "seed for sampled suites");
  verify_cmd->add_flag("--trees", verify_opt.trees,
                       "scan trees instead of connected graphs (extremal)");

  std::string generate_spec;
  uint64_t generate_seed = 0;
  CLI::App* generate_cmd =
      app.add_subcommand("generate", "print a family member as an edge list");
  generate_cmd->add_option("spec", generate_spec, "family:params")->required();
  generate_cmd->add_option("--seed", generate_seed, "seed for gnp");

  BenchOptions bench_opt;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "time the structured scheme over families");
  bench_cmd->add_option("--families", bench_opt.families,
                        "comma-separated family names");
  bench_cmd->add_option("--n-range", bench_opt.n_range, "a..b inclusive");
  bench_cmd->add_option("--variants", bench_opt.variants,
                        "comma-separated subset of A,B,C");
  bench_cmd->add_option("--seed", bench_opt.seed, "seed for gnp");
  bench_cmd->add_flag("--csv", bench_opt.csv, "csv output (the default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (count_cmd->parsed()) return run_count(count_opt);
    if (verify_cmd->parsed()) return run_verify(verify_opt);
    if (generate_cmd->parsed()) {
      std::cout << to_edge_list(graph_from_family_spec(generate_spec,
                                                       generate_seed));
      return 0;
    }
    if (bench_cmd->parsed()) return run_bench(bench_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
