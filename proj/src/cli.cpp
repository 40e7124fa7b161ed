#include "unimod/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "unimod/construct.hpp"
#include "unimod/decompose.hpp"
#include "unimod/io.hpp"
#include "unimod/linalg.hpp"
#include "unimod/soc.hpp"
#include "unimod/toric.hpp"

namespace unimod {

namespace {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

Graph read_input(const std::string& path, std::istream& in) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  try {
    return parse_graph(text);
  } catch (const GraphError& e) {
    throw InputError(e.what());
  }
}

std::string cycle_text(const Graph& g, const CycleWitness& c) {
  std::string s;
  for (VertexId v : c.walk.vertices()) s += (s.empty() ? "" : "-") + g.label(v);
  return s;
}

int verdict_exit(const Certificate& cert) {
  if (cert.unimodular()) return 0;
  return cert.verdict == Verdict::NotUnimodular ? 1 : 2;
}

void print_certificate(const Graph& g, const Certificate& cert, std::ostream& out) {
  out << "verdict: " << verdict_name(cert.verdict) << "\n";
  out << "s=" << cert.s << "\n";
  if (cert.link_vertex) out << "link vertex: " << g.label(*cert.link_vertex) << "\n";
  if (cert.soc_block) out << "soc block: " << *cert.soc_block << "\n";
  if (cert.witness) {
    out << "odd cycle: " << cycle_text(g, cert.witness->first) << "\n";
    out << "odd cycle: " << cycle_text(g, cert.witness->second) << "\n";
  }
  if (cert.witness_binomial) out << "witness binomial: " << to_string(*cert.witness_binomial) << "\n";
  if (cert.indeterminate_reason) out << "reason: " << *cert.indeterminate_reason << "\n";
}

int cmd_decide(const Graph& g, bool as_json, std::size_t cap, std::ostream& out) {
  DecideOptions opts;
  opts.cycle_cap = cap;
  const Certificate cert = decide_unimodular(g, opts);
  if (as_json) {
    out << certificate_to_json(g, cert).dump(2) << "\n";
  } else {
    print_certificate(g, cert, out);
  }
  return verdict_exit(cert);
}

int cmd_bases(const Graph& g, bool graver, std::optional<int> oracle_bound, std::size_t cap,
              std::size_t max_edges, Streams io) {
  BasisSet set;
  if (oracle_bound) {
    try {
      set = kernel_oracle_graver(g, *oracle_bound);
    } catch (const OracleLimitExceeded& e) {
      io.err << e.what() << "\n";
      return 2;
    }
  } else {
    BasisCaps caps;
    caps.max_elements = cap;
    caps.max_subgraph_edges = max_edges;
    set = graver ? enumerate_graver(g, caps) : enumerate_circuits(g, caps);
  }
  for (const auto& b : set.elements) {
    io.out << to_string(b);
    if (!is_square_free(b)) io.out << "  [not square-free]";
    io.out << "\n";
  }
  io.out << (set.complete ? "complete" : "incomplete") << "\n";
  return set.complete ? 0 : 2;
}

std::string value_set(const std::set<BigInt>& values) {
  std::string s = "{";
  for (const auto& v : values) s += (s.size() > 1 ? "," : "") + v.str();
  return s + "}";
}

int cmd_oracle(const Graph& g, std::optional<std::uint64_t> sample, std::uint64_t seed,
               std::optional<std::size_t> tu_order, Streams io) {
  const IncidenceMatrix m(g);
  ScanOptions opts;
  opts.seed = seed;
  if (sample) {
    opts.sample_limit = *sample;
  } else {
    opts.sample_limit = kDefaultExhaustiveLimit;
  }
  const MinorReport report = minor_scan(m, opts);
  int code = 0;
  std::string verdict;
  try {
    verdict = is_unimodular_report(report) ? "yes" : "no";
    code = verdict == "yes" ? 0 : 1;
  } catch (const ExhaustiveRequired& e) {
    verdict = "unknown";
    code = 2;
    io.err << e.what() << "\n";
  }
  io.out << "d=" << report.rank << ", |minors|=" << value_set(report.distinct_abs_values)
         << ", unimodular=" << verdict << "\n";
  io.out << "minors evaluated: " << report.minors_evaluated << " of " << report.minors_total
         << (report.sampled ? " (sampled)" : "") << "\n";
  if (tu_order) {
    try {
      const bool tu = is_totally_unimodular_bruteforce(m, *tu_order);
      io.out << "totally-unimodular=" << (tu ? "yes" : "no") << "\n";
    } catch (const SizeLimitExceeded& e) {
      io.err << e.what() << "\n";
      return 2;
    }
  }
  return code;
}

int cmd_blocks(const Graph& g, std::ostream& out) {
  const BlockDecomposition bd = block_decomposition(g);
  for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
    out << "block " << b << ":";
    for (EdgeId e : bd.blocks[b]) out << " e" << e + 1;
    out << (bd.block_bipartite[b] ? " (bipartite)" : " (non-bipartite)") << "\n";
  }
  out << "cut vertices:";
  for (VertexId v : bd.cut_vertices) out << " " << g.label(v);
  out << "\n";
  out << "s=" << bd.non_bipartite_count() << "\n";
  return 0;
}

void write_json(const std::string& path, const nlohmann::json& doc, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << doc.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << doc.dump(2) << "\n";
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unimodularity of graph incidence matrices"};
  app.require_subcommand(1);

  std::string input;
  bool as_json = false;
  std::size_t cycle_cap = kDefaultCycleCap;
  auto* decide = app.add_subcommand("decide", "classify the graph and print a certificate");
  decide->add_option("input", input, "graph file (edge list or JSON); stdin when omitted");
  decide->add_flag("--json", as_json, "print the full certificate as JSON");
  decide->add_option("--cap", cycle_cap, "odd cycle enumeration cap")->check(CLI::PositiveNumber);

  bool circuits = false;
  bool graver = false;
  std::optional<int> oracle_bound;
  std::size_t element_cap = BasisCaps{}.max_elements;
  std::size_t max_edges = BasisCaps{}.max_subgraph_edges;
  auto* bases = app.add_subcommand("bases", "list circuits or Graver basis elements");
  bases->add_option("input", input, "graph file");
  auto* c_flag = bases->add_flag("--circuits", circuits, "circuits (default)");
  auto* g_flag = bases->add_flag("--graver", graver, "Graver basis from primitive subgraphs");
  auto* o_opt = bases->add_option("--oracle", oracle_bound, "Graver basis by kernel search with this coordinate bound")
                    ->check(CLI::PositiveNumber);
  c_flag->excludes(g_flag)->excludes(o_opt);
  g_flag->excludes(o_opt);
  bases->add_option("--cap", element_cap, "maximum number of elements")->check(CLI::PositiveNumber);
  bases->add_option("--max-edges", max_edges, "maximum subgraph edge count")->check(CLI::PositiveNumber);

  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 0;
  std::optional<std::size_t> tu_order;
  auto* oracle = app.add_subcommand("oracle", "exact maximal-minor scan of the incidence matrix");
  oracle->add_option("input", input, "graph file");
  oracle->add_option("--sample", sample, "sample this many minors when there are more")->check(CLI::PositiveNumber);
  oracle->add_option("--seed", seed, "sampling seed");
  oracle->add_option("--tu", tu_order, "check total unimodularity up to this order");

  GeneratorParams params;
  std::uint64_t gen_seed = 0;
  std::string out_path;
  std::string script_path;
  auto* generate = app.add_subcommand("generate", "random graph with a certified unimodular construction");
  generate->add_option("--seed", gen_seed, "random seed");
  generate->add_option("--petals", params.petals, "number of flower petals")->check(CLI::Range(2, 1000));
  generate->add_option("--ears", params.max_ears, "maximum number of ears");
  generate->add_option("--max-ear-len", params.max_ear_length, "maximum ear length")->check(CLI::PositiveNumber);
  generate->add_option("--max-petal-len", params.max_petal_length, "maximum petal length")->check(CLI::Range(3, 1000));
  generate->add_flag("--bipartite", params.bipartite_mode, "start from an even cycle and keep the graph bipartite");
  generate->add_option("--out", out_path, "graph JSON output (stdout by default)");
  generate->add_option("--script", script_path, "construction script JSON output");

  auto* blocks = app.add_subcommand("blocks", "list blocks, cut vertices and non-bipartite block count");
  blocks->add_option("input", input, "graph file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInputError;
  }

  const Streams io{in, out, err};
  try {
    if (*generate) {
      const GeneratedGraph gen = random_unimodular(gen_seed, params);
      write_json(out_path, graph_to_json(gen.graph), out);
      if (!script_path.empty()) write_json(script_path, script_to_json(gen.script), out);
      return 0;
    }
    const Graph g = read_input(input, in);
    if (*decide) return cmd_decide(g, as_json, cycle_cap, out);
    if (*bases) return cmd_bases(g, graver, oracle_bound, element_cap, max_edges, io);
    if (*oracle) return cmd_oracle(g, sample, seed, tu_order, io);
    if (*blocks) return cmd_blocks(g, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return kExitInputError;
}

}  // namespace unimod
