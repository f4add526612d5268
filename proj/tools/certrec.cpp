#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "certrec/certrec.hpp"
#include "certrec/oracles.hpp"
#include "certrec/structure.hpp"
#include "certrec/verdict_json.hpp"

using namespace certrec;

namespace {

constexpr int kMember = 0, kNonMember = 1, kUsage = 2, kSelfCheck = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string valid_classes() {
  std::string s;
  for (GraphClass c : kAllClasses) s += (s.empty() ? "" : ", ") + std::string(class_name(c));
  return s;
}

GraphClass parse_class(const std::string& name) {
  auto c = class_by_name(name);
  if (!c) throw UsageError("unknown class '" + name + "'; valid classes: " + valid_classes());
  return *c;
}

Graph load_graph(const std::string& path) {
  try {
    if (path == "-") return read_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return read_graph(in);
  } catch (const ParseError& e) {
    throw UsageError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

std::string join(const auto& items) {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : items) {
    out << (first ? "" : " ") << x;
    first = false;
  }
  return out.str();
}

void print_text(std::ostream& out, const Verdict& v, bool with_certificate, const std::string& indent = "") {
  out << indent << "class: " << class_name(v.graph_class) << '\n';
  out << indent << "member: " << (v.member ? "yes" : "no") << '\n';
  if (!v.component_vertices.empty()) out << indent << "vertices: " << join(v.component_vertices) << '\n';
  if (with_certificate) {
    const Certificate& c = v.certificate;
    out << indent << "certificate: " << kind_name(c.kind) << '\n';
    if (c.kind == CertificateKind::tree) {
      std::vector<std::string> p;
      for (Vertex x : c.parent) p.push_back(x == kNoVertex ? "-" : std::to_string(x));
      out << indent << "  parent: " << join(p) << '\n';
    }
    if (c.order) out << indent << "  order: " << join(*c.order) << '\n';
    if (!c.patterns.empty()) out << indent << "  patterns: " << join(c.patterns) << '\n';
    if (c.partition) {
      auto [first, second] = detail::partition_keys(v.graph_class);
      out << indent << "  " << first << ": " << join(c.partition->first) << '\n';
      out << indent << "  " << second << ": " << join(c.partition->second) << '\n';
    }
    if (!c.positive()) out << indent << "  " << c.obstruction << ": " << join(c.vertices) << '\n';
    if (c.violation)
      out << indent << "  violation: " << c.violation->pattern << " at " << c.violation->a << ' ' << c.violation->b
          << ' ' << c.violation->c << '\n';
  }
  for (std::size_t i = 0; i < v.components.size(); ++i) {
    out << indent << "component " << i << ":\n";
    print_text(out, v.components[i], with_certificate, indent + "  ");
  }
}

int cmd_recognize(const std::string& cls_name, const std::string& input, const std::string& format, bool certificate,
                  bool certify) {
  const GraphClass cls = parse_class(cls_name);
  const Graph g = load_graph(input);
  const Verdict v = recognize(g, cls);
  if (certify) {
    if (auto r = verify_certificate(g, v); !r) {
      std::cerr << "self-check failed: " << r.witness() << '\n';
      return kSelfCheck;
    }
  }
  if (format == "json") {
    std::cout << verdict_to_json(g, v, certificate).dump(2) << '\n';
  } else {
    print_text(std::cout, v, certificate);
  }
  return v.member ? kMember : kNonMember;
}

struct GenerateOptions {
  std::string kind;
  Vertex n = 10;
  std::uint64_t seed = 0;
  double density = 0.3;
  Vertex max_depth = 4;
  double root_chance = 0.02;
  Vertex a = 3, b = 3;
  bool full = false;
  double p = 0.5;
};

int cmd_generate(const GenerateOptions& o, const CLI::App& sub) {
  auto given = [&](const char* opt) { return sub.count(opt) > 0; };
  auto only = [&](std::initializer_list<const char*> opts, const char* kind) {
    for (const char* opt : opts)
      if (given(opt)) throw UsageError(std::string(opt) + " does not apply to '" + kind + "'");
  };
  Graph g;
  try {
    if (o.kind == "uig") {
      only({"--max-depth", "--root-chance", "--a", "--b", "--full", "--p"}, "uig");
      g = generate_uig(o.n, o.density, o.seed).graph;
    } else if (o.kind == "tpg") {
      only({"--density", "--a", "--b", "--full", "--p"}, "tpg");
      g = generate_tpg(o.n, o.seed, o.max_depth, o.root_chance);
    } else if (o.kind == "chain") {
      only({"--n", "--density", "--max-depth", "--root-chance", "--p"}, "chain");
      g = generate_bipartite_chain(o.a, o.b, o.seed, o.full);
    } else {
      only({"--density", "--max-depth", "--root-chance", "--a", "--b", "--full"}, "random");
      if (o.p < 0 || o.p > 1) throw UsageError("--p must be in [0, 1]");
      g = generate_random(o.n, o.p, o.seed);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  write_graph(std::cout, g);
  return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& verdict_path) {
  const Graph g = load_graph(graph_path);
  std::ifstream in(verdict_path);
  if (!in) throw UsageError("cannot open '" + verdict_path + "'");
  Verdict v;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    v = verdict_from_json(doc);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(verdict_path + ": " + e.what());
  } catch (const SchemaError& e) {
    throw UsageError(verdict_path + ": " + e.what());
  }
  auto mismatch = [](const std::string& why) {
    std::cout << "mismatch: " << why << '\n';
    return 1;
  };
  if (doc.contains("n") && doc["n"] != g.vertex_count()) return mismatch("vertex count differs from the graph");
  if (doc.contains("m") && doc["m"] != g.edge_count()) return mismatch("edge count differs from the graph");
  if (auto r = verify_certificate(g, v); !r) return mismatch(r.witness());
  std::cout << "ok\n";
  return 0;
}

// Positive instances with m <= 4n where the class allows it.
Graph bench_instance(GraphClass c, Vertex n, std::uint64_t seed) {
  switch (c) {
    case GraphClass::star: {
      std::vector<Edge> e;
      for (Vertex i = 1; i < n; ++i) e.emplace_back(0, i);
      return Graph(n, e);
    }
    case GraphClass::split: {
      // Clique on k vertices, every other vertex hangs off one clique vertex.
      const Vertex k = std::max<Vertex>(1, std::min<Vertex>(n, 8));
      std::vector<Edge> e;
      for (Vertex i = 0; i < k; ++i)
        for (Vertex j = i + 1; j < k; ++j) e.emplace_back(i, j);
      Rng rng(seed);
      for (Vertex v = k; v < n; ++v) e.emplace_back(v, static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(k))));
      return Graph(n, e);
    }
    case GraphClass::bipartite_chain: return generate_bipartite_chain(n / 2, n - n / 2, seed);
    case GraphClass::trivially_perfect: return generate_tpg(n, seed, 4);
    case GraphClass::unit_interval: return generate_uig(n, std::min(1.0, 6.0 / std::max<Vertex>(n, 1)), seed).graph;
  }
  return Graph();
}

int cmd_bench(const std::string& cls_name, const std::vector<std::string>& sizes, std::uint64_t seed) {
  const GraphClass cls = parse_class(cls_name);
  std::vector<Vertex> ns;
  for (const auto& tok : sizes) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      const double x = std::stod(tok, &used);
      if (used != tok.size() || x < 1 || x > 5e7) throw std::invalid_argument("size");
      ns.push_back(static_cast<Vertex>(x));
    } catch (const std::exception&) {
      throw UsageError("bad size '" + tok + "'");
    }
  }
  std::cout << "n,m,seconds\n";
  for (Vertex n : ns) {
    const Graph g = bench_instance(cls, n, seed);
    double best = 0;
    for (int rep = 0; rep < 3; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      const Verdict v = recognize(g, cls);
      const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (!v.member) throw std::logic_error("bench instance rejected");
      best = rep == 0 ? s : std::min(best, s);
    }
    std::cout << n << ',' << g.edge_count() << ',' << best << '\n';
  }
  return 0;
}

nlohmann::json mdt_json(const MdtNode& node) {
  if (node.kind == MdtNode::Kind::leaf) return {{"kind", "leaf"}, {"vertex", node.vertex}};
  nlohmann::json j{{"kind", kind_name(node.kind)}, {"vertices", node.span}, {"children", nlohmann::json::array()}};
  for (const auto& c : node.children) j["children"].push_back(mdt_json(c));
  return j;
}

int cmd_analyze(const std::string& path) {
  const Graph g = load_graph(path);
  if (g.vertex_count() > kModuleCap)
    throw UsageError("analyze is exhaustive and limited to " + std::to_string(kModuleCap) + " vertices");
  const auto twins = true_twin_classes(g);
  const MdtNode tree = mdt(g);
  nlohmann::json j;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["modules"] = modules_bruteforce(g);
  j["mdt"] = mdt_json(tree);
  j["mdt_depth"] = tree.depth();
  j["true_twin_classes"] = twins.classes;
  j["false_twin_pairs"] = twins.false_twin_pairs;
  if (g.vertex_count() <= kEnumerationCap)
    j["left_right_orderings"] = enumerate_left_right_orderings(g).size();
  else
    j["left_right_orderings"] = nullptr;
  std::cout << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certifying recognition of star, split, bipartite chain, trivially perfect and unit interval graphs"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string cls, input, format = "text";
  bool no_certificate = false, no_certify = false;
  auto* rec = app.add_subcommand("recognize", "Decide membership and print the certificate");
  rec->add_option("class", cls, "One of: " + valid_classes())->required();
  rec->add_option("input", input, "Graph file, or - for stdin")->required();
  rec->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  rec->add_flag("--no-certificate", no_certificate, "Omit the certificate from the output");
  rec->add_flag("--no-certify", no_certify, "Skip the self-check of the certificate");

  GenerateOptions gen;
  auto* gsub = app.add_subcommand("generate", "Print a seeded random graph");
  gsub->add_option("kind", gen.kind, "uig, tpg, chain or random")
      ->required()
      ->check(CLI::IsMember({"uig", "tpg", "chain", "random"}));
  gsub->add_option("--n", gen.n, "Vertex count (uig, tpg, random)");
  gsub->add_option("--seed", gen.seed, "Seed");
  gsub->add_option("--density", gen.density, "Edge probability of the interval model (uig)");
  gsub->add_option("--max-depth", gen.max_depth, "Forest depth bound (tpg)");
  gsub->add_option("--root-chance", gen.root_chance, "Probability of starting a new tree (tpg)");
  gsub->add_option("--a", gen.a, "Side A size (chain)");
  gsub->add_option("--b", gen.b, "Side B size (chain)");
  gsub->add_flag("--full", gen.full, "Neighborhoods of size b, b-1, ... (chain)");
  gsub->add_option("--p", gen.p, "Edge probability (random)");

  std::string graph_path, verdict_path;
  auto* ver = app.add_subcommand("verify", "Check a verdict JSON file against a graph");
  ver->add_option("graph", graph_path)->required();
  ver->add_option("verdict", verdict_path)->required();

  std::string bench_cls, sizes_text;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "Time a recognizer on generated members (CSV: n,m,seconds)");
  bench->add_option("class", bench_cls)->required();
  bench->add_option("--sizes", sizes_text, "Comma-separated vertex counts")->expected(0, 1);
  bench->add_option("--seed", bench_seed);

  std::string analyze_path;
  auto* an = app.add_subcommand("analyze", "Modules, modular decomposition, twins and Left-Right orderings (small graphs)");
  an->add_option("graph", analyze_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*rec) return cmd_recognize(cls, input, format, !no_certificate, !no_certify);
    if (*gsub) return cmd_generate(gen, *gsub);
    if (*ver) return cmd_verify(graph_path, verdict_path);
    if (*bench) {
      std::vector<std::string> sizes;
      std::stringstream ss(sizes_text);
      for (std::string tok; std::getline(ss, tok, ',');) sizes.push_back(tok);
      return cmd_bench(bench_cls, sizes, bench_seed);
    }
    if (*an) return cmd_analyze(analyze_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OracleSizeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
