// deza-forge: builds, switches and certifies the graphs on V(5,3).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dezaforge/autiso.hpp"
#include "dezaforge/certify.hpp"
#include "dezaforge/golay.hpp"
#include "dezaforge/graph_io.hpp"
#include "dezaforge/parallel.hpp"
#include "dezaforge/pipeline.hpp"
#include "dezaforge/spectra.hpp"

namespace df = dezaforge;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string graph;
  std::string out;
  std::string format = "json";
  std::string claim;
  std::string involution;
  bool deep = false;
  bool reversal = false;
  bool seeded = false;
  unsigned threads = 1;
  std::size_t budget = df::AutOptions{}.node_budget;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw df::Error("cannot write " + path);
  out << text;
}

df::Graph load_graph(const std::string& source) {
  const auto& names = df::graph_names();
  if (std::find(names.begin(), names.end(), source) != names.end()) return df::named_graph(source);
  if (!std::filesystem::is_regular_file(source)) return df::named_graph(source);  // throws UnknownGraph
  const auto ext = std::filesystem::path(source).extension().string();
  df::Graph g = (ext == ".edges" || ext == ".el") ? df::from_edge_list(read_file(source)) : df::from_graph6(read_file(source));
  g.set_label(source);
  return g;
}

std::string render_graph(const df::Graph& g, const std::string& format) {
  if (format == "graph6") return df::to_graph6(g) + "\n";
  if (format == "edgelist") return df::to_edge_list(g);
  json j = {{"label", g.label()}, {"vertices", g.order()}, {"edges", g.edge_count()}};
  json adj = json::array();
  for (std::size_t u = 0; u < g.order(); ++u) adj.push_back(g.neighbours(u));
  j["adjacency"] = adj;
  return j.dump() + "\n";
}

int emit(const json& j, bool pass, const Options& opt) {
  const std::string text = j.dump(2) + "\n";
  std::cout << text;
  if (!opt.out.empty()) write_file(opt.out, text);
  return pass ? kExitPass : kExitFail;
}

json summary(const df::Graph& g) {
  json j = {{"type", "graph"}, {"label", g.label()}, {"vertices", g.order()}, {"edges", g.edge_count()}};
  if (auto k = g.regular_degree()) j["regular_degree"] = *k;
  return j;
}

df::Permutation involution_for(const df::Graph& g, const std::string& name) {
  if (name == "-e") return df::minus_identity_perm();
  if (name == "x") return df::x_perm();
  if (name == "-x") return df::minus_x_perm();
  if (name == "reversal") return df::reversal_perm();
  if (name == "lift-x") return df::lift_involution_to_product(df::x_perm());
  if (name.empty()) {
    if (g.order() == 243) return df::switching_involution();
    if (g.order() == 486) return df::lift_involution_to_product(df::switching_involution());
  }
  throw CLI::ValidationError("--involution", "no involution '" + name + "' for a graph on " +
                                                 std::to_string(g.order()) + " vertices");
}

int cmd_involutions(const Options& opt) {
  const df::Graph g = load_graph(opt.graph);
  if (g.order() != 243) throw CLI::ValidationError("graph", "involution representatives act on 243 vertices");
  std::vector<std::string> reps{"-e", "x", "-x"};
  if (opt.reversal) reps.emplace_back("reversal");
  json rows = json::array();
  std::size_t only_nonadjacent = 0, only_adjacent = 0;
  for (const auto& name : reps) {
    const auto p = involution_for(g, name);
    json row = {{"involution", name}, {"automorphism", df::is_automorphism(g, p)}};
    if (row["automorphism"].get<bool>() && df::is_involution(p)) {
      const auto pairs = df::classify_involution_pairs(g, p);
      const std::string kind = pairs.adjacent_swaps == 0   ? "only-non-adjacent"
                               : pairs.nonadjacent_swaps == 0 ? "only-adjacent"
                                                              : "mixed";
      only_nonadjacent += kind == "only-non-adjacent";
      only_adjacent += kind == "only-adjacent";
      row.update({{"fixed", pairs.fixed},
                  {"adjacent_swaps", pairs.adjacent_swaps},
                  {"nonadjacent_swaps", pairs.nonadjacent_swaps},
                  {"kind", kind}});
    }
    rows.push_back(row);
  }
  const bool pass = only_nonadjacent >= 1 && only_adjacent == 0;
  return emit({{"type", "involution-sweep"}, {"graph", g.label()}, {"rows", rows}, {"pass", pass}}, pass, opt);
}

int cmd_spectrum(const Options& opt) {
  const df::Graph g = load_graph(opt.graph);
  if (opt.claim.empty()) {
    auto found = df::discover_spectrum(g);
    if (!found) return emit({{"type", "spectrum"}, {"pass", false}, {"failure", "no integral spectrum found"}}, false, opt);
    const auto cert = df::certify_spectrum(g, *found);
    return emit(df::to_json(cert), cert.pass, opt);
  }
  const auto cert = df::certify_spectrum(g, df::parse_claim(opt.claim));
  return emit(df::to_json(cert), cert.pass, opt);
}

int cmd_derived(const Options& opt, bool product) {
  const df::Graph g = load_graph(opt.graph);
  df::Graph h = product ? df::strong_product_k2(g) : df::dual_seidel_switch(g, involution_for(g, opt.involution));
  const auto deza = df::certify_deza(h);
  json j = {{"result", summary(h)}, {"deza", df::to_json(deza)}};
  std::cout << j.dump(2) << "\n";
  if (!opt.out.empty()) write_file(opt.out, render_graph(h, opt.format));
  return deza.pass ? kExitPass : kExitFail;
}

int cmd_aut(const Options& opt) {
  const df::Graph g = load_graph(opt.graph);
  df::AutOptions options;
  options.node_budget = opt.budget;
  if (opt.seeded && g.order() == 243) {
    for (const auto& p : df::translation_generators(5))
      if (df::is_automorphism(g, p)) options.seeds.push_back(p);
  }
  try {
    const auto r = df::automorphism_group(g, options);
    return emit(df::to_json(r), true, opt);
  } catch (const df::AutSearchExhausted& e) {
    json j = {{"type", "automorphism-group"},
              {"status", "lower-bound only"},
              {"lower_bound", df::to_json(e.lower_bound())},
              {"nodes_searched", e.nodes_searched()}};
    return emit(j, false, opt);
  }
}

int cmd_iso(const Options& opt) {
  const auto s1 = df::connection_set_s1();
  const auto s2 = df::connection_set_s2();
  const auto iso = df::find_linear_cayley_isomorphism(s1, s2);
  json j = {{"type", "linear-isomorphism"}, {"candidates", iso.candidates}, {"nodes", iso.nodes}};
  bool pass = false;
  if (iso.map) {
    pass = s1.image(*iso.map) == s2;
    j["map"] = df::to_json(*iso.map);
  } else {
    j["map"] = nullptr;
  }
  j["pass"] = pass;
  return emit(j, pass, opt);
}

int cmd_golay(const Options& opt) {
  const auto h = df::parity_check_H();
  const auto code = df::code_from_parity_check(h);
  const auto s2 = df::connection_set_s2(h);
  const auto coset = df::coset_graph(code);
  const auto d = df::minimum_distance(code);
  const bool cover = df::pair_sums_cover(h, s2);
  const bool pass = code.dimension == 6 && code.codewords.size() == 729 && d == 5 && s2.size() == 22 && cover;
  json j = {{"type", "golay"},
            {"parity_check", df::to_json(h)},
            {"dimension", code.dimension},
            {"codewords", code.codewords.size()},
            {"minimum_distance", d},
            {"signed_columns", s2.size()},
            {"pair_sums_cover", cover},
            {"coset_graph_edges", coset.edge_count()},
            {"pass", pass}};
  std::cout << j.dump(2) << "\n";
  if (!opt.out.empty()) write_file(opt.out, df::export_codewords(code));
  return pass ? kExitPass : kExitFail;
}

int cmd_export(const Options& opt) {
  const df::Graph g = load_graph(opt.graph);
  const std::string text = render_graph(g, opt.format);
  if (opt.out.empty())
    std::cout << text;
  else
    write_file(opt.out, text);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Builds, switches and certifies strongly regular and Deza graphs on V(5,3)"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--threads", opt.threads, "Worker cap")->check(CLI::Range(1u, 256u));

  const std::string graph_help = "Graph name (" + [] {
    std::string s;
    for (const auto& n : df::graph_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }() + ") or a graph6 / .edges file";

  auto add = [&](const std::string& name, const std::string& help, bool takes_graph) {
    auto* sub = app.add_subcommand(name, help);
    if (takes_graph) sub->add_option("graph", opt.graph, graph_help)->required();
    sub->add_option("--out", opt.out, "Also write the output to this path");
    return sub;
  };

  auto* build = add("build", "Build a graph and print its size", true);
  auto* srg = add("certify-srg", "Certify strong regularity", true);
  auto* deza = add("certify-deza", "Certify the Deza property", true);
  auto* ddg = add("certify-ddg", "Certify a divisible design graph", true);
  auto* spectrum = add("spectrum", "Certify or discover the integral spectrum", true);
  spectrum->add_option("--claim", opt.claim, "Eigenvalue:multiplicity list, e.g. 22:1,5:48");
  auto* invol = add("involutions", "Classify the -e, x, -x involutions", true);
  invol->add_flag("--reversal", opt.reversal, "Also classify the coordinate reversal");
  auto* sw = add("switch", "Dual Seidel switching by an involution", true);
  sw->add_option("--involution", opt.involution, "-e, x, -x, reversal or lift-x");
  sw->add_option("--format", opt.format, "Format for --out")->check(CLI::IsMember({"json", "graph6", "edgelist"}));
  auto* product = add("product", "Strong product with K2", true);
  product->add_option("--format", opt.format, "Format for --out")->check(CLI::IsMember({"json", "graph6", "edgelist"}));
  auto* aut = add("aut", "Automorphism group by individualization-refinement", true);
  aut->add_option("--budget", opt.budget, "Search node budget");
  aut->add_flag("--seed-translations", opt.seeded, "Seed the search with translations of V(5,3)");
  auto* iso = add("iso", "Linear map between the two connection sets", false);
  auto* golay = add("golay", "Ternary Golay code checks; --out writes the codewords", false);
  auto* exp = add("export", "Write a graph", true);
  exp->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "graph6", "edgelist"}));
  auto* pipeline = add("pipeline", "Run every construction and certificate as one report", false);
  pipeline->add_flag("--deep", opt.deep, "Also compute full automorphism groups");
  pipeline->add_option("--budget", opt.budget, "Node budget for the automorphism searches");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }
  df::set_max_threads(opt.threads);

  try {
    if (*build) return emit(summary(load_graph(opt.graph)), true, opt);
    if (*srg) {
      auto c = df::certify_srg(load_graph(opt.graph));
      df::attach_srg_eigenvalues(c);
      return emit(df::to_json(c), c.pass, opt);
    }
    if (*deza) {
      const auto c = df::certify_deza(load_graph(opt.graph));
      return emit(df::to_json(c), c.pass, opt);
    }
    if (*ddg) {
      const auto c = df::certify_ddg(load_graph(opt.graph));
      return emit(df::to_json(c), c.pass, opt);
    }
    if (*spectrum) return cmd_spectrum(opt);
    if (*invol) return cmd_involutions(opt);
    if (*sw) return cmd_derived(opt, false);
    if (*product) return cmd_derived(opt, true);
    if (*aut) return cmd_aut(opt);
    if (*iso) return cmd_iso(opt);
    if (*golay) return cmd_golay(opt);
    if (*exp) return cmd_export(opt);
    if (*pipeline) {
      df::PipelineConfig config;
      config.deep = opt.deep;
      config.threads = opt.threads;
      config.aut_node_budget = opt.budget;
      const json report = df::run_full_pipeline(config);
      return emit(report, report.at("overall_pass").get<bool>(), opt);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const df::UnknownGraph& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const df::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const df::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
