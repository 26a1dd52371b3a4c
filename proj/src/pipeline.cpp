#include "dezaforge/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "dezaforge/certify.hpp"
#include "dezaforge/golay.hpp"
#include "dezaforge/parallel.hpp"
#include "dezaforge/spectra.hpp"

namespace dezaforge {

namespace {

using nlohmann::json;

constexpr const char* kDeltaSpectrum = "22:1,5:48,4:72,-4:60,-5:62";
constexpr const char* kGammaK2Spectrum = "45:1,9:132,-1:243,-9:110";
constexpr const char* kDeltaK2Spectrum = "45:1,9:120,1:108,-1:135,-9:122";

ConnectionSet s1_from(const std::vector<Gf3Vector>& reps) {
  std::vector<Gf3Vector> all;
  for (const auto& r : reps) {
    all.push_back(r);
    all.push_back(-r);
  }
  return ConnectionSet(5, all);
}

Gf3Matrix minus_identity() { return Gf3Matrix::Identity(5, 5) * Gf3(2); }

std::string involution_kind(const InvolutionPairs& p) {
  if (p.adjacent_swaps == 0 && p.nonadjacent_swaps > 0) return "only-non-adjacent";
  if (p.nonadjacent_swaps == 0 && p.adjacent_swaps > 0) return "only-adjacent";
  return "mixed";
}

json involution_row(const std::string& name, const InvolutionPairs& p) {
  return {{"involution", name},
          {"fixed", p.fixed},
          {"adjacent_swaps", p.adjacent_swaps},
          {"nonadjacent_swaps", p.nonadjacent_swaps},
          {"kind", involution_kind(p)}};
}

struct Outcome {
  json certificate;
  bool pass = false;
};

class Runner {
public:
  json stages = json::array();
  bool all_pass = true;

  void run(const std::string& name, json inputs, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = body();
    } catch (const std::exception& e) {
      out.certificate = {{"error", e.what()}};
      out.pass = false;
    }
    const auto ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    stages.push_back({{"name", name},
                      {"inputs", std::move(inputs)},
                      {"certificate", std::move(out.certificate)},
                      {"pass", out.pass},
                      {"elapsed_ms", ms}});
    all_pass = all_pass && out.pass;
  }
};

bool deza_matches(const DezaCertificate& c, std::size_t v, std::size_t k, std::size_t b, std::size_t a) {
  return c.pass && c.strict && c.v == v && c.k == k && c.b == b && c.a == a;
}

// Vertex-neighbourhood form of switching: N'(u) = N(sigma(u)).
bool neighbourhoods_follow(const Graph& g, const Graph& switched, const Permutation& sigma) {
  for (std::size_t u = 0; u < g.order(); ++u) {
    const auto a = switched.row(u);
    const auto b = g.row(sigma[u]);
    if (!std::equal(a.begin(), a.end(), b.begin(), b.end())) return false;
  }
  return true;
}

Outcome spectrum_outcome(const Graph& g, const char* claim) {
  const auto cert = certify_spectrum(g, parse_claim(claim));
  return {to_json(cert), cert.pass};
}

std::size_t matrix_key(const Gf3Matrix& m) {
  std::size_t key = 0;
  for (Eigen::Index i = 0; i < m.size(); ++i) key = key * 3 + static_cast<std::size_t>(m(i).residue());
  return key;
}

std::vector<Gf3Matrix> enumerate_group(const std::vector<Gf3Matrix>& gens) {
  const Eigen::Index n = gens.front().rows();
  std::vector<Gf3Matrix> elems{Gf3Matrix::Identity(n, n)};
  std::set<std::size_t> seen{matrix_key(elems.front())};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      Gf3Matrix h = elems[k] * g;
      if (seen.insert(matrix_key(h)).second) elems.push_back(std::move(h));
    }
  return elems;
}

// Elements of <x, y, -I> and translations commuting with the switching
// involution, reduced to a generating set.
std::vector<Permutation> switching_centralizer() {
  const Gf3Matrix x = m11_x();
  std::vector<Permutation> gens;
  for (const auto& t : kernel((x - Gf3Matrix::Identity(5, 5)).transpose())) gens.push_back(translation_perm(t));
  const auto group = enumerate_group({m11_x(), m11_y(), minus_identity()});
  for (const auto& m : group) {
    if (!((m * x) == (x * m))) continue;
    const Permutation p = perm_from_matrix(m);
    if (p.is_identity()) continue;
    if (!gens.empty() && StabilizerChain(p.degree(), gens).contains(p)) continue;
    gens.push_back(p);
  }
  return gens;
}

std::vector<Permutation> gamma_subgroup_generators() {
  auto gens = translation_generators(5);
  gens.push_back(x_perm());
  gens.push_back(perm_from_matrix(m11_y()));
  gens.push_back(minus_identity_perm());
  return gens;
}

}  // namespace

const std::vector<std::string>& graph_names() {
  static const std::vector<std::string> names{"gamma", "gamma-s2", "delta", "gamma-k2", "delta-k2", "petersen", "c5"};
  return names;
}

Permutation minus_identity_perm() { return perm_from_matrix(minus_identity()); }
Permutation x_perm() { return perm_from_matrix(m11_x()); }
Permutation minus_x_perm() { return perm_from_matrix(m11_x() * Gf3(2)); }
Permutation switching_involution() { return x_perm(); }

std::vector<Permutation> translation_generators(Eigen::Index n) {
  std::vector<Permutation> out;
  for (Eigen::Index i = 0; i < n; ++i) {
    Gf3Vector e = Gf3Vector::Zero(n);
    e(i) = Gf3(1);
    out.push_back(translation_perm(e));
  }
  return out;
}

Graph named_graph(std::string_view name) {
  Graph g = [&]() -> Graph {
    if (name == "gamma") return cayley(5, connection_set_s1());
    if (name == "gamma-s2") return cayley(5, connection_set_s2());
    if (name == "delta") return dual_seidel_switch(cayley(5, connection_set_s1()), switching_involution());
    if (name == "gamma-k2") return strong_product_k2(cayley(5, connection_set_s1()));
    if (name == "delta-k2")
      return dual_seidel_switch(strong_product_k2(cayley(5, connection_set_s1())),
                                lift_involution_to_product(switching_involution()));
    if (name == "petersen") return petersen_graph();
    if (name == "c5") return cycle_graph(5);
    throw UnknownGraph("unknown graph name '" + std::string(name) + "'");
  }();
  g.set_label(std::string(name));
  return g;
}

json aut_stage_certificate(const Graph& g, const AutOptions& options, const std::vector<Permutation>& fallback,
                           const GroupOrder& expected) {
  try {
    const auto r = automorphism_group(g, options);
    json j = to_json(r);
    j["status"] = "exact";
    j["expected_order"] = to_json(expected);
    j["pass"] = r.order == expected;
    return j;
  } catch (const AutSearchExhausted& e) {
    std::vector<Permutation> gens = fallback;
    gens.insert(gens.end(), e.generators().begin(), e.generators().end());
    const GroupOrder bound = verify_subgroup(g, gens);
    return {{"type", "automorphism-group"},
            {"status", "lower-bound only"},
            {"lower_bound", to_json(bound)},
            {"expected_order", to_json(expected)},
            {"nodes_searched", e.nodes_searched()},
            {"pass", bound % expected == 0}};
  }
}

json run_full_pipeline(const PipelineConfig& config) {
  set_max_threads(std::max(1u, config.threads));
  Runner run;

  const ConnectionSet s1 = config.s1_override ? s1_from(*config.s1_override) : connection_set_s1();
  const ConnectionSet s2 = connection_set_s2();
  const Graph gamma = cayley(5, s1);
  const Graph gamma_s2 = cayley(5, s2);
  const Permutation phi = switching_involution();
  std::optional<Graph> delta, gamma_k2, delta_k2;

  auto srg_stage = [&](const Graph& g) {
    SrgCertificate c = certify_srg(g);
    attach_srg_eigenvalues(c);
    json cert = to_json(c);
    bool pass = c.pass && c.v == 243 && c.k == 22 && c.lambda == 1 && c.mu == 2;
    if (c.pass) {
      const bool feasible = srg_feasible(c);
      const auto comp = certify_srg(complement(g));
      const bool complement_ok = comp.pass && comp.k == c.v - c.k - 1 && comp.lambda == c.v - 2 * c.k + c.mu - 2 &&
                          comp.mu == c.v - 2 * c.k + c.lambda;
      cert["feasibility_identity"] = feasible;
      cert["complement"] = to_json(comp);
      cert["complement_parameters_match"] = complement_ok;
      pass = pass && feasible && complement_ok;
    }
    return Outcome{cert, pass};
  };

  run.run("gamma-srg", {{"graph", "gamma"}, {"connection_set", "S1"}}, [&] { return srg_stage(gamma); });
  run.run("gamma-s2-srg", {{"graph", "gamma-s2"}, {"connection_set", "S2"}}, [&] { return srg_stage(gamma_s2); });

  run.run("linear-isomorphism", {{"from", "S1"}, {"to", "S2"}}, [&] {
    const auto iso = find_linear_cayley_isomorphism(s1, s2);
    json cert = {{"type", "linear-isomorphism"}, {"candidates", iso.candidates}, {"nodes", iso.nodes}};
    bool pass = false;
    if (iso.map) {
      const bool maps_sets = s1.image(*iso.map) == s2;
      const bool vertex_map = is_isomorphism(gamma, gamma_s2, perm_from_matrix(*iso.map));
      cert["map"] = to_json(*iso.map);
      cert["connection_sets_match"] = maps_sets;
      cert["vertex_map_is_isomorphism"] = vertex_map;
      pass = maps_sets && vertex_map;
    } else {
      cert["map"] = nullptr;
    }
    return Outcome{cert, pass};
  });

  run.run("orbits", {{"generators", {"x", "y"}}}, [&] {
    const std::vector<Gf3Matrix> gens{m11_x(), m11_y()};
    const auto first = orbit(gens, make_vector({1, 0, 0, 0, 0}));
    std::vector<std::size_t> first_idx;
    for (const auto& v : first) first_idx.push_back(vector_to_index(v));
    std::size_t other_seed = 1;
    while (std::find(first_idx.begin(), first_idx.end(), other_seed) != first_idx.end()) ++other_seed;
    const auto second = orbit(gens, index_to_vector(other_seed, 5));
    const bool equals_s1 = first_idx == s1.indices();
    std::vector<std::size_t> sizes{first.size(), second.size()};
    std::sort(sizes.begin(), sizes.end());
    json cert = {{"type", "orbits"}, {"sizes", sizes}, {"small_orbit_equals_S1", equals_s1}};
    return Outcome{cert, sizes == std::vector<std::size_t>{22, 220} && equals_s1};
  });

  run.run("involutions", {{"graph", "gamma"}, {"representatives", {"-e", "x", "-x"}}}, [&] {
    const std::vector<std::pair<std::string, Permutation>> reps{
        {"-e", minus_identity_perm()}, {"x", x_perm()}, {"-x", minus_x_perm()}};
    json rows = json::array();
    std::size_t only_nonadjacent = 0, only_adjacent = 0;
    bool fixed_ok = true;
    for (const auto& [name, p] : reps) {
      const auto pairs = classify_involution_pairs(gamma, p);
      rows.push_back(involution_row(name, pairs));
      const auto kind = involution_kind(pairs);
      if (kind == "only-non-adjacent") {
        ++only_nonadjacent;
        fixed_ok = fixed_ok && pairs.fixed == 27;
      }
      only_adjacent += kind == "only-adjacent";
    }
    json cert = {{"type", "involution-sweep"}, {"rows", rows}};
    return Outcome{cert, only_nonadjacent == 1 && only_adjacent == 0 && fixed_ok};
  });

  run.run("reversal", {{"graph", "gamma-s2"}}, [&] {
    const Permutation rev = reversal_perm();
    const bool aut = is_automorphism(gamma_s2, rev);
    const bool invol = is_involution(rev);
    Gf3Matrix j = Gf3Matrix::Zero(5, 5);
    for (Eigen::Index i = 0; i < 5; ++i) j(i, 4 - i) = Gf3(1);
    const bool closed = s2.image(j) == s2;
    const bool antisym = has_antisymmetric_vector(s2);
    json cert = {{"type", "reversal"},
                 {"automorphism", aut},
                 {"involution", invol},
                 {"connection_set_reversal_closed", closed},
                 {"antisymmetric_vector_in_S2", antisym}};
    bool pass = aut && invol && closed && !antisym;
    if (aut && invol) {
      const auto pairs = classify_involution_pairs(gamma_s2, rev);
      cert["pairs"] = involution_row("reversal", pairs);
      pass = pass && pairs.adjacent_swaps == 0 && pairs.fixed == 27;
    }
    return Outcome{cert, pass};
  });

  run.run("switch-gamma", {{"graph", "gamma"}, {"involution", "x"}, {"claim", kDeltaSpectrum}}, [&] {
    delta = dual_seidel_switch(gamma, phi);
    const auto deza = certify_deza(*delta);
    const auto sp = spectrum_outcome(*delta, kDeltaSpectrum);
    const bool nbhd = neighbourhoods_follow(gamma, *delta, phi);
    json cert = {{"deza", to_json(deza)}, {"spectrum", sp.certificate}, {"neighbourhood_rule", nbhd}};
    return Outcome{cert, deza_matches(deza, 243, 22, 2, 1) && sp.pass && nbhd};
  });

  run.run("product-k2", {{"graph", "gamma"}, {"claim", kGammaK2Spectrum}}, [&] {
    gamma_k2 = strong_product_k2(gamma);
    const auto deza = certify_deza(*gamma_k2);
    const auto sp = spectrum_outcome(*gamma_k2, kGammaK2Spectrum);
    json cert = {{"deza", to_json(deza)}, {"spectrum", sp.certificate}};
    return Outcome{cert, deza_matches(deza, 486, 45, 44, 4) && sp.pass};
  });

  run.run("switch-product",
          {{"graph", "gamma-k2"}, {"involution", "lift(x)"}, {"claim", kDeltaK2Spectrum}}, [&] {
            if (!gamma_k2) throw PreconditionError("product stage did not produce a graph");
            const Permutation lifted = lift_involution_to_product(phi);
            const auto pairs = classify_involution_pairs(*gamma_k2, lifted);
            delta_k2 = dual_seidel_switch(*gamma_k2, lifted);
            const auto deza = certify_deza(*delta_k2);
            const auto sp = certify_spectrum(*delta_k2, parse_claim(kDeltaK2Spectrum));
            const auto other = parse_claim(kGammaK2Spectrum);
            const bool differs = sp.pass && (sp.eigenvalues != other.eigenvalues() ||
                                               sp.multiplicities != other.multiplicities());
            const bool nbhd = neighbourhoods_follow(*gamma_k2, *delta_k2, lifted);
            json cert = {{"lifted_involution", involution_row("lift(x)", pairs)},
                         {"deza", to_json(deza)},
                         {"spectrum", to_json(sp)},
                         {"neighbourhood_rule", nbhd},
                         {"spectrum_differs_from_product", differs}};
            return Outcome{cert, pairs.adjacent_swaps == 0 && deza_matches(deza, 486, 45, 44, 4) && sp.pass &&
                                     differs && nbhd};
          });

  run.run("divisible-design", {{"graphs", {"gamma-k2", "delta-k2"}}}, [&] {
    if (!gamma_k2 || !delta_k2) throw PreconditionError("486-vertex graphs were not produced");
    json certs = json::array();
    bool pass = true;
    for (const Graph* g : {&*gamma_k2, &*delta_k2}) {
      const auto c = certify_ddg(*g);
      json j = to_json(c);
      j.erase("partition");
      certs.push_back(j);
      pass = pass && c.pass && c.m == 243 && c.n == 2 && c.lambda1 == 44 && c.lambda2 == 4;
    }
    return Outcome{{{"type", "ddg-pair"}, {"certificates", certs}}, pass};
  });

  run.run("subgroup-orders", {{"graph", "gamma"}}, [&] {
    const std::vector<Permutation> m11{x_perm(), perm_from_matrix(m11_y())};
    const GroupOrder m11_order = group_order(m11);
    const GroupOrder full = verify_subgroup(gamma, gamma_subgroup_generators());
    const GroupOrder centralizer = delta ? verify_subgroup(*delta, switching_centralizer()) : GroupOrder(0);
    json cert = {{"type", "subgroup-orders"},
                 {"m11", to_json(m11_order)},
                 {"affine", to_json(full)},
                 {"switching_centralizer_on_delta", to_json(centralizer)}};
    return Outcome{cert, m11_order == 7920 && full == 3849120 && centralizer == 2592};
  });

  run.run("golay", {{"parity_check", "H"}}, [&] {
    const auto code = code_from_parity_check(parity_check_H());
    const auto d = minimum_distance(code);
    const bool cover = pair_sums_cover(parity_check_H(), s2);
    const Graph coset = coset_graph(code);  // throws if it differs from cayley(5, S2)
    json cert = {{"type", "golay"},
                 {"dimension", code.dimension},
                 {"codewords", code.codewords.size()},
                 {"minimum_distance", d},
                 {"signed_columns", s2.size()},
                 {"pair_sums_cover", cover},
                 {"coset_graph_equals_cayley", coset == gamma_s2},
                 {"coset_graph_edges", coset.edge_count()}};
    return Outcome{cert, code.dimension == 6 && code.codewords.size() == 729 && d == 5 && s2.size() == 22 && cover &&
                             coset == gamma_s2};
  });

  if (config.deep) {
    AutOptions options;
    options.node_budget = config.aut_node_budget;
    run.run("aut-delta", {{"graph", "delta"}}, [&] {
      if (!delta) throw PreconditionError("switched graph was not produced");
      json cert = aut_stage_certificate(*delta, options, switching_centralizer(), 2592);
      return Outcome{cert, cert.at("pass").get<bool>()};
    });
    run.run("aut-gamma", {{"graph", "gamma"}}, [&] {
      json cert = aut_stage_certificate(gamma, options, gamma_subgroup_generators(), 3849120);
      return Outcome{cert, cert.at("pass").get<bool>()};
    });
  }

  json cfg = {{"deep", config.deep}, {"threads", config.threads}, {"aut_node_budget", config.aut_node_budget}};
  if (config.s1_override) {
    json reps = json::array();
    for (const auto& v : *config.s1_override) reps.push_back(to_string(v));
    cfg["s1_override"] = reps;
  }
  return {{"schema", kReportSchema},
          {"tool_version", kToolVersion},
          {"config", cfg},
          {"stages", run.stages},
          {"overall_pass", run.all_pass}};
}

}  // namespace dezaforge
