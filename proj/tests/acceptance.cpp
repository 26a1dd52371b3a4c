// Acceptance suite: one line per criterion with its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "dezaforge/autiso.hpp"
#include "dezaforge/certify.hpp"
#include "dezaforge/golay.hpp"
#include "dezaforge/graph_io.hpp"
#include "dezaforge/pipeline.hpp"
#include "dezaforge/spectra.hpp"

using namespace dezaforge;

namespace {

struct Verdict {
  bool pass = false;
  std::string note;
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_s, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < limit_s;
  const bool ok = v.pass && in_time;
  if (!ok) ++failures;
  std::printf("[%s] %s %s (%.3f s, limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL", id, title, secs, limit_s,
              v.note.empty() ? "" : ": ", v.note.c_str());
  if (!in_time) std::printf("       time limit exceeded\n");
}

bool srg_is(const Graph& g, std::size_t v, std::size_t k, std::size_t l, std::size_t m) {
  const auto c = certify_srg(g);
  return c.pass && c.v == v && c.k == k && c.lambda == l && c.mu == m;
}

bool strict_deza_is(const Graph& g, std::size_t v, std::size_t k, std::size_t b, std::size_t a) {
  const auto c = certify_deza(g);
  return c.pass && c.strict && c.v == v && c.k == k && c.b == b && c.a == a;
}

bool spectrum_is(const Graph& g, const char* claim) { return certify_spectrum(g, parse_claim(claim)).pass; }

std::string kind(const InvolutionPairs& p) {
  if (p.adjacent_swaps == 0 && p.nonadjacent_swaps > 0) return "only-non-adjacent";
  if (p.nonadjacent_swaps == 0 && p.adjacent_swaps > 0) return "only-adjacent";
  return "mixed";
}

std::string pairs_note(const InvolutionPairs& p) {
  return "fixed " + std::to_string(p.fixed) + ", adjacent swaps " + std::to_string(p.adjacent_swaps) +
         ", non-adjacent swaps " + std::to_string(p.nonadjacent_swaps);
}

std::vector<Permutation> affine_generators() {
  auto gens = translation_generators(5);
  gens.push_back(x_perm());
  gens.push_back(perm_from_matrix(m11_y()));
  gens.push_back(minus_identity_perm());
  return gens;
}

}  // namespace

int main() {
  criterion("AC1", "Cay(V(5,3), S1) is SRG(243,22,1,2)", 1,
            [] { return Verdict{srg_is(cayley(5, connection_set_s1()), 243, 22, 1, 2), ""}; });

  criterion("AC2a", "Cay(V(5,3), S2) is SRG(243,22,1,2)", 1,
            [] { return Verdict{srg_is(cayley(5, connection_set_s2()), 243, 22, 1, 2), ""}; });

  criterion("AC2b", "linear map L with S1 L = S2", 60, [] {
    const auto s1 = connection_set_s1();
    const auto s2 = connection_set_s2();
    const auto iso = find_linear_cayley_isomorphism(s1, s2);
    const bool ok = iso.map && is_invertible(*iso.map) && s1.image(*iso.map) == s2 &&
                    iso.candidates <= 22u * 21 * 20 * 19 * 18;
    return Verdict{ok, std::to_string(iso.candidates) + " candidates, " + std::to_string(iso.nodes) + " nodes"};
  });

  criterion("AC3", "<x,y> orbits on nonzero vectors are 22 + 220, small one = S1", 1, [] {
    const std::vector<Gf3Matrix> gens{m11_x(), m11_y()};
    const auto small = orbit(gens, make_vector({1, 0, 0, 0, 0}));
    std::vector<std::size_t> idx;
    for (const auto& v : small) idx.push_back(vector_to_index(v));
    std::size_t seed = 1;
    while (std::find(idx.begin(), idx.end(), seed) != idx.end()) ++seed;
    const auto large = orbit(gens, index_to_vector(seed, 5));
    const bool ok = small.size() == 22 && large.size() == 220 && idx == connection_set_s1().indices();
    return Verdict{ok, std::to_string(small.size()) + " + " + std::to_string(large.size())};
  });

  criterion("AC4", "|<x,y>| = 7920 and verified affine subgroup = 3849120", 10, [] {
    const std::vector<Permutation> m11{x_perm(), perm_from_matrix(m11_y())};
    const auto a = group_order(m11);
    const auto b = verify_subgroup(cayley(5, connection_set_s1()), affine_generators());
    return Verdict{a == 7920 && b == 3849120, a.str() + ", " + b.str()};
  });

  criterion("AC5", "exactly one of -e, x, -x swaps only non-adjacent pairs; it fixes 27", 1, [] {
    const Graph g = cayley(5, connection_set_s1());
    std::size_t only_non = 0, only_adj = 0;
    bool fixed27 = true;
    std::string note;
    for (const auto& [name, p] : std::vector<std::pair<std::string, Permutation>>{
             {"-e", minus_identity_perm()}, {"x", x_perm()}, {"-x", minus_x_perm()}}) {
      const auto pairs = classify_involution_pairs(g, p);
      const auto k = kind(pairs);
      only_non += k == "only-non-adjacent";
      only_adj += k == "only-adjacent";
      if (k == "only-non-adjacent") fixed27 = pairs.fixed == 27;
      note += (note.empty() ? "" : "; ") + name + " " + k;
    }
    return Verdict{only_non == 1 && only_adj == 0 && fixed27, note};
  });

  criterion("AC6", "reversal on Cay(V,S2): involutive automorphism, no adjacent swaps, 27 fixed", 1, [] {
    const Graph g = cayley(5, connection_set_s2());
    const auto r = reversal_perm();
    if (!is_automorphism(g, r) || !is_involution(r)) return Verdict{false, "not an involutive automorphism"};
    const auto p = classify_involution_pairs(g, r);
    return Verdict{p.adjacent_swaps == 0 && p.fixed == 27, pairs_note(p)};
  });

  criterion("AC7", "switched Gamma is strictly Deza (243,22,2,1) with certified spectrum", 5, [] {
    const Graph d = dual_seidel_switch(cayley(5, connection_set_s1()), switching_involution());
    return Verdict{strict_deza_is(d, 243, 22, 2, 1) && spectrum_is(d, "22:1,5:48,4:72,-4:60,-5:62"), ""};
  });

  criterion("AC8", "Gamma[K2] is strictly Deza (486,45,44,4) with certified spectrum", 10, [] {
    const Graph h = strong_product_k2(cayley(5, connection_set_s1()));
    return Verdict{strict_deza_is(h, 486, 45, 44, 4) && spectrum_is(h, "45:1,9:132,-1:243,-9:110"), ""};
  });

  criterion("AC9", "lifted involution swaps no adjacent pair; switched product certified; spectra differ", 10, [] {
    const Graph h = strong_product_k2(cayley(5, connection_set_s1()));
    const auto lifted = lift_involution_to_product(switching_involution());
    const auto pairs = classify_involution_pairs(h, lifted);
    const Graph d = dual_seidel_switch(h, lifted);
    const auto a = certify_spectrum(h, parse_claim("45:1,9:132,-1:243,-9:110"));
    const auto b = certify_spectrum(d, parse_claim("45:1,9:120,1:108,-1:135,-9:122"));
    const bool differ = a.pass && b.pass && (a.eigenvalues != b.eigenvalues || a.multiplicities != b.multiplicities);
    return Verdict{pairs.adjacent_swaps == 0 && strict_deza_is(d, 486, 45, 44, 4) && b.pass && differ,
                   pairs_note(pairs)};
  });

  criterion("AC10", "both 486-vertex graphs are DDGs with m=243, n=2, lambda1=44, lambda2=4", 5, [] {
    const Graph h = strong_product_k2(cayley(5, connection_set_s1()));
    const Graph d = dual_seidel_switch(h, lift_involution_to_product(switching_involution()));
    bool ok = true;
    for (const Graph* g : {&h, &d}) {
      const auto c = certify_ddg(*g);
      ok = ok && c.pass && c.m == 243 && c.n == 2 && c.lambda1 == 44 && c.lambda2 == 4;
    }
    return Verdict{ok, ""};
  });

  criterion("AC11", "Golay: dim 6, 729 words, d = 5, 22 columns, pair sums cover, coset graph = Cayley", 5, [] {
    const auto h = parity_check_H();
    const auto code = code_from_parity_check(h);
    const auto s2 = connection_set_s2(h);
    const bool ok = code.dimension == 6 && code.codewords.size() == 729 && minimum_distance(code) == 5 &&
                    s2.size() == 22 && pair_sums_cover(h, s2) && coset_graph(code) == cayley(5, s2);
    return Verdict{ok, ""};
  });

  criterion("AC12", "Aut(switched Gamma) = 2592 and Aut(Gamma) = 3849120", 1800, [] {
    const Graph gamma = cayley(5, connection_set_s1());
    const Graph delta = dual_seidel_switch(gamma, switching_involution());
    const auto a = aut_stage_certificate(delta, {}, {}, 2592);
    const auto b = aut_stage_certificate(gamma, {}, affine_generators(), 3849120);
    const bool ok = a.at("pass").get<bool>() && b.at("pass").get<bool>();
    return Verdict{ok, "delta " + a.at("status").get<std::string>() + " " + a.value("order", a.value("lower_bound", nlohmann::json())).dump() +
                           ", gamma " + b.at("status").get<std::string>() + " " +
                           b.value("order", b.value("lower_bound", nlohmann::json())).dump()};
  });

  criterion("AC13", "property suites: feasibility, complement, neighbourhood rule, {b,a}, graph6", 60, [] {
    bool ok = true;
    // Feasibility identity on every SRG certificate.
    for (const char* name : {"gamma", "gamma-s2", "petersen", "c5"}) {
      const auto c = certify_srg(named_graph(name));
      ok = ok && c.pass && srg_feasible(c);
    }
    // Complement parameters on Gamma.
    const Graph gamma = named_graph("gamma");
    const auto comp = certify_srg(complement(gamma));
    ok = ok && comp.pass && comp.k == 220 && comp.lambda == 243 - 44 + 2 - 2 && comp.mu == 243 - 44 + 1;
    // Neighbourhood rule and {b,a} = {max, min}(lambda, mu) for every switch.
    std::vector<std::pair<Graph, Permutation>> switches;
    switches.emplace_back(gamma, switching_involution());
    {
      // Petersen vertices are 2-subsets of {0..4}; swap points 0 and 1.
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
      std::vector<std::uint32_t> img;
      for (auto [i, j] : pairs) {
        auto f = [](int p) { return p == 0 ? 1 : p == 1 ? 0 : p; };
        const int x = f(i), y = f(j);
        const std::pair<int, int> q{std::min(x, y), std::max(x, y)};
        img.push_back(static_cast<std::uint32_t>(std::find(pairs.begin(), pairs.end(), q) - pairs.begin()));
      }
      switches.emplace_back(petersen_graph(), Permutation(img));
    }
    switches.emplace_back(strong_product_k2(gamma), lift_involution_to_product(switching_involution()));
    for (const auto& [g, s] : switches) {
      const Graph d = dual_seidel_switch(g, s);
      for (std::size_t u = 0; u < g.order(); ++u) ok = ok && d.neighbours(u) == g.neighbours(s[u]);
      const auto before = certify_deza(g);
      const auto after = certify_deza(d);
      ok = ok && after.pass && after.b == before.b && after.a == before.a && after.b != after.a;
    }
    // graph6 round trips on every named graph.
    for (const auto& name : graph_names()) {
      const Graph g = named_graph(name);
      ok = ok && from_graph6(to_graph6(g)) == g && from_edge_list(to_edge_list(g)) == g;
    }
    return Verdict{ok, ""};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
