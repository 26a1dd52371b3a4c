#include "dezaforge/graph.hpp"

#include <algorithm>
#include <set>

#include "dezaforge/error.hpp"

namespace dezaforge {

Graph::Graph(std::size_t vertices, std::string label)
    : v_(vertices), words_((vertices + 63) / 64), bits_(v_ * words_, 0), label_(std::move(label)) {}

void Graph::add_edge(std::size_t u, std::size_t w) {
  if (u >= v_ || w >= v_) throw InvalidElement("edge endpoint outside the vertex range");
  if (u == w) throw PreconditionError("loops are not allowed (vertex " + std::to_string(u) + ")");
  bits_[u * words_ + (w >> 6)] |= std::uint64_t{1} << (w & 63);
  bits_[w * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

std::size_t Graph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (auto word : row(u)) d += static_cast<std::size_t>(std::popcount(word));
  return d;
}

std::vector<std::size_t> Graph::neighbours(std::size_t u) const {
  std::vector<std::size_t> out;
  const auto r = row(u);
  for (std::size_t i = 0; i < words_; ++i)
    for (auto word = r[i]; word; word &= word - 1) out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(word)));
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (std::size_t u = 0; u < v_; ++u) twice += degree(u);
  return twice / 2;
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (v_ == 0) return 0;
  const auto k = degree(0);
  for (std::size_t u = 1; u < v_; ++u)
    if (degree(u) != k) return std::nullopt;
  return k;
}

bool Graph::is_symmetric() const {
  for (std::size_t u = 0; u < v_; ++u)
    for (std::size_t w = u + 1; w < v_; ++w)
      if (adjacent(u, w) != adjacent(w, u)) return false;
  return true;
}

bool Graph::is_loop_free() const {
  for (std::size_t u = 0; u < v_; ++u)
    if (adjacent(u, u)) return false;
  return true;
}

Graph cycle_graph(std::size_t n) {
  Graph g(n, "C" + std::to_string(n));
  for (std::size_t i = 0; i < n && n > 2; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n, "P" + std::to_string(n));
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n, "K" + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  Graph g(pairs.size(), "petersen");
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const auto [a, b] = pairs[i];
      const auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
    }
  return g;
}

Graph cayley(Eigen::Index n, const ConnectionSet& s) {
  if (s.dimension() != n)
    throw InvalidConnectionSet("connection set lives in V(" + std::to_string(s.dimension()) + ",3), not V(" +
                               std::to_string(n) + ",3)");
  s.validate();
  const std::size_t v = pow3(n);
  Graph g(v, "Cay(V(" + std::to_string(n) + ",3),S)");
  for (std::size_t i = 0; i < v; ++i)
    for (auto si : s.indices()) {
      const auto j = add_indices(i, si, n);
      if (i < j) g.add_edge(i, j);
    }
  return g;
}

Graph complement(const Graph& g) {
  Graph c(g.order(), g.label().empty() ? std::string{} : "complement(" + g.label() + ")");
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t w = u + 1; w < g.order(); ++w)
      if (!g.adjacent(u, w)) c.add_edge(u, w);
  return c;
}

Graph strong_product_k2(const Graph& g) {
  const std::size_t v = g.order();
  Graph p(2 * v, g.label().empty() ? std::string{} : g.label() + "[K2]");
  for (std::size_t u = 0; u < v; ++u) {
    p.add_edge(2 * u, 2 * u + 1);
    for (auto w : g.neighbours(u)) {
      if (w < u) continue;
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) p.add_edge(2 * u + i, 2 * w + j);
    }
  }
  return p;
}

std::optional<std::pair<std::size_t, std::size_t>> automorphism_violation(const Graph& g, const Permutation& sigma) {
  if (sigma.degree() != g.order())
    throw ShapeError("permutation of degree " + std::to_string(sigma.degree()) + " on a graph with " +
                     std::to_string(g.order()) + " vertices");
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t w = u + 1; w < g.order(); ++w)
      if (g.adjacent(u, w) != g.adjacent(sigma[u], sigma[w])) return std::pair{u, w};
  return std::nullopt;
}

bool is_automorphism(const Graph& g, const Permutation& sigma) { return !automorphism_violation(g, sigma); }

bool is_isomorphism(const Graph& a, const Graph& b, const Permutation& sigma) {
  if (a.order() != b.order() || sigma.degree() != a.order()) return false;
  for (std::size_t u = 0; u < a.order(); ++u)
    for (std::size_t w = u + 1; w < a.order(); ++w)
      if (a.adjacent(u, w) != b.adjacent(sigma[u], sigma[w])) return false;
  return true;
}

InvolutionPairs classify_involution_pairs(const Graph& g, const Permutation& sigma) {
  if (sigma.degree() != g.order()) throw ShapeError("involution degree differs from the vertex count");
  if (!is_involution(sigma)) throw PreconditionError("permutation is not an involution");
  if (auto bad = automorphism_violation(g, sigma))
    throw PreconditionError("involution is not an automorphism: pair (" + std::to_string(bad->first) + ", " +
                            std::to_string(bad->second) + ") is not preserved");
  InvolutionPairs out;
  for (std::size_t u = 0; u < g.order(); ++u) {
    const std::size_t w = sigma[u];
    if (w == u)
      ++out.fixed;
    else if (u < w)
      ++(g.adjacent(u, w) ? out.adjacent_swaps : out.nonadjacent_swaps);
  }
  return out;
}

namespace {

void check_switching_hypotheses(const Graph& g, const Permutation& sigma) {
  const auto k = g.regular_degree();
  if (!k) throw SwitchingInapplicable("graph is not regular");

  std::set<std::size_t> on_edges, off_edges;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t w = u + 1; w < g.order(); ++w)
      (g.adjacent(u, w) ? on_edges : off_edges).insert(g.common_neighbour_count(u, w));

  const bool srg = on_edges.size() <= 1 && off_edges.size() == 1 && *k > 0 && *k + 1 < g.order();
  if (srg) {
    const std::size_t mu = *off_edges.begin();
    if (*k == mu) throw SwitchingInapplicable("strongly regular graph has k = mu");
    if (!on_edges.empty() && *on_edges.begin() == mu) throw SwitchingInapplicable("strongly regular graph has lambda = mu");
  } else {
    std::set<std::size_t> all = on_edges;
    all.insert(off_edges.begin(), off_edges.end());
    if (all.size() > 2)
      throw SwitchingInapplicable("graph is neither strongly regular nor Deza (" + std::to_string(all.size()) +
                                  " common-neighbour values)");
  }

  if (sigma.degree() != g.order()) throw SwitchingInapplicable("involution degree differs from the vertex count");
  if (!is_involution(sigma)) throw SwitchingInapplicable("permutation is not a non-identity involution");
  if (auto bad = automorphism_violation(g, sigma))
    throw SwitchingInapplicable("involution is not an automorphism: pair (" + std::to_string(bad->first) + ", " +
                                std::to_string(bad->second) + ") is not preserved");
  for (std::size_t u = 0; u < g.order(); ++u)
    if (sigma[u] != u && g.adjacent(u, sigma[u]))
      throw SwitchingInapplicable("involution swaps adjacent vertices " + std::to_string(u) + " and " +
                                  std::to_string(sigma[u]));
}

}  // namespace

Graph dual_seidel_switch(const Graph& g, const Permutation& sigma) {
  check_switching_hypotheses(g, sigma);
  const std::size_t v = g.order();
  const std::string label = g.label().empty() ? std::string{} : "switch(" + g.label() + ")";

  // Row u of P*M is row sigma(u) of M.
  Graph by_rows(v, label);
  for (std::size_t u = 0; u < v; ++u)
    for (std::size_t w = 0; w < v; ++w)
      if (g.adjacent(sigma[u], w) && u < w) by_rows.add_edge(u, w);

  // Neighbourhoods: Gamma(u) for fixed u, Gamma(sigma(u)) for moved u.
  Graph by_neighbourhoods(v, label);
  for (std::size_t u = 0; u < v; ++u) {
    const std::size_t source = sigma[u] == u ? u : sigma[u];
    for (auto w : g.neighbours(source))
      if (u < w) by_neighbourhoods.add_edge(u, w);
  }

  // add_edge symmetrises, so also confirm that the raw row permutation was
  // already symmetric and loop-free.
  for (std::size_t u = 0; u < v; ++u) {
    if (g.adjacent(sigma[u], u)) throw Error("switched matrix has a loop at vertex " + std::to_string(u));
    for (std::size_t w = u + 1; w < v; ++w)
      if (g.adjacent(sigma[u], w) != g.adjacent(sigma[w], u))
        throw Error("switched matrix is not symmetric at (" + std::to_string(u) + ", " + std::to_string(w) + ")");
  }
  if (!(by_rows == by_neighbourhoods)) throw Error("row-permutation and neighbourhood forms of the switch disagree");
  return by_rows;
}

Permutation lift_involution_to_product(const Permutation& sigma) {
  if (!squares_to_identity(sigma)) throw PreconditionError("only involutions (or the identity) are lifted");
  std::vector<std::uint32_t> images(2 * sigma.degree());
  for (std::size_t u = 0; u < sigma.degree(); ++u)
    for (std::uint32_t c = 0; c < 2; ++c) images[2 * u + c] = 2 * sigma[u] + c;
  return Permutation(std::move(images));
}

}  // namespace dezaforge
