#pragma once

// Independent reference computations used as test oracles. Each one is
// deliberately naive and shares no code path with the library routine it
// checks, beyond the Graph container and the GF(3) scalar.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "dezaforge/gf3.hpp"
#include "dezaforge/graph.hpp"
#include "dezaforge/permutation.hpp"

namespace oracle {

using dezaforge::Gf3;
using dezaforge::Gf3Matrix;
using dezaforge::Gf3Vector;
using dezaforge::Graph;

inline Eigen::MatrixXi adjacency(const Graph& g) {
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(static_cast<int>(g.order()), static_cast<int>(g.order()));
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t w = 0; w < g.order(); ++w)
      if (g.adjacent(u, w)) a(static_cast<int>(u), static_cast<int>(w)) = 1;
  return a;
}

inline int common(const Graph& g, std::size_t u, std::size_t w) {
  int c = 0;
  for (std::size_t z = 0; z < g.order(); ++z) c += g.adjacent(u, z) && g.adjacent(w, z);
  return c;
}

/// Distinct common-neighbour counts over adjacent / non-adjacent pairs.
struct PairCounts {
  std::set<int> adjacent, nonadjacent, all;
};

inline PairCounts pair_counts(const Graph& g) {
  PairCounts p;
  const Eigen::MatrixXi a = adjacency(g);
  const Eigen::MatrixXi a2 = a * a;
  for (int u = 0; u < a.rows(); ++u)
    for (int w = 0; w < a.rows(); ++w) {
      if (u == w) continue;
      (a(u, w) ? p.adjacent : p.nonadjacent).insert(a2(u, w));
      p.all.insert(a2(u, w));
    }
  return p;
}

inline std::size_t triangles(const Graph& g) {
  std::size_t t = 0;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = a + 1; b < g.order(); ++b)
      if (g.adjacent(a, b))
        for (std::size_t c = b + 1; c < g.order(); ++c) t += g.adjacent(a, c) && g.adjacent(b, c);
  return t;
}

/// Number of vertex permutations preserving adjacency, by enumeration.
inline std::size_t brute_force_aut_order(const Graph& g) {
  std::vector<std::size_t> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t w = u + 1; w < g.order(); ++w)
      if (g.adjacent(u, w)) edges.emplace_back(u, w);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (const auto& [u, w] : edges)
      if (!g.adjacent(p[u], p[w])) {
        ok = false;
        break;
      }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// Integer eigenvalue multiset from a floating-point symmetric solver.
inline std::map<long, std::size_t> rounded_spectrum(const Graph& g) {
  const Eigen::MatrixXd a = adjacency(g).cast<double>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  std::map<long, std::size_t> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) ++out[std::lround(es.eigenvalues()(i))];
  return out;
}

inline double max_rounding_error(const Graph& g) {
  const Eigen::MatrixXd a = adjacency(g).cast<double>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  double worst = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    worst = std::max(worst, std::abs(es.eigenvalues()(i) - std::round(es.eigenvalues()(i))));
  return worst;
}

/// All elements of the matrix group generated by gens, by closure.
inline std::vector<Gf3Matrix> matrix_group(const std::vector<Gf3Matrix>& gens) {
  auto key = [](const Gf3Matrix& m) {
    std::vector<int> k;
    for (Eigen::Index i = 0; i < m.size(); ++i) k.push_back(m(i).residue());
    return k;
  };
  const Eigen::Index n = gens.front().rows();
  std::vector<Gf3Matrix> elems{Gf3Matrix::Identity(n, n)};
  std::set<std::vector<int>> seen{key(elems[0])};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      Gf3Matrix h = elems[i] * g;
      if (seen.insert(key(h)).second) elems.push_back(h);
    }
  return elems;
}

/// Vector of V(n,3) from its base-3 digits, least significant first.
inline Gf3Vector digits(std::size_t index, int n) {
  Gf3Vector v(n);
  for (int i = 0; i < n; ++i) {
    v(i) = Gf3(static_cast<int>(index % 3));
    index /= 3;
  }
  return v;
}

inline std::size_t undigits(const Gf3Vector& v) {
  std::size_t idx = 0;
  for (Eigen::Index i = v.size(); i-- > 0;) idx = idx * 3 + static_cast<std::size_t>(v(i).residue());
  return idx;
}

/// Cayley graph on V(n,3) built straight from the definition.
inline Graph cayley_reference(int n, const std::vector<Gf3Vector>& s) {
  std::size_t v = 1;
  for (int i = 0; i < n; ++i) v *= 3;
  Graph g(v);
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b) {
      const Gf3Vector d = digits(b, n) - digits(a, n);
      for (const auto& x : s)
        if (d == x) {
          g.add_edge(a, b);
          break;
        }
    }
  return g;
}

}  // namespace oracle
