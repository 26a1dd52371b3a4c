#include "dezaforge/golay.hpp"

#include <algorithm>
#include <set>

#include "dezaforge/error.hpp"

namespace dezaforge {

Gf3Matrix parity_check_H() {
  return make_matrix(5, 11, {1, 1, 1, 2, 2, 0, 1, 0, 0, 0, 0,  //
                             1, 1, 2, 1, 0, 2, 0, 1, 0, 0, 0,  //
                             1, 2, 1, 0, 1, 2, 0, 0, 1, 0, 0,  //
                             1, 2, 0, 1, 2, 1, 0, 0, 0, 1, 0,  //
                             1, 0, 2, 2, 1, 1, 0, 0, 0, 0, 1});
}

LinearCode code_from_parity_check(const Gf3Matrix& h) {
  LinearCode code;
  code.length = h.cols();
  code.parity_check = h;
  const Eigen::Index r = rank(h);
  code.rank_deficient = r < h.rows();
  code.dimension = h.cols() - r;

  const auto basis = kernel(h);
  if (static_cast<Eigen::Index>(basis.size()) != code.dimension)
    throw Error("kernel basis has " + std::to_string(basis.size()) + " vectors, expected " +
                std::to_string(code.dimension));
  const std::size_t count = pow3(code.dimension);
  code.codewords.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Gf3Vector coeffs = index_to_vector(i, code.dimension);
    Gf3Vector word = Gf3Vector::Zero(h.cols());
    for (std::size_t j = 0; j < basis.size(); ++j) word += coeffs(static_cast<Eigen::Index>(j)) * basis[j];
    code.codewords.push_back(word);
  }
  std::sort(code.codewords.begin(), code.codewords.end(),
            [](const Gf3Vector& a, const Gf3Vector& b) { return vector_to_index(a) < vector_to_index(b); });
  return code;
}

std::size_t hamming_weight(const Gf3Vector& v) {
  std::size_t w = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) w += v(i) != Gf3(0);
  return w;
}

std::size_t minimum_distance(const LinearCode& code) {
  std::size_t best = 0;
  for (const auto& c : code.codewords) {
    const auto w = hamming_weight(c);
    if (w > 0 && (best == 0 || w < best)) best = w;
  }
  return best;
}

namespace {

std::vector<Gf3Vector> signed_columns(const Gf3Matrix& h) {
  std::vector<Gf3Vector> out;
  for (Eigen::Index c = 0; c < h.cols(); ++c) {
    const Gf3Vector col = h.col(c).transpose();
    out.push_back(col);
    out.push_back(-col);
  }
  return out;
}

}  // namespace

ConnectionSet connection_set_s2(const Gf3Matrix& h) {
  const auto cols = signed_columns(h);
  std::set<std::size_t> seen;
  for (const auto& v : cols)
    if (!seen.insert(vector_to_index(v)).second)
      throw InvalidConnectionSet("signed column " + to_string(v) + " occurs twice");
  ConnectionSet s(h.rows(), cols);
  s.validate();
  return s;
}

bool pair_sums_cover(const Gf3Matrix& h, const ConnectionSet& s) {
  std::set<std::size_t> sums;
  std::size_t produced = 0;
  for (Eigen::Index i = 0; i < h.cols(); ++i)
    for (Eigen::Index j = i + 1; j < h.cols(); ++j)
      for (int a : {1, 2})
        for (int b : {1, 2}) {
          const Gf3Vector v = Gf3(a) * h.col(i).transpose() + Gf3(b) * h.col(j).transpose();
          const auto idx = vector_to_index(v);
          if (idx == 0) return false;
          sums.insert(idx);
          ++produced;
        }
  if (sums.size() != produced) return false;
  std::set<std::size_t> all(sums);
  for (auto idx : s.indices()) all.insert(idx);
  return all.size() == pow3(h.rows()) - 1 && sums.size() + s.size() == all.size();
}

Graph coset_graph(const LinearCode& code) {
  const Gf3Matrix& h = code.parity_check;
  const Eigen::Index n = h.cols();
  const Eigen::Index r = h.rows();
  const std::size_t cosets = pow3(r);

  // Syndrome of every word, then the syndromes of weight-one words.
  const std::size_t words = pow3(n);
  std::vector<bool> seen(cosets, false);
  for (std::size_t i = 0; i < words; ++i) seen[vector_to_index(index_to_vector(i, n) * h.transpose())] = true;
  if (std::count(seen.begin(), seen.end(), true) != static_cast<std::ptrdiff_t>(cosets))
    throw PreconditionError("syndrome map is not onto V(" + std::to_string(r) + ",3)");

  std::vector<std::size_t> unit_syndromes;
  for (std::size_t i = 0; i < words; ++i) {
    const Gf3Vector w = index_to_vector(i, n);
    if (hamming_weight(w) == 1) unit_syndromes.push_back(vector_to_index(w * h.transpose()));
  }

  Graph g(cosets, "coset-graph");
  for (std::size_t u = 0; u < cosets; ++u)
    for (auto d : unit_syndromes) {
      const auto w = add_indices(u, d, r);
      if (w != u && !g.adjacent(u, w)) g.add_edge(u, w);
    }

  if (!(g == cayley(r, connection_set_s2(h))))
    throw Error("coset graph differs from the Cayley graph on the signed columns");
  return g;
}

Permutation reversal_perm() {
  const std::size_t v = pow3(5);
  std::vector<std::uint32_t> images(v);
  for (std::size_t i = 0; i < v; ++i) {
    const Gf3Vector x = index_to_vector(i, 5);
    images[i] = static_cast<std::uint32_t>(vector_to_index(x.reverse()));
  }
  return Permutation(std::move(images));
}

bool has_antisymmetric_vector(const ConnectionSet& s) {
  for (const auto& v : s.vectors()) {
    if (v.size() != 5) continue;
    if (v(2) == Gf3(0) && v(3) == -v(1) && v(4) == -v(0)) return true;
  }
  return false;
}

std::string export_codewords(const LinearCode& code) {
  std::string out;
  for (const auto& c : code.codewords) out += to_ternary_string(c) + "\n";
  return out;
}

}  // namespace dezaforge
