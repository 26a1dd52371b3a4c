#include "dezaforge/gf3.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "dezaforge/error.hpp"

namespace dezaforge {

namespace {

int checked_residue(int value) {
  if (value < 0 || value > 2)
    throw InvalidElement("GF(3) residue out of range: " + std::to_string(value));
  return value;
}

// Row echelon form in place; returns pivot columns.
std::vector<Eigen::Index> row_reduce(Gf3Matrix& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col) == Gf3(0)) ++p;
    if (p == m.rows()) continue;
    m.row(p).swap(m.row(row));
    const Gf3 scale = m(row, col).inverse();
    m.row(row) *= scale;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Gf3(0)) continue;
      const Gf3 f = m(r, col);
      m.row(r) -= f * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Gf3Vector make_vector(std::span<const int> coords) {
  Gf3Vector v(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = Gf3(checked_residue(coords[i]));
  return v;
}

Gf3Vector make_vector(std::initializer_list<int> coords) {
  return make_vector(std::span<const int>(coords.begin(), coords.size()));
}

Gf3Matrix make_matrix(Eigen::Index rows, Eigen::Index cols, std::span<const int> entries) {
  if (static_cast<std::size_t>(rows * cols) != entries.size())
    throw ShapeError("matrix literal has " + std::to_string(entries.size()) + " entries, expected " +
                     std::to_string(rows * cols));
  Gf3Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = Gf3(checked_residue(entries[static_cast<std::size_t>(r * cols + c)]));
  return m;
}

Gf3Matrix make_matrix(Eigen::Index rows, Eigen::Index cols, std::initializer_list<int> entries) {
  return make_matrix(rows, cols, std::span<const int>(entries.begin(), entries.size()));
}

std::size_t pow3(Eigen::Index n) {
  std::size_t p = 1;
  for (Eigen::Index i = 0; i < n; ++i) p *= 3;
  return p;
}

std::size_t vector_to_index(const Gf3Vector& v) {
  std::size_t index = 0;
  for (Eigen::Index i = v.size(); i-- > 0;) index = index * 3 + static_cast<std::size_t>(v(i).residue());
  return index;
}

Gf3Vector index_to_vector(std::size_t index, Eigen::Index n) {
  if (index >= pow3(n))
    throw InvalidElement("index " + std::to_string(index) + " outside V(" + std::to_string(n) + ",3)");
  Gf3Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v(i) = Gf3(static_cast<int>(index % 3));
    index /= 3;
  }
  return v;
}

std::size_t add_indices(std::size_t a, std::size_t b, Eigen::Index n) {
  std::size_t out = 0;
  std::size_t place = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    out += ((a % 3 + b % 3) % 3) * place;
    a /= 3;
    b /= 3;
    place *= 3;
  }
  return out;
}

std::size_t negate_index(std::size_t a, Eigen::Index n) {
  std::size_t out = 0;
  std::size_t place = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    out += ((3 - a % 3) % 3) * place;
    a /= 3;
    place *= 3;
  }
  return out;
}

Gf3Vector mat_vec_mul(const Gf3Vector& v, const Gf3Matrix& m) {
  if (v.size() != m.rows())
    throw ShapeError("vector of length " + std::to_string(v.size()) + " times " + std::to_string(m.rows()) +
                     "x" + std::to_string(m.cols()) + " matrix");
  return v * m;
}

Gf3Matrix mat_mul(const Gf3Matrix& a, const Gf3Matrix& b) {
  if (a.cols() != b.rows())
    throw ShapeError("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  return a * b;
}

Eigen::Index rank(Gf3Matrix m) { return static_cast<Eigen::Index>(row_reduce(m).size()); }

bool is_invertible(const Gf3Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Eigen::Index fixed_space_dimension(const Gf3Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("fixed space of a non-square matrix");
  return m.rows() - rank(m - Gf3Matrix::Identity(m.rows(), m.cols()));
}

std::vector<Gf3Vector> kernel(const Gf3Matrix& m) {
  Gf3Matrix r = m;
  const auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<Gf3Vector> basis;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Gf3Vector c = Gf3Vector::Zero(m.cols());
    c(free) = Gf3(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) c(pivots[i]) = -r(static_cast<Eigen::Index>(i), free);
    basis.push_back(std::move(c));
  }
  return basis;
}

Gf3Matrix inverse(const Gf3Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  Gf3Matrix aug(n, 2 * n);
  aug << m, Gf3Matrix::Identity(n, n);
  const auto pivots = row_reduce(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots[static_cast<std::size_t>(n - 1)] >= n)
    throw NotAPermutation("matrix is singular over GF(3)");
  return aug.rightCols(n);
}

std::vector<Gf3Vector> orbit(std::span<const Gf3Matrix> generators, const Gf3Vector& seed) {
  const Eigen::Index n = seed.size();
  for (const auto& g : generators)
    if (g.rows() != n || g.cols() != n) throw ShapeError("orbit generator does not act on V(n,3)");

  std::set<std::size_t> seen{vector_to_index(seed)};
  std::deque<Gf3Vector> queue{seed};
  while (!queue.empty()) {
    const Gf3Vector v = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Gf3Vector w = v * g;
      if (seen.insert(vector_to_index(w)).second) queue.push_back(std::move(w));
    }
  }
  std::vector<Gf3Vector> out;
  out.reserve(seen.size());
  for (auto idx : seen) out.push_back(index_to_vector(idx, n));
  return out;
}

std::string to_string(const Gf3Vector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += static_cast<char>('0' + v(i).residue());
  }
  return s + ")";
}

std::string to_ternary_string(const Gf3Vector& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += static_cast<char>('0' + v(i).residue());
  return s;
}

ConnectionSet::ConnectionSet(Eigen::Index dimension, std::span<const Gf3Vector> vectors)
    : dimension_(dimension) {
  indices_.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != dimension) throw ShapeError("connection set vector has wrong dimension");
    indices_.push_back(vector_to_index(v));
  }
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

std::vector<Gf3Vector> ConnectionSet::vectors() const {
  std::vector<Gf3Vector> out;
  out.reserve(indices_.size());
  for (auto i : indices_) out.push_back(index_to_vector(i, dimension_));
  return out;
}

bool ConnectionSet::contains(std::size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

bool ConnectionSet::contains(const Gf3Vector& v) const {
  return v.size() == dimension_ && contains(vector_to_index(v));
}

bool ConnectionSet::is_inverse_closed() const {
  return std::all_of(indices_.begin(), indices_.end(),
                     [&](std::size_t i) { return contains(negate_index(i, dimension_)); });
}

bool ConnectionSet::is_identity_free() const { return !contains(std::size_t{0}); }

void ConnectionSet::validate() const {
  if (!is_identity_free()) throw InvalidConnectionSet("connection set contains the zero vector");
  for (auto i : indices_)
    if (!contains(negate_index(i, dimension_)))
      throw InvalidConnectionSet("connection set is not inverse-closed: missing the negative of " +
                                 to_string(index_to_vector(i, dimension_)));
}

ConnectionSet ConnectionSet::image(const Gf3Matrix& m) const {
  std::vector<Gf3Vector> out;
  for (const auto& v : vectors()) out.push_back(mat_vec_mul(v, m));
  return ConnectionSet(m.cols(), out);
}

// Matrices x, y generating M11 and the printed 22-orbit, transcribed from the
// ATLAS 5-dimensional representation over GF(3).
Gf3Matrix m11_x() {
  return make_matrix(5, 5, {0, 2, 1, 0, 0,  //
                            2, 1, 1, 2, 2,  //
                            0, 1, 1, 2, 2,  //
                            1, 0, 2, 2, 1,  //
                            1, 2, 2, 2, 0});
}

Gf3Matrix m11_y() {
  return make_matrix(5, 5, {0, 0, 2, 0, 2,  //
                            1, 1, 2, 2, 0,  //
                            2, 2, 2, 2, 2,  //
                            1, 2, 1, 1, 0,  //
                            2, 2, 0, 2, 1});
}

std::vector<Gf3Vector> s1_representatives() {
  return {make_vector({1, 0, 0, 0, 0}), make_vector({0, 0, 1, 0, 1}), make_vector({0, 1, 0, 1, 0}),
          make_vector({0, 1, 2, 0, 0}), make_vector({0, 0, 1, 2, 1}), make_vector({0, 1, 0, 1, 2}),
          make_vector({1, 1, 2, 0, 2}), make_vector({1, 0, 0, 1, 2}), make_vector({1, 0, 2, 1, 0}),
          make_vector({1, 1, 0, 0, 2}), make_vector({1, 1, 2, 1, 0})};
}

ConnectionSet connection_set_s1() {
  std::vector<Gf3Vector> all;
  for (const auto& v : s1_representatives()) {
    all.push_back(v);
    all.push_back(-v);
  }
  return ConnectionSet(5, all);
}

}  // namespace dezaforge
