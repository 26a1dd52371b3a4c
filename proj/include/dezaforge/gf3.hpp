#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace dezaforge {

/// Element of the prime field GF(3). Arithmetic goes through lookup tables on
/// the canonical residue; construction from an int reduces modulo 3.
class Gf3 {
public:
  constexpr Gf3() = default;
  constexpr Gf3(int value) : r_(static_cast<std::uint8_t>(((value % 3) + 3) % 3)) {}

  constexpr int residue() const { return r_; }

  friend constexpr Gf3 operator+(Gf3 a, Gf3 b) { return raw(kAdd[a.r_][b.r_]); }
  friend constexpr Gf3 operator-(Gf3 a, Gf3 b) { return raw(kAdd[a.r_][kNeg[b.r_]]); }
  friend constexpr Gf3 operator*(Gf3 a, Gf3 b) { return raw(kMul[a.r_][b.r_]); }
  constexpr Gf3 operator-() const { return raw(kNeg[r_]); }
  constexpr Gf3& operator+=(Gf3 o) { return *this = *this + o; }
  constexpr Gf3& operator-=(Gf3 o) { return *this = *this - o; }
  constexpr Gf3& operator*=(Gf3 o) { return *this = *this * o; }
  friend constexpr bool operator==(Gf3, Gf3) = default;
  friend std::ostream& operator<<(std::ostream& os, Gf3 g) { return os << static_cast<int>(g.r_); }

  /// Multiplicative inverse; 1 and 2 are self-inverse. Zero maps to zero.
  constexpr Gf3 inverse() const { return *this; }

private:
  static constexpr std::uint8_t kAdd[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  static constexpr std::uint8_t kMul[3][3] = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
  static constexpr std::uint8_t kNeg[3] = {0, 2, 1};

  static constexpr Gf3 raw(std::uint8_t r) {
    Gf3 g;
    g.r_ = r;
    return g;
  }

  std::uint8_t r_ = 0;
};

}  // namespace dezaforge

namespace Eigen {
template <>
struct NumTraits<dezaforge::Gf3> : GenericNumTraits<dezaforge::Gf3> {
  using Real = dezaforge::Gf3;
  using NonInteger = dezaforge::Gf3;
  using Literal = dezaforge::Gf3;
  using Nested = dezaforge::Gf3;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 1
  };
  static inline dezaforge::Gf3 epsilon() { return {}; }
  static inline dezaforge::Gf3 dummy_precision() { return {}; }
  static inline dezaforge::Gf3 highest() { return dezaforge::Gf3(2); }
  static inline dezaforge::Gf3 lowest() { return {}; }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace dezaforge {

/// Row vector of V(n,3). Linear maps act from the right: v -> v * M.
using Gf3Vector = Eigen::Matrix<Gf3, 1, Eigen::Dynamic>;
using Gf3Matrix = Eigen::Matrix<Gf3, Eigen::Dynamic, Eigen::Dynamic>;

/// Builds a vector from residues, rejecting anything outside {0,1,2}.
Gf3Vector make_vector(std::span<const int> coords);
Gf3Vector make_vector(std::initializer_list<int> coords);

/// Builds a rows x cols matrix from row-major residues in {0,1,2}.
Gf3Matrix make_matrix(Eigen::Index rows, Eigen::Index cols, std::span<const int> entries);
Gf3Matrix make_matrix(Eigen::Index rows, Eigen::Index cols, std::initializer_list<int> entries);

std::size_t pow3(Eigen::Index n);

// Ternary codec: index = sum coords[i] * 3^i, coordinate 0 least significant.
std::size_t vector_to_index(const Gf3Vector& v);
Gf3Vector index_to_vector(std::size_t index, Eigen::Index n);

/// Index of vector(a) + vector(b), computed digitwise.
std::size_t add_indices(std::size_t a, std::size_t b, Eigen::Index n);
std::size_t negate_index(std::size_t a, Eigen::Index n);

Gf3Vector mat_vec_mul(const Gf3Vector& v, const Gf3Matrix& m);
Gf3Matrix mat_mul(const Gf3Matrix& a, const Gf3Matrix& b);

Eigen::Index rank(Gf3Matrix m);
bool is_invertible(const Gf3Matrix& m);
/// n - rank(M - I); the linear map v -> v*M fixes exactly 3^result vectors.
Eigen::Index fixed_space_dimension(const Gf3Matrix& m);
/// Basis of {c : M c^T = 0}, returned as row vectors in reduced form.
std::vector<Gf3Vector> kernel(const Gf3Matrix& m);
/// Inverse of a square invertible matrix; throws NotAPermutation if singular.
Gf3Matrix inverse(const Gf3Matrix& m);

/// Closure of {seed} under v -> v*g for every generator, sorted by index.
std::vector<Gf3Vector> orbit(std::span<const Gf3Matrix> generators, const Gf3Vector& seed);

std::string to_string(const Gf3Vector& v);
/// Digits without separators, e.g. "10000".
std::string to_ternary_string(const Gf3Vector& v);

/// Candidate connection set in V(n,3), stored as sorted distinct codec
/// indices. Construction does not validate; cayley() does.
class ConnectionSet {
public:
  ConnectionSet(Eigen::Index dimension, std::span<const Gf3Vector> vectors);

  Eigen::Index dimension() const { return dimension_; }
  std::size_t size() const { return indices_.size(); }
  const std::vector<std::size_t>& indices() const { return indices_; }
  std::vector<Gf3Vector> vectors() const;

  bool contains(std::size_t index) const;
  bool contains(const Gf3Vector& v) const;
  bool is_inverse_closed() const;
  bool is_identity_free() const;
  /// Throws InvalidConnectionSet naming the first violated invariant.
  void validate() const;

  /// {s * m : s in S}.
  ConnectionSet image(const Gf3Matrix& m) const;

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;

private:
  Eigen::Index dimension_;
  std::vector<std::size_t> indices_;
};

// Constants of the M11 presentation on V(5,3) (ATLAS 5-dimensional GF(3)
// representation) and the 22-element orbit used as the connection set.
Gf3Matrix m11_x();
Gf3Matrix m11_y();
/// The 11 orbit representatives, each standing for the pair {s, -s}.
std::vector<Gf3Vector> s1_representatives();
ConnectionSet connection_set_s1();

}  // namespace dezaforge
