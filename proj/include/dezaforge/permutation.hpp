#pragma once

#include <cstddef>
#include <concepts>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "dezaforge/gf3.hpp"

namespace dezaforge {

using GroupOrder = boost::multiprecision::cpp_int;

/// Bijection of {0, ..., degree-1}; images()[i] is the image of point i.
class Permutation {
public:
  Permutation() = default;
  /// Throws NotAPermutation unless images is a bijection of [0, size).
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  std::size_t fixed_point_count() const;
  /// Smallest point with p != image(p), or degree() if none.
  std::size_t first_moved_point() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

private:
  std::vector<std::uint32_t> images_;
};

/// Apply sigma first, then tau: compose(s, t)(i) = t(s(i)).
Permutation compose(const Permutation& sigma, const Permutation& tau);
Permutation inverse(const Permutation& sigma);
/// True iff sigma is not the identity and sigma^2 is.
bool is_involution(const Permutation& sigma);
bool squares_to_identity(const Permutation& sigma);

/// Vertex permutation of V(n,3) realising v -> v*M under the ternary codec.
Permutation perm_from_matrix(const Gf3Matrix& m);
/// v -> v + t on V(n,3).
Permutation translation_perm(const Gf3Vector& t);

/// Stabilizer chain built by deterministic Schreier-Sims. Base points come
/// from the optional prefix first, then greedily from the first point moved
/// by each generator that needs a new level.
class StabilizerChain {
public:
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                  std::span<const std::uint32_t> base_prefix = {});

  std::size_t degree() const { return degree_; }
  std::vector<std::uint32_t> base() const;
  /// Orbit of the i-th base point under the pointwise stabilizer of the
  /// earlier base points.
  const std::vector<std::uint32_t>& basic_orbit(std::size_t level) const { return levels_[level].orbit; }
  std::size_t levels() const { return levels_.size(); }
  GroupOrder order() const;
  bool contains(const Permutation& g) const;
  const std::vector<Permutation>& strong_generators() const { return strong_; }

private:
  struct Level {
    std::uint32_t base;
    std::vector<std::size_t> gens;  // indices into strong_
    std::vector<std::uint32_t> orbit;
    std::vector<std::int32_t> transversal;  // point -> index into reps, -1 if outside orbit
    std::vector<Permutation> reps;          // reps[k] maps base to orbit[k]
  };

  void add_level(std::uint32_t base);
  void rebuild_orbit(std::size_t level);
  /// Sift g through levels [0, ..); returns residue and the level it stopped at.
  std::pair<Permutation, std::size_t> sift(Permutation g) const;
  void build(std::span<const Permutation> generators, std::span<const std::uint32_t> base_prefix);

  std::size_t degree_;
  std::vector<Level> levels_;
  std::vector<Permutation> strong_;
};

/// Exact order of the group generated by the permutations. Empty input -> 1.
GroupOrder group_order(std::span<const Permutation> generators);

/// Array of images.
nlohmann::json to_json(const Permutation& p);
/// Machine integer when it fits in 64 bits, decimal string otherwise.
nlohmann::json group_order_json(const GroupOrder& x);
/// Exact-type overload so that unrelated arguments never convert to cpp_int.
template <std::same_as<GroupOrder> T>
nlohmann::json to_json(const T& x) {
  return group_order_json(x);
}

}  // namespace dezaforge
