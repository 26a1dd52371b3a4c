#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "dezaforge/gf3.hpp"
#include "dezaforge/permutation.hpp"

namespace dezaforge {

/// Undirected loop-free graph on vertices 0..v-1 with a dense bit-packed
/// adjacency matrix. Row u occupies words() consecutive 64-bit words.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t vertices, std::string label = {});

  std::size_t order() const { return v_; }
  std::size_t words() const { return words_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  bool adjacent(std::size_t u, std::size_t w) const {
    return (bits_[u * words_ + (w >> 6)] >> (w & 63)) & 1u;
  }
  /// Adds the undirected edge {u, w}; throws PreconditionError on loops.
  void add_edge(std::size_t u, std::size_t w);

  std::span<const std::uint64_t> row(std::size_t u) const {
    return {bits_.data() + u * words_, words_};
  }

  std::size_t degree(std::size_t u) const;
  std::vector<std::size_t> neighbours(std::size_t u) const;
  std::size_t edge_count() const;
  /// The common degree if every vertex has it.
  std::optional<std::size_t> regular_degree() const;

  /// |N(u) n N(w)| by row intersection popcount; no range checks.
  std::size_t common_neighbour_count(std::size_t u, std::size_t w) const {
    std::size_t c = 0;
    const auto* a = bits_.data() + u * words_;
    const auto* b = bits_.data() + w * words_;
    for (std::size_t i = 0; i < words_; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
  }

  bool is_symmetric() const;
  bool is_loop_free() const;

  template <class Scalar>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency_matrix() const {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a(v_, v_);
    for (std::size_t u = 0; u < v_; ++u)
      for (std::size_t w = 0; w < v_; ++w)
        a(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(w)) = adjacent(u, w) ? Scalar(1) : Scalar(0);
    return a;
  }

  /// Equality of vertex count and adjacency; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.v_ == b.v_ && a.bits_ == b.bits_; }

private:
  std::size_t v_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::string label_;
};

Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Kneser graph K(5,2): 2-subsets of {0..4}, adjacent iff disjoint. Vertices
/// are the pairs in lexicographic order.
Graph petersen_graph();

/// Cay(V(n,3), S): i ~ j iff vector(i) - vector(j) is in S.
Graph cayley(Eigen::Index n, const ConnectionSet& s);
Graph complement(const Graph& g);
/// G[K2]: vertex 2u+c is copy c of u; (u,i) ~ (w,j) iff u = w, i != j, or u ~ w.
Graph strong_product_k2(const Graph& g);

bool is_automorphism(const Graph& g, const Permutation& sigma);
/// A pair {u, w} whose adjacency is not preserved by sigma, if any.
std::optional<std::pair<std::size_t, std::size_t>> automorphism_violation(const Graph& g, const Permutation& sigma);
/// sigma maps a onto b: u ~a w iff sigma(u) ~b sigma(w).
bool is_isomorphism(const Graph& a, const Graph& b, const Permutation& sigma);

struct InvolutionPairs {
  std::size_t fixed = 0;
  std::size_t adjacent_swaps = 0;
  std::size_t nonadjacent_swaps = 0;
};

/// Sorts the 2-cycles of an involutive automorphism by whether they join
/// adjacent vertices. Throws PreconditionError otherwise.
InvolutionPairs classify_involution_pairs(const Graph& g, const Permutation& sigma);

/// Dual Seidel switching: the graph whose adjacency matrix is P*M, where P
/// is the permutation matrix of sigma. Requires G to be strongly regular with
/// k != mu and lambda != mu (or more generally a Deza graph), and sigma to be
/// a non-trivial involutive automorphism swapping only non-adjacent pairs.
/// Throws SwitchingInapplicable naming the failed condition.
Graph dual_seidel_switch(const Graph& g, const Permutation& sigma);

/// (u, i) -> (sigma(u), i) on the 2v vertices of G[K2].
Permutation lift_involution_to_product(const Permutation& sigma);

}  // namespace dezaforge
