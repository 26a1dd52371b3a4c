#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dezaforge/error.hpp"
#include "dezaforge/gf3.hpp"
#include "dezaforge/graph.hpp"
#include "dezaforge/permutation.hpp"

namespace dezaforge {

/// Coarsest equitable refinement of `colouring` with respect to adjacency.
/// Colours in the result are cell indices of the ordered partition, so the
/// numbering depends only on the input colours and the graph structure.
std::vector<std::uint32_t> refine(const Graph& g, std::span<const std::uint32_t> colouring);

/// Per-vertex counts of partners of each pair type (adjacency, number of
/// common neighbours), compressed to colours in sorted order of the counts.
std::vector<std::uint32_t> pair_invariant_colouring(const Graph& g);

struct AutOptions {
  std::size_t max_vertices = 1024;
  std::size_t node_budget = 2'000'000;
  /// Known automorphisms used for pruning; each is checked first.
  std::vector<Permutation> seeds;
};

struct AutResult {
  std::vector<Permutation> generators;  // sorted by image arrays
  GroupOrder order = 1;
  std::size_t orbit_count = 0;
  std::size_t nodes_searched = 0;
  std::vector<std::uint32_t> base;
  std::vector<std::size_t> basic_orbit_sizes;
};

/// The search ran out of nodes; carries what it had proved so far.
class AutSearchExhausted : public Error {
public:
  AutSearchExhausted(std::vector<Permutation> generators, GroupOrder lower_bound, std::size_t nodes);

  const std::vector<Permutation>& generators() const { return generators_; }
  const GroupOrder& lower_bound() const { return lower_bound_; }
  std::size_t nodes_searched() const { return nodes_; }

private:
  std::vector<Permutation> generators_;
  GroupOrder lower_bound_;
  std::size_t nodes_;
};

/// Generators and exact order of Aut(G) by individualization-refinement.
/// Refinement runs on the pair-type relations, seeded with
/// pair_invariant_colouring(); every generator is rechecked with
/// is_automorphism before it is kept.
AutResult automorphism_group(const Graph& g, const AutOptions& options = {});

class NotAnAutomorphism : public Error {
public:
  NotAnAutomorphism(std::size_t generator, std::pair<std::size_t, std::size_t> pair);

  std::size_t generator() const { return generator_; }
  std::pair<std::size_t, std::size_t> witness() const { return pair_; }

private:
  std::size_t generator_;
  std::pair<std::size_t, std::size_t> pair_;
};

/// Order of the subgroup of Aut(G) generated by gens, a lower bound on
/// |Aut(G)|. Throws NotAnAutomorphism with a witness pair.
GroupOrder verify_subgroup(const Graph& g, std::span<const Permutation> gens);

struct LinearIsomorphism {
  std::optional<Gf3Matrix> map;  // invertible L with S_a * L = S_b
  std::size_t candidates = 0;    // complete image tuples tested
  std::size_t nodes = 0;         // partial assignments visited
};

/// Searches linear maps sending S_a onto S_b by fixing n independent vectors
/// of S_a and enumerating ordered images in S_b, pruning as soon as some
/// vector spanned by the assigned prefix lands outside S_b. A result of
/// nullopt rules out linear maps only.
LinearIsomorphism find_linear_cayley_isomorphism(const ConnectionSet& a, const ConnectionSet& b);

nlohmann::json to_json(const AutResult& r);
nlohmann::json to_json(const Gf3Matrix& m);

}  // namespace dezaforge
