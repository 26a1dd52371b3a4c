#include <doctest.h>

#include <random>

#include "dezaforge/error.hpp"
#include "dezaforge/graph.hpp"
#include "dezaforge/permutation.hpp"
#include "dezaforge/pipeline.hpp"
#include "oracles.hpp"

using namespace dezaforge;

namespace {

Permutation random_perm(std::mt19937& rng, std::size_t n) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin(), p.end(), rng);
  return Permutation(p);
}

Permutation cycle(std::size_t n) {
  std::vector<std::uint32_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>((i + 1) % n);
  return Permutation(p);
}

Permutation transposition(std::size_t n, std::uint32_t a, std::uint32_t b) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::swap(p[a], p[b]);
  return Permutation(p);
}

// Closure of the generators under composition; feasible for small groups.
std::size_t enumerate_order(const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation::identity(gens.front().degree())};
  std::vector<Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        auto q = compose(p, g);
        if (seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace

TEST_CASE("permutation construction validates bijectivity") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), NotAPermutation);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), NotAPermutation);
  CHECK(Permutation::identity(4).is_identity());
  CHECK(Permutation::identity(0).degree() == 0);
  CHECK(transposition(5, 1, 3).fixed_point_count() == 3);
  CHECK(transposition(5, 1, 3).first_moved_point() == 1);
}

TEST_CASE("composition applies the left factor first") {
  const Permutation s({1, 2, 0});
  const Permutation t({0, 2, 1});
  const auto st = compose(s, t);
  for (std::size_t i = 0; i < 3; ++i) CHECK(st[i] == t[s[i]]);
  CHECK(compose(s, inverse(s)).is_identity());
  CHECK_THROWS_AS(compose(s, Permutation::identity(4)), ShapeError);
}

TEST_CASE("involution predicate excludes the identity") {
  CHECK_FALSE(is_involution(Permutation::identity(3)));
  CHECK(squares_to_identity(Permutation::identity(3)));
  CHECK(is_involution(transposition(3, 0, 2)));
  CHECK_FALSE(is_involution(cycle(3)));
}

TEST_CASE("Schreier-Sims orders of familiar groups") {
  CHECK(group_order({}) == 1);
  const std::vector<Permutation> id{Permutation::identity(6)};
  CHECK(group_order(id) == 1);
  const std::vector<Permutation> c7{cycle(7)};
  CHECK(group_order(c7) == 7);
  const std::vector<Permutation> s6{cycle(6), transposition(6, 0, 1)};
  CHECK(group_order(s6) == 720);
  const std::vector<Permutation> d8{cycle(8), Permutation({0, 7, 6, 5, 4, 3, 2, 1})};
  CHECK(group_order(d8) == 16);
  // A 3-cycle and a 7-cycle generate A7.
  const std::vector<Permutation> a7{Permutation({1, 2, 0, 3, 4, 5, 6}), cycle(7)};
  CHECK(group_order(a7) == 2520);
  const std::vector<Permutation> s10{cycle(10), transposition(10, 0, 1)};
  CHECK(group_order(s10) == 3628800);
}

TEST_CASE("Schreier-Sims agrees with enumeration on random small groups") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 3 + trial % 5;
    std::vector<Permutation> gens{random_perm(rng, n), random_perm(rng, n)};
    CHECK(group_order(gens) == enumerate_order(gens));
  }
}

TEST_CASE("order is invariant under reordering and redundant generators") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Permutation> gens{random_perm(rng, 9), random_perm(rng, 9), random_perm(rng, 9)};
    const GroupOrder base = group_order(gens);
    std::vector<Permutation> shuffled(gens.rbegin(), gens.rend());
    CHECK(group_order(shuffled) == base);
    gens.push_back(compose(gens[0], gens[1]));
    gens.push_back(Permutation::identity(9));
    gens.push_back(gens[2]);
    CHECK(group_order(gens) == base);
  }
}

TEST_CASE("chain membership and base prefix") {
  const std::vector<Permutation> s5{cycle(5), transposition(5, 0, 1)};
  const std::vector<std::uint32_t> prefix{4, 2};
  StabilizerChain chain(5, s5, prefix);
  CHECK(chain.base()[0] == 4);
  CHECK(chain.base()[1] == 2);
  CHECK(chain.order() == 120);
  CHECK(chain.basic_orbit(0).size() == 5);
  CHECK(chain.basic_orbit(1).size() == 4);
  CHECK(chain.contains(transposition(5, 2, 3)));
  const std::vector<Permutation> c5{cycle(5)};
  StabilizerChain cyclic(5, c5);
  CHECK_FALSE(cyclic.contains(transposition(5, 2, 3)));
  CHECK(cyclic.contains(compose(cycle(5), cycle(5))));
  CHECK_THROWS_AS(StabilizerChain(6, c5), ShapeError);
}

TEST_CASE("matrix-induced permutations") {
  const auto px = perm_from_matrix(m11_x());
  CHECK(is_involution(px));
  CHECK(px.fixed_point_count() == 27);
  CHECK(perm_from_matrix(m11_x() * Gf3(2)).fixed_point_count() == 9);
  CHECK(minus_identity_perm().fixed_point_count() == 1);
  CHECK_THROWS_AS(perm_from_matrix(make_matrix(2, 2, {1, 1, 1, 1})), NotAPermutation);
  CHECK_THROWS_AS(perm_from_matrix(Gf3Matrix::Zero(2, 3)), ShapeError);

  // Homomorphism: perm(AB) = perm(A) then perm(B).
  const auto xy = perm_from_matrix(m11_x() * m11_y());
  CHECK(xy == compose(px, perm_from_matrix(m11_y())));
}

TEST_CASE("group orders inside the affine group of V(5,3)") {
  const std::vector<Permutation> m11{x_perm(), perm_from_matrix(m11_y())};
  CHECK(group_order(m11) == oracle::matrix_group({m11_x(), m11_y()}).size());

  auto gens = translation_generators(5);
  CHECK(group_order(gens) == 243);
  gens.push_back(x_perm());
  gens.push_back(perm_from_matrix(m11_y()));
  gens.push_back(minus_identity_perm());
  const auto linear = oracle::matrix_group({m11_x(), m11_y(), Gf3Matrix(Gf3Matrix::Identity(5, 5) * Gf3(2))});
  CHECK(linear.size() == 15840);
  CHECK(group_order(gens) == 243 * linear.size());
}

TEST_CASE("order serialises as a machine integer when it fits") {
  CHECK(to_json(GroupOrder(3849120)) == nlohmann::json(3849120));
  GroupOrder big = 1;
  for (int i = 0; i < 30; ++i) big *= 1000;
  CHECK(to_json(big).is_string());
  CHECK(to_json(Permutation({1, 0})) == nlohmann::json::array({1, 0}));
}
