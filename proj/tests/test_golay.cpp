#include <doctest.h>

#include "dezaforge/error.hpp"
#include "dezaforge/golay.hpp"
#include "dezaforge/pipeline.hpp"
#include "oracles.hpp"

using namespace dezaforge;

namespace {

// Every word of V(11,3) with H c^T = 0, found by exhaustive scan.
std::vector<std::size_t> scanned_codewords(const Gf3Matrix& h) {
  std::vector<std::size_t> out;
  std::size_t total = 1;
  for (int i = 0; i < 11; ++i) total *= 3;
  for (std::size_t i = 0; i < total; ++i)
    if ((h * oracle::digits(i, 11).transpose()).isZero()) out.push_back(i);
  return out;
}

}  // namespace

TEST_CASE("parity-check matrix layout") {
  const auto h = parity_check_H();
  CHECK(h.rows() == 5);
  CHECK(h.cols() == 11);
  CHECK(Gf3Vector(h.col(0).transpose()) == make_vector({1, 1, 1, 1, 1}));
  CHECK(Gf3Vector(h.col(6).transpose()) == make_vector({1, 0, 0, 0, 0}));
  CHECK(Gf3Matrix(h.rightCols(5)) == Gf3Matrix::Identity(5, 5));
  CHECK(rank(h) == 5);
}

TEST_CASE("code from the parity check matches an exhaustive scan") {
  const auto h = parity_check_H();
  const auto code = code_from_parity_check(h);
  CHECK(code.dimension == 6);
  CHECK_FALSE(code.rank_deficient);
  REQUIRE(code.codewords.size() == 729);
  std::vector<std::size_t> got;
  for (const auto& c : code.codewords) got.push_back(vector_to_index(c));
  CHECK(got == scanned_codewords(h));
  CHECK(got.front() == 0);

  std::size_t min_weight = 11;
  for (auto i : got)
    if (i) {
      const auto v = oracle::digits(i, 11);
      std::size_t w = 0;
      for (int k = 0; k < 11; ++k) w += v(k) != Gf3(0);
      min_weight = std::min(min_weight, w);
    }
  CHECK(minimum_distance(code) == min_weight);
  CHECK(minimum_distance(code) == 5);

  // Closure under addition and negation.
  std::set<std::size_t> set(got.begin(), got.end());
  for (std::size_t a = 0; a < code.codewords.size(); a += 37) {
    CHECK(set.count(vector_to_index(-code.codewords[a])));
    for (std::size_t b = 0; b < code.codewords.size(); b += 41)
      CHECK(set.count(vector_to_index(code.codewords[a] + code.codewords[b])));
  }
}

TEST_CASE("rank-deficient parity checks report the corrected dimension") {
  Gf3Matrix h = parity_check_H();
  h.row(4) = h.row(0) + h.row(1);
  const auto code = code_from_parity_check(h);
  CHECK(code.rank_deficient);
  CHECK(code.dimension == 7);
  CHECK(code.codewords.size() == 2187);
}

TEST_CASE("signed columns") {
  const auto s2 = connection_set_s2();
  CHECK(s2.size() == 22);
  CHECK(s2.is_inverse_closed());
  CHECK(s2.contains(make_vector({1, 0, 0, 0, 0})));
  CHECK(s2.contains(make_vector({2, 0, 0, 0, 0})));
  Gf3Matrix rev = Gf3Matrix::Zero(5, 5);
  for (int i = 0; i < 5; ++i) rev(i, 4 - i) = Gf3(1);
  CHECK(s2.image(rev) == s2);
  CHECK_FALSE(has_antisymmetric_vector(s2));

  Gf3Matrix dup = parity_check_H();
  dup.col(1) = dup.col(0) * Gf3(2);
  CHECK_THROWS_AS(connection_set_s2(dup), InvalidConnectionSet);
}

TEST_CASE("pair sums cover the nonzero vectors") {
  const auto h = parity_check_H();
  CHECK(pair_sums_cover(h, connection_set_s2(h)));
  Gf3Matrix corrupted = h;
  corrupted(0, 0) = Gf3(0);
  CHECK_FALSE(pair_sums_cover(corrupted, connection_set_s2(corrupted)));
}

TEST_CASE("coset graph equals the Cayley graph on the signed columns") {
  const auto code = code_from_parity_check(parity_check_H());
  const Graph g = coset_graph(code);
  CHECK(g == cayley(5, connection_set_s2()));
  CHECK(g == oracle::cayley_reference(5, connection_set_s2().vectors()));
  CHECK(g.edge_count() == 2673);
  CHECK(g.regular_degree() == 22u);
}

TEST_CASE("reversal involution") {
  const auto r = reversal_perm();
  CHECK(is_involution(r));
  CHECK(r.fixed_point_count() == 27);
  const Graph g = named_graph("gamma-s2");
  CHECK(is_automorphism(g, r));
  const auto pairs = classify_involution_pairs(g, r);
  CHECK(pairs.adjacent_swaps == 0);
  CHECK(pairs.fixed == 27);
  // v - v^r has the shape (p, q, 0, -q, -p).
  for (std::size_t i = 0; i < 243; ++i) {
    const Gf3Vector d = index_to_vector(i, 5) - index_to_vector(r[i], 5);
    CHECK(d(2) == Gf3(0));
    CHECK(d(3) == -d(1));
    CHECK(d(4) == -d(0));
  }
}

TEST_CASE("codeword export") {
  const auto text = export_codewords(code_from_parity_check(parity_check_H()));
  CHECK(std::count(text.begin(), text.end(), '\n') == 729);
  CHECK(text.substr(0, 12) == "00000000000\n");
}
