#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dezaforge/gf3.hpp"
#include "dezaforge/graph.hpp"
#include "dezaforge/permutation.hpp"

namespace dezaforge {

/// 5x11 parity-check matrix of the ternary Golay code, identity block in
/// columns 7..11.
Gf3Matrix parity_check_H();

struct LinearCode {
  Eigen::Index length = 0;
  Gf3Matrix parity_check;
  std::vector<Gf3Vector> codewords;  // sorted by ternary index
  Eigen::Index dimension = 0;        // length - rank(parity_check)
  bool rank_deficient = false;       // rank below the number of rows
};

/// Materialises every c with H c^T = 0 by spanning a kernel basis.
LinearCode code_from_parity_check(const Gf3Matrix& h);

std::size_t hamming_weight(const Gf3Vector& v);
/// Smallest nonzero weight; 0 for the zero code.
std::size_t minimum_distance(const LinearCode& code);

/// The 22 columns of H and their negatives as vectors of V(5,3). Throws
/// InvalidConnectionSet on a repeated signed column.
ConnectionSet connection_set_s2(const Gf3Matrix& h = parity_check_H());

/// True iff the vectors +-c_i +- c_j (i < j) over the columns c_i are 220
/// distinct nonzero vectors that, together with S, cover all 242 nonzero
/// vectors of V(5,3).
bool pair_sums_cover(const Gf3Matrix& h, const ConnectionSet& s);

/// Cosets of the code, labelled by syndrome index; two are adjacent when
/// they differ by a weight-one word. Built from an enumeration of all
/// words of V(11,3) and checked against cayley(5, S2).
Graph coset_graph(const LinearCode& code);

/// (a,b,c,d,e) -> (e,d,c,b,a) on V(5,3).
Permutation reversal_perm();

/// True iff S has a vector of the form (p, q, 0, -q, -p).
bool has_antisymmetric_vector(const ConnectionSet& s);

/// One ternary string per codeword, newline-terminated.
std::string export_codewords(const LinearCode& code);

}  // namespace dezaforge
