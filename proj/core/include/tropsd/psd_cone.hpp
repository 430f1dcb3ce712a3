#pragma once

// The tropical PSD cone: symmetric matrices with A(i,i) + A(j,j) <= 2 A(i,j)
// for all i != j. Three equivalent membership tests live here and in
// newton_subdiv.hpp; the cone's generators are the rays e_ij (i < j) and the
// lineality basis L_i = 2 e_ii + sum_{j != i} e_ij.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tropsd/matrix.hpp"
#include "tropsd/rational.hpp"

namespace tropsd {

// 0-based index pair with first < second.
using IndexPair = std::pair<std::size_t, std::size_t>;

struct MembershipVerdict {
  bool is_member = true;
  // Lexicographically smallest (i, j), i < j, with A(i,i) + A(j,j) > 2 A(i,j).
  std::optional<IndexPair> violated_pair;
};

// A = sum_i lineality[i] * L_i + sum_{i<j} rays[{i,j}] * e_ij, as a classical
// linear combination.
struct ConeCombination {
  std::vector<Rat> lineality_coeffs;
  std::map<IndexPair, Rat> ray_coeffs;

  SymMatrix reconstruct() const;
  // True iff every ray coefficient is nonnegative.
  bool certifies_membership() const;
};

MembershipVerdict is_trop_psd_inequalities(const SymMatrix& a);

// True iff the diagonal sum attains the tropical determinant.
bool is_trop_psd_det(const SymMatrix& a);

// Same test restricted to the principal submatrix on `subset` (0-based
// indices, duplicates rejected). Throws InvalidInput for an empty subset.
bool principal_minor_identity_optimal(const SymMatrix& a, std::span<const std::size_t> subset);

ConeCombination cone_decompose(const SymMatrix& a);

// e_ij: 1 at (i, j) and (j, i), 0 elsewhere. i == j puts 1 on the diagonal.
SymMatrix unit_symmetric(std::size_t n, std::size_t i, std::size_t j);
// L_i = 2 e_ii + sum_{j != i} e_ij.
SymMatrix lineality_generator(std::size_t n, std::size_t i);

struct ConeGenerators {
  std::vector<SymMatrix> rays;             // e_ij for i < j, lexicographic
  std::vector<SymMatrix> lineality_basis;  // L_0, ..., L_{n-1}
};

// Throws InvalidInput for n == 0.
ConeGenerators generators(std::size_t n);

}  // namespace tropsd
