#pragma once

// Min-plus arithmetic on exact rational matrices: a (+) b = min(a, b) and
// a (.) b = a + b. There is no tropical zero (+infinity); every entry is a
// finite rational.

#include <cstddef>
#include <span>
#include <vector>

#include "tropsd/matrix.hpp"
#include "tropsd/rational.hpp"

namespace tropsd {

// Largest n accepted by trop_det_bruteforce.
inline constexpr std::size_t kBruteForceDetMaxN = 9;

// (A (.) B)(i, k) = min_j A(i, j) + B(j, k). Throws InvalidInput when the
// inner dimensions differ or are zero.
Matrix trop_mat_mul(const Matrix& a, const Matrix& b);

struct TropDeterminant {
  Rat value;
  // Every permutation attaining the minimum, in lexicographic order.
  std::vector<Permutation> argmins;
};

// Enumerates S_n. Throws CapacityError for n > kBruteForceDetMaxN and
// InvalidInput for non-square input.
TropDeterminant trop_det_bruteforce(const Matrix& a);
TropDeterminant trop_det_bruteforce(const SymMatrix& a);

// Optimal value of the min-cost assignment problem on a (Hungarian method
// with exact rational potentials). No size limit.
Rat trop_det_assignment(const Matrix& a);
Rat trop_det_assignment(const SymMatrix& a);

// y^T (.) A (.) y = min_{i,j} A(i, j) + y_i + y_j.
Rat evaluate_quadratic_form(const SymMatrix& a, std::span<const Rat> y);

// True iff 2 A(i, j) = A(i, i) + A(j, j) for all i < j, i.e. A = u (.) u^T.
bool is_rank_one_symmetric(const SymMatrix& a);

// u (.) u^T, entry (i, j) = u_i + u_j.
SymMatrix rank_one_from_vector(std::span<const Rat> u);

}  // namespace tropsd
