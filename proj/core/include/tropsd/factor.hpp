#pragma once

// Tropical rank-one decompositions of tropical PSD matrices: A is the
// entrywise minimum of u_k (.) u_k^T over finitely many vectors u_k, each
// read off an upper facet of the lifted simplex. Equivalently A = B (.) B^T
// with the u_k as the columns of B.

#include <cstddef>
#include <vector>

#include "tropsd/matrix.hpp"
#include "tropsd/newton_subdiv.hpp"

namespace tropsd {

struct RankOneDecomposition {
  std::vector<Vector> vectors;

  // Entrywise minimum of u_k (.) u_k^T. Throws InvalidInput if empty.
  SymMatrix reconstruct() const;
};

struct GramFactor {
  Matrix b;  // n x r, columns are the decomposition vectors
};

// Largest n accepted by the exact rank computation.
inline constexpr std::size_t kExactRankMaxN = 6;
// Limits of the brute-force rank oracle.
inline constexpr std::size_t kRankOracleMaxN = 4;
inline constexpr std::size_t kRankOracleMaxR = 4;

// max(n, floor(n^2 / 4)): upper bound on the symmetric Barvinok rank of an
// n x n tropical PSD matrix.
std::size_t symmetric_rank_bound(std::size_t n);

// Upper facets picked greedily (most uncovered lattice points first, ties to
// the lexicographically smaller touching set) until every lattice point is
// covered. Throws InvalidInput if A is not tropical PSD.
RankOneDecomposition decompose_rank_one(const SymMatrix& a);

// A minimum set of upper facets covering every lattice point, found by
// branch and bound. Among all minimum covers the lexicographically least
// one (facets compared in touching-set order) is returned, sorted. Throws
// InvalidInput for non-members and CapacityError for n > kExactRankMaxN.
std::vector<UpperFacet> minimum_facet_cover(const SymMatrix& a);

// Size of minimum_facet_cover(A).
std::size_t symmetric_barvinok_rank(const SymMatrix& a);

// B with columns decompose_rank_one(A).vectors, so that B (.) B^T = A.
GramFactor gram_factor(const SymMatrix& a);

// Whether r functionals, each >= heights everywhere, can jointly touch every
// lattice point. Searches assignments of lattice points to r groups and
// decides each group by exact Fourier-Motzkin elimination; it shares no code
// with the hull routines. Throws CapacityError beyond kRankOracleMaxN /
// kRankOracleMaxR and InvalidInput for r == 0.
bool rank_oracle_small(const SymMatrix& a, std::size_t r);

}  // namespace tropsd
