#pragma once

// Regular subdivisions of the dilated simplex 2*Delta_{n-1} induced by a
// symmetric matrix: the lattice point e_i + e_j is lifted to height A(i, j).
//
// Affine functions on the hyperplane sum(x) = 2 are stored in canonical form
// x -> lambda . x (a constant c is folded in as c/2 on every coordinate), so
// the value at e_i + e_j is lambda_i + lambda_j and a functional is literally
// the vector of a rank-one matrix lambda (.) lambda^T.

#include <compare>
#include <cstddef>
#include <vector>

#include "tropsd/matrix.hpp"
#include "tropsd/rational.hpp"

namespace tropsd {

// e_i + e_j with 0-based i <= j.
struct LatticePoint {
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

using PointSet = std::vector<LatticePoint>;  // sorted, no duplicates

struct AffineFunctional {
  Vector lambda;

  Rat operator()(const LatticePoint& p) const { return lambda[p.i] + lambda[p.j]; }
  friend bool operator==(const AffineFunctional&, const AffineFunctional&) = default;
};

// functional >= height everywhere, with equality exactly on touching_set.
struct UpperFacet {
  AffineFunctional functional;
  PointSet touching_set;

  friend bool operator==(const UpperFacet&, const UpperFacet&) = default;
};

// Each cell is the set of lattice points on one lower facet of the lifted
// configuration. Points lifted strictly above the lower hull are in no cell.
struct Subdivision {
  std::vector<PointSet> cells;  // lexicographic order

  friend bool operator==(const Subdivision&, const Subdivision&) = default;
};

// Largest n accepted by the hull routines (n (n + 1) / 2 <= 28 points).
inline constexpr std::size_t kHullMaxN = 7;

// All e_i + e_j, i <= j, in lexicographic order; n (n + 1) / 2 points.
std::vector<LatticePoint> lattice_points(std::size_t n);

inline const Rat& height(const SymMatrix& a, const LatticePoint& p) { return a(p.i, p.j); }

// Every facet of the upper hull of the lifted points, ordered by touching
// set. Throws CapacityError for n > kHullMaxN.
std::vector<UpperFacet> upper_facets(const SymMatrix& a);

// Facets of the lower hull, i.e. the maximal cells of the regular
// subdivision. Throws CapacityError for n > kHullMaxN.
Subdivision lower_subdivision(const SymMatrix& a);

// Exactly one maximal cell.
inline bool is_trivial(const Subdivision& s) { return s.cells.size() == 1; }

bool is_psd_by_subdivision(const SymMatrix& a);

}  // namespace tropsd
