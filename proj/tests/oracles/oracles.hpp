#pragma once

// Independent reference implementations used only by the tests. None of
// them shares code with the production algorithm it checks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "tropsd/matrix.hpp"
#include "tropsd/newton_subdiv.hpp"
#include "tropsd/puiseux.hpp"

namespace tropsd::oracle {

struct DetResult {
  Rat value;
  std::vector<std::vector<std::size_t>> argmins;
};

// std::next_permutation over S_n, full sums.
inline DetResult trop_det_leibniz(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  DetResult r;
  bool first = true;
  do {
    Rat sum(0);
    for (std::size_t i = 0; i < n; ++i) sum += a(i, perm[i]);
    if (first || sum < r.value) {
      r.value = sum;
      r.argmins.clear();
      first = false;
    }
    if (sum == r.value) r.argmins.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r;
}

inline int permutation_sign(const std::vector<std::size_t>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
  }
  return inversions % 2 ? -1 : 1;
}

inline PuiseuxPoly puiseux_det_leibniz(const PuiseuxMatrix& m, const std::vector<std::size_t>& idx) {
  std::vector<std::size_t> perm(idx.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  PuiseuxPoly det;
  do {
    PuiseuxPoly term(Rat(permutation_sign(perm)));
    for (std::size_t i = 0; i < idx.size(); ++i) term = term * m(idx[i], idx[perm[i]]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

inline Rat rational_det_leibniz(const Matrix& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rat det(0);
  do {
    Rat term(permutation_sign(perm));
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Solves the (possibly overdetermined) system cols * w = rhs where cols are
// the columns. Returns nullopt if the columns are dependent or the system is
// inconsistent.
inline std::optional<Vector> solve_columns(const std::vector<Vector>& cols, const Vector& rhs) {
  const std::size_t rows = rhs.size();
  const std::size_t k = cols.size();
  std::vector<Vector> aug(rows, Vector(k + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug[r][c] = cols[c][r];
    aug[r][k] = rhs[r];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_row(k);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = row;
    while (p < rows && aug[p][c].is_zero()) ++p;
    if (p == rows) return std::nullopt;  // dependent columns
    std::swap(aug[p], aug[row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || aug[r][c].is_zero()) continue;
      const Rat f = aug[r][c] / aug[row][c];
      for (std::size_t t = c; t <= k; ++t) aug[r][t] -= f * aug[row][t];
    }
    pivot_row[c] = row++;
  }
  for (std::size_t r = row; r < rows; ++r) {
    if (!aug[r][k].is_zero()) return std::nullopt;
  }
  Vector w(k);
  for (std::size_t c = 0; c < k; ++c) w[c] = aug[pivot_row[c]][k] / aug[pivot_row[c]][c];
  return w;
}

inline Vector coordinates(const LatticePoint& p, std::size_t n) {
  Vector x(n, Rat(0));
  x[p.i] += Rat(1);
  x[p.j] += Rat(1);
  return x;
}

// Facets of the upper (upper = true) or lower hull by enumerating every
// n-subset of lattice points, solving for the hyperplane through it and
// keeping the valid ones.
inline std::vector<UpperFacet> brute_force_facets(const SymMatrix& a, bool upper) {
  const std::size_t n = a.n();
  const auto points = lattice_points(n);
  const std::size_t m = points.size();
  std::vector<UpperFacet> found;
  std::vector<bool> choose(m, false);
  std::fill(choose.end() - static_cast<std::ptrdiff_t>(n), choose.end(), true);
  do {
    // lambda_i + lambda_j = h(p) over the chosen points: columns are e_i + e_j
    // transposed, so build the system row by row instead.
    std::vector<Vector> cols(n, Vector());
    Vector rhs;
    for (std::size_t k = 0; k < m; ++k) {
      if (!choose[k]) continue;
      const Vector x = coordinates(points[k], n);
      for (std::size_t c = 0; c < n; ++c) cols[c].push_back(x[c]);
      rhs.push_back(height(a, points[k]));
    }
    auto lambda = solve_columns(cols, rhs);
    if (!lambda) continue;
    AffineFunctional f{*lambda};
    bool valid = true;
    PointSet touching;
    for (const auto& p : points) {
      const Rat v = f(p);
      if (upper ? v < height(a, p) : v > height(a, p)) {
        valid = false;
        break;
      }
      if (v == height(a, p)) touching.push_back(p);
    }
    if (!valid) continue;
    UpperFacet facet{f, touching};
    if (std::find(found.begin(), found.end(), facet) == found.end()) found.push_back(facet);
  } while (std::next_permutation(choose.begin(), choose.end()));
  std::sort(found.begin(), found.end(),
            [](const UpperFacet& x, const UpperFacet& y) { return x.touching_set < y.touching_set; });
  return found;
}

// Exact containment x in conv(points) by Caratheodory: x lies in the convex
// hull iff it is a nonnegative combination of some linearly independent
// subset (all points lie on sum = 2, so weights automatically sum to one).
inline bool in_convex_hull(const Vector& x, const PointSet& set, std::size_t n) {
  const std::size_t m = set.size();
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > n) continue;
    std::vector<Vector> cols;
    for (std::size_t k = 0; k < m; ++k) {
      if (mask & (1u << k)) cols.push_back(coordinates(set[k], n));
    }
    auto w = solve_columns(cols, x);
    if (w && std::all_of(w->begin(), w->end(), [](const Rat& v) { return v.sign() >= 0; })) return true;
  }
  return false;
}

// Rational points x = k / denom with k_i >= 0 integers summing to 2 denom.
inline std::vector<Vector> simplex_grid(std::size_t n, int denom) {
  std::vector<Vector> out;
  std::vector<int> k(n, 0);
  const int total = 2 * denom;
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == n) {
      k[pos] = left;
      Vector x;
      for (int v : k) x.push_back(Rat(v, denom));
      out.push_back(std::move(x));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      k[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

// Lexicographically least among the smallest index sets whose masks cover
// `universe`, by enumerating subsets in order of size.
inline std::vector<std::size_t> min_cover_exhaustive(const std::vector<std::uint32_t>& masks,
                                                     std::uint32_t universe) {
  const std::size_t m = masks.size();
  for (std::size_t size = 1; size <= m; ++size) {
    // prev_permutation from 1..10..0 visits index sets in increasing
    // lexicographic order.
    std::vector<bool> choose(m, false);
    std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::uint32_t u = 0;
      std::vector<std::size_t> picked;
      for (std::size_t k = 0; k < m; ++k) {
        if (choose[k]) {
          u |= masks[k];
          picked.push_back(k);
        }
      }
      if ((u & universe) == universe) return picked;
    } while (std::prev_permutation(choose.begin(), choose.end()));
  }
  return {};
}

}  // namespace tropsd::oracle
