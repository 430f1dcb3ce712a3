#include "tropsd/trop_core.hpp"

#include <optional>
#include <string>

#include "tropsd/errors.hpp"

namespace tropsd {
namespace {

// Depth-first walk over permutations in lexicographic order, carrying the
// partial sum so each leaf costs one addition.
class PermutationSearch {
 public:
  explicit PermutationSearch(const Matrix& a)
      : a_(a), n_(a.rows()), used_(n_, false), images_(n_, 0) {}

  TropDeterminant run() {
    visit(0, Rat(0));
    return {std::move(*best_), std::move(argmins_)};
  }

 private:
  void visit(std::size_t row, const Rat& partial) {
    if (row == n_) {
      if (!best_ || partial < *best_) {
        best_ = partial;
        argmins_.clear();
      }
      if (partial == *best_) argmins_.emplace_back(images_);
      return;
    }
    for (std::size_t col = 0; col < n_; ++col) {
      if (used_[col]) continue;
      used_[col] = true;
      images_[row] = col;
      visit(row + 1, partial + a_(row, col));
      used_[col] = false;
    }
  }

  const Matrix& a_;
  std::size_t n_;
  std::vector<bool> used_;
  std::vector<std::size_t> images_;
  std::optional<Rat> best_;
  std::vector<Permutation> argmins_;
};

}  // namespace

Matrix trop_mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidInput("tropical product dimension mismatch: " + std::to_string(a.rows()) + "x" +
                       std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                       std::to_string(b.cols()));
  }
  if (a.cols() == 0) throw InvalidInput("tropical product with empty inner dimension");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < b.cols(); ++k) {
      Rat best = a(i, 0) + b(0, k);
      for (std::size_t j = 1; j < a.cols(); ++j) {
        Rat candidate = a(i, j) + b(j, k);
        if (candidate < best) best = std::move(candidate);
      }
      c(i, k) = std::move(best);
    }
  }
  return c;
}

TropDeterminant trop_det_bruteforce(const Matrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw InvalidInput("tropical determinant needs a nonempty square matrix");
  }
  if (a.rows() > kBruteForceDetMaxN) {
    throw CapacityError("trop_det_bruteforce enumerates n! permutations and accepts n <= " +
                        std::to_string(kBruteForceDetMaxN) + "; use trop_det_assignment for n = " +
                        std::to_string(a.rows()));
  }
  return PermutationSearch(a).run();
}

TropDeterminant trop_det_bruteforce(const SymMatrix& a) {
  return trop_det_bruteforce(a.to_matrix());
}

Rat trop_det_assignment(const Matrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw InvalidInput("tropical determinant needs a nonempty square matrix");
  }
  const std::size_t n = a.rows();
  // Shortest augmenting path formulation with 1-based rows/columns; column 0
  // is a virtual source. row_of[j] is the row matched to column j.
  std::vector<Rat> u(n + 1), v(n + 1);
  std::vector<std::size_t> row_of(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    row_of[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<Rat>> minv(n + 1);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = row_of[j0];
      std::optional<Rat> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Rat reduced = a(i0 - 1, j - 1) - u[i0] - v[j];
        if (!minv[j] || reduced < *minv[j]) {
          minv[j] = std::move(reduced);
          way[j] = j0;
        }
        if (!delta || *minv[j] < *delta) {
          delta = *minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of[j]] += *delta;
          v[j] -= *delta;
        } else {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (row_of[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      row_of[j0] = row_of[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  Rat total(0);
  for (std::size_t j = 1; j <= n; ++j) total += a(row_of[j] - 1, j - 1);
  return total;
}

Rat trop_det_assignment(const SymMatrix& a) { return trop_det_assignment(a.to_matrix()); }

Rat evaluate_quadratic_form(const SymMatrix& a, std::span<const Rat> y) {
  if (y.size() != a.n()) {
    throw InvalidInput("quadratic form: vector length " + std::to_string(y.size()) +
                       " does not match n = " + std::to_string(a.n()));
  }
  if (a.n() == 0) throw InvalidInput("quadratic form on an empty matrix");
  Rat best = a(0, 0) + y[0] + y[0];
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = i; j < a.n(); ++j) {
      Rat candidate = a(i, j) + y[i] + y[j];
      if (candidate < best) best = std::move(candidate);
    }
  }
  return best;
}

bool is_rank_one_symmetric(const SymMatrix& a) {
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = i + 1; j < a.n(); ++j) {
      if (Rat(2) * a(i, j) != a(i, i) + a(j, j)) return false;
    }
  }
  return true;
}

SymMatrix rank_one_from_vector(std::span<const Rat> u) {
  SymMatrix m(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i; j < u.size(); ++j) m(i, j) = u[i] + u[j];
  }
  return m;
}

}  // namespace tropsd
