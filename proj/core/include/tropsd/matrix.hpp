#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "tropsd/rational.hpp"

namespace tropsd {

using Vector = std::vector<Rat>;

// Dense row-major rows() x cols() matrix of rationals. Indices are 0-based.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Rat& fill = Rat(0));
  Matrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static Matrix column(std::span<const Rat> v);
  static Matrix row(std::span<const Rat> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

// n x n symmetric matrix stored as its upper triangle. Reading (i, j) with
// i > j returns (j, i); symmetry is structural.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n, const Rat& fill = Rat(0));
  // Full row-major listing; throws InvalidInput if the rows are ragged or the
  // listing is not symmetric.
  SymMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  // Throws InvalidInput if m is not square or not symmetric.
  static SymMatrix from_matrix(const Matrix& m);

  std::size_t n() const { return n_; }

  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }
  Rat& operator()(std::size_t i, std::size_t j) { return data_[index(i, j)]; }

  Matrix to_matrix() const;
  Vector diagonal() const;
  SymMatrix principal_submatrix(std::span<const std::size_t> subset) const;

  // Classical (not tropical) linear structure.
  SymMatrix& operator+=(const SymMatrix& other);
  friend SymMatrix operator+(SymMatrix lhs, const SymMatrix& rhs) { return lhs += rhs; }
  friend SymMatrix operator*(const Rat& s, SymMatrix m);
  SymMatrix operator-() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * n_ - i * (i + 1) / 2 + j;
  }

  std::size_t n_ = 0;
  std::vector<Rat> data_;
};

// Bijection on {0, ..., n-1}; image(i) is sigma(i).
class Permutation {
 public:
  // Throws InvalidInput if images is not a bijection.
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);
std::ostream& operator<<(std::ostream& os, const SymMatrix& m);

}  // namespace tropsd
