#include "tropsd/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "tropsd/errors.hpp"

namespace tropsd {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Rat& fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::column(std::span<const Rat> v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Matrix Matrix::row(std::span<const Rat> v) {
  Matrix m(1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) m(0, j) = v[j];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

SymMatrix::SymMatrix(std::size_t n, const Rat& fill) : n_(n), data_(n * (n + 1) / 2, fill) {}

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<Rat>> rows)
    : SymMatrix(from_matrix(Matrix(rows))) {}

SymMatrix SymMatrix::from_matrix(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("symmetric matrix must be square");
  SymMatrix s(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i)) {
        throw InvalidInput("matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ")");
      }
      s(i, j) = m(i, j);
    }
  }
  return s;
}

Matrix SymMatrix::to_matrix() const {
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
  }
  return m;
}

Vector SymMatrix::diagonal() const {
  Vector d;
  d.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) d.push_back((*this)(i, i));
  return d;
}

SymMatrix SymMatrix::principal_submatrix(std::span<const std::size_t> subset) const {
  SymMatrix s(subset.size());
  for (std::size_t a = 0; a < subset.size(); ++a) {
    if (subset[a] >= n_) throw InvalidInput("principal submatrix index out of range");
    for (std::size_t b = a; b < subset.size(); ++b) s(a, b) = (*this)(subset[a], subset[b]);
  }
  return s;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& other) {
  if (other.n_ != n_) throw InvalidInput("dimension mismatch in matrix sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

SymMatrix operator*(const Rat& s, SymMatrix m) {
  for (auto& x : m.data_) x *= s;
  return m;
}

SymMatrix SymMatrix::operator-() const { return Rat(-1) * *this; }

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v]) throw InvalidInput("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

std::ostream& operator<<(std::ostream& os, const SymMatrix& m) { return os << m.to_matrix(); }

}  // namespace tropsd
