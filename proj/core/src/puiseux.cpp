#include "tropsd/puiseux.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <utility>

#include "tropsd/errors.hpp"
#include "tropsd/psd_cone.hpp"

namespace tropsd {
namespace {

// Merges a list already sorted by exponent.
std::vector<PuiseuxTerm> collect(std::vector<PuiseuxTerm> sorted) {
  std::vector<PuiseuxTerm> out;
  out.reserve(sorted.size());
  for (auto& term : sorted) {
    if (!out.empty() && out.back().exponent == term.exponent) {
      out.back().coefficient += term.coefficient;
    } else {
      out.push_back(std::move(term));
    }
  }
  std::erase_if(out, [](const PuiseuxTerm& t) { return t.coefficient.is_zero(); });
  return out;
}

std::vector<PuiseuxTerm> merge_sorted(const std::vector<PuiseuxTerm>& a,
                                      const std::vector<PuiseuxTerm>& b, bool negate_b) {
  std::vector<PuiseuxTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exponent < b[j].exponent)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exponent < a[i].exponent) {
      out.push_back({b[j].exponent, negate_b ? -b[j].coefficient : b[j].coefficient});
      ++j;
    } else {
      Rat c = negate_b ? a[i].coefficient - b[j].coefficient : a[i].coefficient + b[j].coefficient;
      if (!c.is_zero()) out.push_back({a[i].exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::size_t packed_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + j;
}

// Determinant of the principal submatrix on rows/columns `idx`, by Laplace
// expansion along successive rows with memoization over column subsets.
PuiseuxPoly subset_determinant(const PuiseuxMatrix& m, const std::vector<std::size_t>& idx) {
  const std::size_t k = idx.size();
  const std::uint32_t full = (1u << k) - 1;
  // det[mask] = determinant of rows 0..popcount(mask)-1 against columns mask.
  std::vector<PuiseuxPoly> det(std::size_t{1} << k);
  det[0] = PuiseuxPoly(Rat(1));
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int row = std::popcount(mask) - 1;
    PuiseuxPoly acc;
    int greater = 0;  // members of mask above the current column
    for (int c = static_cast<int>(k) - 1; c >= 0; --c) {
      if (!(mask & (1u << c))) continue;
      const PuiseuxPoly& minor = det[mask & ~(1u << c)];
      if (!minor.is_zero()) {
        PuiseuxPoly term = m(idx[row], idx[c]) * minor;
        if (greater % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      ++greater;
    }
    det[mask] = std::move(acc);
    if (mask == full) break;
  }
  return det[full];
}

std::vector<std::vector<std::size_t>> nonempty_subsets_by_size(std::size_t n) {
  std::vector<std::vector<std::size_t>> subsets;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return subsets;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

PuiseuxPoly::PuiseuxPoly(std::vector<PuiseuxTerm> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const PuiseuxTerm& a, const PuiseuxTerm& b) { return a.exponent < b.exponent; });
  terms_ = collect(std::move(terms));
}

PuiseuxPoly::PuiseuxPoly(const Rat& constant) {
  if (!constant.is_zero()) terms_.push_back({Rat(0), constant});
}

PuiseuxPoly PuiseuxPoly::monomial(const Rat& coefficient, const Rat& exponent) {
  return PuiseuxPoly(std::vector<PuiseuxTerm>{{exponent, coefficient}});
}

const Rat& PuiseuxPoly::valuation() const {
  if (is_zero()) throw UndefinedValuation("valuation of the zero Puiseux polynomial");
  return terms_.front().exponent;
}

const Rat& PuiseuxPoly::leading_coefficient() const {
  if (is_zero()) throw UndefinedValuation("leading coefficient of the zero Puiseux polynomial");
  return terms_.front().coefficient;
}

bool PuiseuxPoly::is_positive() const { return !is_zero() && terms_.front().coefficient.sign() > 0; }

Rat PuiseuxPoly::evaluate_integral(const Rat& t) const {
  Rat sum(0);
  for (const auto& term : terms_) {
    if (!term.exponent.is_integer()) {
      throw InvalidInput("evaluate_integral: exponent " + term.exponent.str() + " is not an integer");
    }
    sum += term.coefficient * pow(t, term.exponent.numerator().get_si());
  }
  return sum;
}

std::string PuiseuxPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& term : terms_) {
    if (first) {
      os << term.coefficient;
    } else {
      os << (term.coefficient.sign() < 0 ? " - " : " + ") << term.coefficient.abs();
    }
    os << "*t^(" << term.exponent << ')';
    first = false;
  }
  return os.str();
}

PuiseuxPoly& PuiseuxPoly::operator+=(const PuiseuxPoly& other) {
  terms_ = merge_sorted(terms_, other.terms_, false);
  return *this;
}

PuiseuxPoly& PuiseuxPoly::operator-=(const PuiseuxPoly& other) {
  terms_ = merge_sorted(terms_, other.terms_, true);
  return *this;
}

PuiseuxPoly operator*(const PuiseuxPoly& lhs, const PuiseuxPoly& rhs) {
  std::vector<PuiseuxTerm> product;
  product.reserve(lhs.terms_.size() * rhs.terms_.size());
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) product.push_back({a.exponent + b.exponent, a.coefficient * b.coefficient});
  }
  return PuiseuxPoly(std::move(product));
}

PuiseuxPoly PuiseuxPoly::operator-() const {
  PuiseuxPoly p = *this;
  for (auto& term : p.terms_) term.coefficient = -term.coefficient;
  return p;
}

std::ostream& operator<<(std::ostream& os, const PuiseuxPoly& p) { return os << p.str(); }

PuiseuxMatrix::PuiseuxMatrix(std::size_t n, std::vector<PuiseuxPoly> upper)
    : n_(n), upper_(std::move(upper)) {
  if (n_ == 0) throw InvalidInput("Puiseux matrix must have positive dimension");
  if (upper_.size() != n_ * (n_ + 1) / 2) throw InvalidInput("Puiseux matrix: wrong number of entries");
  for (const auto& p : upper_) {
    if (p.is_zero()) throw InvalidInput("Puiseux matrix entries must be nonzero");
  }
}

PuiseuxMatrix::PuiseuxMatrix(std::initializer_list<std::initializer_list<PuiseuxPoly>> rows) {
  n_ = rows.size();
  std::vector<std::vector<PuiseuxPoly>> full;
  for (const auto& r : rows) {
    if (r.size() != n_) throw InvalidInput("Puiseux matrix must be square");
    full.emplace_back(r.begin(), r.end());
  }
  std::vector<PuiseuxPoly> upper;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) {
      if (full[i][j] != full[j][i]) throw InvalidInput("Puiseux matrix must be symmetric");
      upper.push_back(full[i][j]);
    }
  }
  *this = PuiseuxMatrix(n_, std::move(upper));
}

const PuiseuxPoly& PuiseuxMatrix::operator()(std::size_t i, std::size_t j) const {
  return upper_[packed_index(n_, i, j)];
}

SymMatrix PuiseuxMatrix::valuation() const {
  SymMatrix v(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) v(i, j) = (*this)(i, j).valuation();
  }
  return v;
}

SignPattern SignPattern::all_positive(std::size_t n) {
  return SignPattern(n, std::vector<int>(pair_count(n), 1));
}

SignPattern SignPattern::from_bits(std::size_t n, unsigned long long bits) {
  std::vector<int> signs(pair_count(n), 1);
  for (std::size_t k = 0; k < signs.size() && k < 64; ++k) {
    if (bits & (1ull << k)) signs[k] = -1;
  }
  return SignPattern(n, std::move(signs));
}

SignPattern SignPattern::parse(std::size_t n, const std::string& text) {
  if (text.size() != pair_count(n)) {
    throw InvalidInput("sign pattern needs " + std::to_string(pair_count(n)) + " symbols for n = " +
                       std::to_string(n) + ", got " + std::to_string(text.size()));
  }
  std::vector<int> signs;
  for (char c : text) {
    if (c != '+' && c != '-') throw InvalidInput("sign pattern symbols must be '+' or '-'");
    signs.push_back(c == '+' ? 1 : -1);
  }
  return SignPattern(n, std::move(signs));
}

int SignPattern::sign(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  if (i == j || j >= n_) throw InvalidInput("sign pattern index out of range");
  // Offset of pair (i, j) in lexicographic order.
  const std::size_t k = i * n_ - i * (i + 1) / 2 + (j - i - 1);
  return signs_[k];
}

std::string SignPattern::str() const {
  std::string s;
  for (int v : signs_) s.push_back(v > 0 ? '+' : '-');
  return s;
}

PuiseuxMatrix construct_witness(const SymMatrix& a, const SignPattern& signs) {
  if (a.n() == 0) throw InvalidInput("witness of an empty matrix");
  if (signs.n() != a.n()) throw InvalidInput("sign pattern dimension does not match the matrix");
  const auto verdict = is_trop_psd_inequalities(a);
  if (!verdict.is_member) {
    const auto [i, j] = *verdict.violated_pair;
    throw InvalidInput("no PSD witness: matrix violates A[" + std::to_string(i + 1) + "," +
                       std::to_string(i + 1) + "] + A[" + std::to_string(j + 1) + "," +
                       std::to_string(j + 1) + "] <= 2*A[" + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + "]");
  }
  mpz_class factorial;
  mpz_fac_ui(factorial.get_mpz_t(), a.n());
  const Rat diagonal_coeff{mpq_class(factorial)};

  std::vector<PuiseuxPoly> upper;
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = i; j < a.n(); ++j) {
      const Rat coeff = (i == j) ? diagonal_coeff : Rat(signs.sign(i, j));
      upper.push_back(PuiseuxPoly::monomial(coeff, a(i, j)));
    }
  }
  return PuiseuxMatrix(a.n(), std::move(upper));
}

PuiseuxPoly determinant(const PuiseuxMatrix& m) {
  if (m.n() > 20) throw CapacityError("Puiseux determinant supports n <= 20");
  std::vector<std::size_t> idx(m.n());
  for (std::size_t i = 0; i < m.n(); ++i) idx[i] = i;
  return subset_determinant(m, idx);
}

std::vector<PrincipalMinor> principal_minors(const PuiseuxMatrix& m) {
  if (m.n() > kPrincipalMinorsMaxN) {
    throw CapacityError("principal_minors expands 2^n - 1 symbolic determinants and accepts n <= " +
                        std::to_string(kPrincipalMinorsMaxN));
  }
  std::vector<PrincipalMinor> minors;
  for (auto& subset : nonempty_subsets_by_size(m.n())) {
    PuiseuxPoly value = subset_determinant(m, subset);
    minors.push_back({std::move(subset), std::move(value)});
  }
  return minors;
}

bool verify_witness(const PuiseuxMatrix& m, const SymMatrix& a) {
  if (m.n() != a.n()) throw InvalidInput("witness and matrix dimensions differ");
  if (m.valuation() != a) return false;
  const auto minors = principal_minors(m);
  return std::all_of(minors.begin(), minors.end(),
                     [](const PrincipalMinor& pm) { return pm.value.is_positive(); });
}

mpz_class exponent_denominator_lcm(const PuiseuxMatrix& m) {
  mpz_class l = 1;
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = i; j < m.n(); ++j) {
      for (const auto& term : m(i, j).terms()) l = lcm(l, term.exponent.denominator());
    }
  }
  return l;
}

Matrix specialize(const PuiseuxMatrix& m, const Rat& u) {
  if (u.sign() <= 0) throw InvalidInput("specialization point must be positive");
  const Rat scale{mpq_class(exponent_denominator_lcm(m))};
  Matrix out(m.n(), m.n());
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = i; j < m.n(); ++j) {
      Rat value(0);
      for (const auto& term : m(i, j).terms()) {
        const Rat e = term.exponent * scale;
        value += term.coefficient * pow(u, e.numerator().get_si());
      }
      out(i, j) = value;
      out(j, i) = value;
    }
  }
  return out;
}

Rat specialization_threshold(const PuiseuxMatrix& m) {
  // In the variable u (t = u^L) every exponent gap is a positive integer, so
  // for u < 1 the tail is bounded by u * sum |c_k| and cannot flip the sign
  // while u * sum |c_k| < |c_0|.
  Rat threshold(1);
  for (const auto& minor : principal_minors(m)) {
    const auto& terms = minor.value.terms();
    if (terms.empty()) continue;
    Rat tail(0);
    for (std::size_t k = 1; k < terms.size(); ++k) tail += terms[k].coefficient.abs();
    if (tail.is_zero()) continue;
    threshold = std::min(threshold, terms.front().coefficient.abs() / tail);
  }
  return threshold;
}

bool specialize_and_check(const PuiseuxMatrix& m, const Rat& u) {
  if (u.sign() <= 0 || u >= Rat(1)) {
    throw InvalidInput("specialization point must satisfy 0 < u < 1, got " + u.str());
  }
  if (m.n() > kPrincipalMinorsMaxN) {
    throw CapacityError("specialize_and_check accepts n <= " + std::to_string(kPrincipalMinorsMaxN));
  }
  const Matrix values = specialize(m, u);
  for (const auto& subset : nonempty_subsets_by_size(m.n())) {
    Matrix sub(subset.size(), subset.size());
    for (std::size_t a = 0; a < subset.size(); ++a) {
      for (std::size_t b = 0; b < subset.size(); ++b) sub(a, b) = values(subset[a], subset[b]);
    }
    if (rational_determinant(sub).sign() <= 0) return false;
  }
  return true;
}

Rat rational_determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  Matrix work = m;
  const std::size_t n = work.rows();
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(work(pivot, j), work(col, j));
      det = -det;
    }
    det *= work(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (work(r, col).is_zero()) continue;
      const Rat factor = work(r, col) / work(col, col);
      for (std::size_t j = col; j < n; ++j) work(r, j) -= factor * work(col, j);
    }
  }
  return det;
}

}  // namespace tropsd
