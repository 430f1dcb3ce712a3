#pragma once

// Finite Puiseux polynomials sum_k c_k t^{e_k} with rational coefficients
// and rational exponents, ordered by the sign of the lowest-order
// coefficient (t is a positive infinitesimal). Used to certify tropical PSD
// matrices with an explicit PSD lift.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "tropsd/matrix.hpp"
#include "tropsd/rational.hpp"

namespace tropsd {

struct PuiseuxTerm {
  Rat exponent;
  Rat coefficient;

  friend bool operator==(const PuiseuxTerm&, const PuiseuxTerm&) = default;
};

class PuiseuxPoly {
 public:
  // The zero polynomial.
  PuiseuxPoly() = default;
  // Sorts by exponent, merges equal exponents and drops zero coefficients.
  explicit PuiseuxPoly(std::vector<PuiseuxTerm> terms);
  PuiseuxPoly(const Rat& constant);  // NOLINT(google-explicit-constructor)

  static PuiseuxPoly monomial(const Rat& coefficient, const Rat& exponent);

  // Strictly increasing exponents, no zero coefficients.
  const std::vector<PuiseuxTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Lowest exponent. Throws UndefinedValuation on zero.
  const Rat& valuation() const;
  // Coefficient of the lowest exponent. Throws UndefinedValuation on zero.
  const Rat& leading_coefficient() const;
  // p > 0 in the ordered field: nonzero with positive leading coefficient.
  bool is_positive() const;

  // Substitutes a rational value for t. Every exponent must be an integer.
  Rat evaluate_integral(const Rat& t) const;

  // "c*t^(e)" terms joined by " + " / " - ", e.g. "4*t^(0) - 1*t^(2)";
  // the zero polynomial renders as "0".
  std::string str() const;

  PuiseuxPoly& operator+=(const PuiseuxPoly& other);
  PuiseuxPoly& operator-=(const PuiseuxPoly& other);
  friend PuiseuxPoly operator+(PuiseuxPoly lhs, const PuiseuxPoly& rhs) { return lhs += rhs; }
  friend PuiseuxPoly operator-(PuiseuxPoly lhs, const PuiseuxPoly& rhs) { return lhs -= rhs; }
  friend PuiseuxPoly operator*(const PuiseuxPoly& lhs, const PuiseuxPoly& rhs);
  PuiseuxPoly operator-() const;

  friend bool operator==(const PuiseuxPoly&, const PuiseuxPoly&) = default;

 private:
  std::vector<PuiseuxTerm> terms_;
};

inline const Rat& valuation(const PuiseuxPoly& p) { return p.valuation(); }
inline bool is_positive(const PuiseuxPoly& p) { return p.is_positive(); }

std::ostream& operator<<(std::ostream& os, const PuiseuxPoly& p);

// Symmetric n x n matrix over the Puiseux polynomials with no zero entry.
class PuiseuxMatrix {
 public:
  // `upper` lists entries (i, j), i <= j, row by row. Throws InvalidInput on a
  // size mismatch or a zero entry.
  PuiseuxMatrix(std::size_t n, std::vector<PuiseuxPoly> upper);
  // Full row-major listing; must be square and symmetric.
  PuiseuxMatrix(std::initializer_list<std::initializer_list<PuiseuxPoly>> rows);

  std::size_t n() const { return n_; }
  const PuiseuxPoly& operator()(std::size_t i, std::size_t j) const;

  // Entrywise valuation.
  SymMatrix valuation() const;

 private:
  std::size_t n_ = 0;
  std::vector<PuiseuxPoly> upper_;
};

// Signs s_ij in {+1, -1} for the off-diagonal pairs i < j, stored in
// lexicographic pair order (0,1), (0,2), ..., (1,2), ...
class SignPattern {
 public:
  static SignPattern all_positive(std::size_t n);
  // Bit k of `bits` set means the k-th pair (lexicographic) is negative.
  static SignPattern from_bits(std::size_t n, unsigned long long bits);
  // One '+' or '-' per pair; throws InvalidInput on a bad length or symbol.
  static SignPattern parse(std::size_t n, const std::string& text);

  std::size_t n() const { return n_; }
  int sign(std::size_t i, std::size_t j) const;
  std::string str() const;

 private:
  SignPattern(std::size_t n, std::vector<int> signs) : n_(n), signs_(std::move(signs)) {}

  std::size_t n_ = 0;
  std::vector<int> signs_;
};

// Number of off-diagonal pairs, n (n - 1) / 2.
constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// Largest dimension for which all 2^n - 1 symbolic principal minors are
// expanded.
inline constexpr std::size_t kPrincipalMinorsMaxN = 7;

// Lift of a tropical PSD matrix: diagonal n! t^{A(i,i)}, off-diagonal
// s_ij t^{A(i,j)}. Throws InvalidInput if A is not in the cone or the sign
// pattern has the wrong dimension.
PuiseuxMatrix construct_witness(const SymMatrix& a, const SignPattern& signs);

struct PrincipalMinor {
  std::vector<std::size_t> subset;  // 0-based, increasing
  PuiseuxPoly value;
};

// Exact determinant over the Puiseux ring (Laplace expansion by subsets).
PuiseuxPoly determinant(const PuiseuxMatrix& m);

// All nonempty principal minors ordered by size, then lexicographically.
// Throws CapacityError for n > kPrincipalMinorsMaxN.
std::vector<PrincipalMinor> principal_minors(const PuiseuxMatrix& m);

// True iff val(M) == A entrywise and every principal minor of M is positive.
bool verify_witness(const PuiseuxMatrix& m, const SymMatrix& a);

// Least common multiple of all exponent denominators of M.
mpz_class exponent_denominator_lcm(const PuiseuxMatrix& m);

// Rational matrix obtained by substituting t = u^L, L the exponent lcm.
Matrix specialize(const PuiseuxMatrix& m, const Rat& u);

// u* in (0, 1] such that for every 0 < u < u*, every nonzero principal
// minor of M specialized at t = u^L has the sign of its leading coefficient.
Rat specialization_threshold(const PuiseuxMatrix& m);

// True iff every principal minor of specialize(m, u) is strictly positive.
// Throws InvalidInput unless 0 < u < 1.
bool specialize_and_check(const PuiseuxMatrix& m, const Rat& u);

// Exact determinant of a square rational matrix (Gaussian elimination over Q).
Rat rational_determinant(const Matrix& m);

}  // namespace tropsd
