#include "tropsd/rational.hpp"

#include <cctype>
#include <climits>
#include <ostream>
#include <utility>

#include "tropsd/errors.hpp"

namespace tropsd {
namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat::Rat(std::int64_t value) {
  // mpq_class has no int64 constructor on every platform; go through a string
  // only when the value does not fit a long.
  if (value >= LONG_MIN && value <= LONG_MAX) {
    value_ = mpq_class(static_cast<long>(value));
  } else {
    value_ = mpq_class(std::to_string(value));
  }
}

Rat::Rat(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw InvalidInput("rational with zero denominator");
  value_ = mpq_class(mpz_class(std::to_string(numerator)), mpz_class(std::to_string(denominator)));
  value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!is_digits(den)) throw InvalidInput("malformed rational '" + std::string(text) + "'");
  }
  std::string_view digits = num;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!is_digits(digits)) throw InvalidInput("malformed rational '" + std::string(text) + "'");

  mpz_class n(std::string(num), 10);
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) throw InvalidInput("rational with zero denominator '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rat(std::move(q));
}

std::string Rat::str() const { return value_.get_str(10); }

Rat Rat::abs() const { return Rat(mpq_class(::abs(value_))); }

Rat Rat::half() const {
  mpq_class q = value_ / 2;
  return Rat(std::move(q));
}

Rat& Rat::operator+=(const Rat& other) {
  value_ += other.value_;
  return *this;
}

Rat& Rat::operator-=(const Rat& other) {
  value_ -= other.value_;
  return *this;
}

Rat& Rat::operator*=(const Rat& other) {
  value_ *= other.value_;
  return *this;
}

Rat& Rat::operator/=(const Rat& other) {
  if (other.is_zero()) throw InvalidInput("division by zero");
  value_ /= other.value_;
  return *this;
}

Rat Rat::operator-() const { return Rat(mpq_class(-value_)); }

Rat pow(const Rat& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw InvalidInput("zero raised to a negative power");
    return pow(Rat(1) / base, -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.value().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.value().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(mpq_class(num, den));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace tropsd
