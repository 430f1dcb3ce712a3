#pragma once

#include <cstdint>

#include "cli/random_instances.hpp"
#include "tropsd/matrix.hpp"

namespace tropsd::testing {

inline Rat R(std::int64_t p, std::int64_t q = 1) { return Rat(p, q); }

inline SymMatrix zero(std::size_t n) { return SymMatrix(n); }

// 0 diagonal, 1 off-diagonal.
inline SymMatrix ones_off_diagonal(std::size_t n) {
  SymMatrix a(n, Rat(1));
  for (std::size_t i = 0; i < n; ++i) a(i, i) = Rat(0);
  return a;
}

}  // namespace tropsd::testing
