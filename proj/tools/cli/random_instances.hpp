#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "tropsd/matrix.hpp"

namespace tropsd::cli {

// Seeded generator of random rational instances. The sequence depends only
// on the seed (mt19937_64 output reduced modulo the grid size).
class InstanceSampler {
 public:
  explicit InstanceSampler(std::uint64_t seed) : engine_(seed) {}

  // Tropical PSD matrix built from the cone parametrization: random
  // lineality coefficients plus nonnegative ray coefficients drawn from a
  // grid that includes 0 (so boundary matrices are common).
  SymMatrix member(std::size_t n);

  // Unconstrained symmetric matrix with entries in
  // {-2, -1, -1/2, 0, 1/2, 1, 2}.
  SymMatrix any(std::size_t n);

  // Dense matrix with small rational entries.
  Matrix matrix(std::size_t rows, std::size_t cols);

  Rat pick(std::span<const Rat> grid);
  std::size_t uniform_index(std::size_t size) { return static_cast<std::size_t>(engine_() % size); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tropsd::cli
