#include "cli/random_instances.hpp"

#include <array>

#include "tropsd/psd_cone.hpp"

namespace tropsd::cli {
namespace {

const std::array<Rat, 7> kEntryGrid = {Rat(-2), Rat(-1), Rat(-1, 2), Rat(0),
                                       Rat(1, 2), Rat(1), Rat(2)};

const std::array<Rat, 13> kLinealityGrid = {Rat(-2),   Rat(-3, 2), Rat(-1),  Rat(-2, 3), Rat(-1, 2),
                                            Rat(-1, 3), Rat(0),     Rat(1, 3), Rat(1, 2),  Rat(2, 3),
                                            Rat(1),     Rat(3, 2),  Rat(2)};

// Zero is repeated so that roughly a third of the ray coefficients sit on
// the boundary of the cone.
const std::array<Rat, 9> kRayGrid = {Rat(0),    Rat(0), Rat(0),    Rat(1, 3), Rat(1, 2),
                                     Rat(1),    Rat(3, 2), Rat(2), Rat(3)};

const std::array<Rat, 11> kMatrixGrid = {Rat(-3),   Rat(-2), Rat(-1), Rat(-1, 2), Rat(-1, 3), Rat(0),
                                         Rat(1, 3), Rat(1, 2), Rat(1), Rat(2),      Rat(3)};

}  // namespace

Rat InstanceSampler::pick(std::span<const Rat> grid) { return grid[uniform_index(grid.size())]; }

SymMatrix InstanceSampler::member(std::size_t n) {
  ConeCombination c;
  for (std::size_t i = 0; i < n; ++i) c.lineality_coeffs.push_back(pick(kLinealityGrid));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) c.ray_coeffs.emplace(IndexPair{i, j}, pick(kRayGrid));
  }
  return c.reconstruct();
}

SymMatrix InstanceSampler::any(std::size_t n) {
  SymMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) a(i, j) = pick(kEntryGrid);
  }
  return a;
}

Matrix InstanceSampler::matrix(std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = pick(kMatrixGrid);
  }
  return m;
}

}  // namespace tropsd::cli
