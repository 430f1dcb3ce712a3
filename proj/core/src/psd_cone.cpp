#include "tropsd/psd_cone.hpp"

#include <algorithm>

#include "tropsd/errors.hpp"
#include "tropsd/trop_core.hpp"

namespace tropsd {

SymMatrix ConeCombination::reconstruct() const {
  const std::size_t n = lineality_coeffs.size();
  SymMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) a += lineality_coeffs[i] * lineality_generator(n, i);
  for (const auto& [pair, mu] : ray_coeffs) a += mu * unit_symmetric(n, pair.first, pair.second);
  return a;
}

bool ConeCombination::certifies_membership() const {
  return std::all_of(ray_coeffs.begin(), ray_coeffs.end(),
                     [](const auto& entry) { return entry.second.sign() >= 0; });
}

MembershipVerdict is_trop_psd_inequalities(const SymMatrix& a) {
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = i + 1; j < a.n(); ++j) {
      if (a(i, i) + a(j, j) > Rat(2) * a(i, j)) return {false, IndexPair{i, j}};
    }
  }
  return {};
}

bool is_trop_psd_det(const SymMatrix& a) {
  if (a.n() == 0) throw InvalidInput("membership test on an empty matrix");
  Rat diagonal_sum(0);
  for (std::size_t i = 0; i < a.n(); ++i) diagonal_sum += a(i, i);
  return diagonal_sum == trop_det_assignment(a);
}

bool principal_minor_identity_optimal(const SymMatrix& a, std::span<const std::size_t> subset) {
  if (subset.empty()) throw InvalidInput("principal minor needs a nonempty index set");
  std::vector<std::size_t> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("principal minor index set has duplicates");
  }
  return is_trop_psd_det(a.principal_submatrix(sorted));
}

ConeCombination cone_decompose(const SymMatrix& a) {
  ConeCombination c;
  c.lineality_coeffs.reserve(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) c.lineality_coeffs.push_back(a(i, i).half());
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = i + 1; j < a.n(); ++j) {
      c.ray_coeffs.emplace(IndexPair{i, j}, a(i, j) - (a(i, i) + a(j, j)).half());
    }
  }
  return c;
}

SymMatrix unit_symmetric(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw InvalidInput("generator index out of range");
  SymMatrix e(n);
  e(i, j) = Rat(1);
  return e;
}

SymMatrix lineality_generator(std::size_t n, std::size_t i) {
  if (i >= n) throw InvalidInput("generator index out of range");
  SymMatrix l(n);
  for (std::size_t j = 0; j < n; ++j) l(i, j) = Rat(j == i ? 2 : 1);
  return l;
}

ConeGenerators generators(std::size_t n) {
  if (n == 0) throw InvalidInput("generators: n must be positive");
  ConeGenerators g;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.rays.push_back(unit_symmetric(n, i, j));
  }
  for (std::size_t i = 0; i < n; ++i) g.lineality_basis.push_back(lineality_generator(n, i));
  return g;
}

}  // namespace tropsd
