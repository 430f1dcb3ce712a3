#include "tropsd/factor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "tropsd/errors.hpp"
#include "tropsd/psd_cone.hpp"
#include "tropsd/trop_core.hpp"

namespace tropsd {
namespace {

using Mask = std::uint32_t;

void require_member(const SymMatrix& a, const char* what) {
  if (a.n() == 0) throw InvalidInput(std::string(what) + ": empty matrix");
  const auto verdict = is_trop_psd_inequalities(a);
  if (verdict.is_member) return;
  const auto [i, j] = *verdict.violated_pair;
  throw InvalidInput(std::string(what) + ": matrix is not tropical PSD (A[" + std::to_string(i + 1) +
                     "," + std::to_string(i + 1) + "] + A[" + std::to_string(j + 1) + "," +
                     std::to_string(j + 1) + "] > 2*A[" + std::to_string(i + 1) + "," +
                     std::to_string(j + 1) + "]); its symmetric Barvinok rank is infinite");
}

// Bit k stands for lattice_points(n)[k].
std::vector<Mask> touching_masks(const std::vector<UpperFacet>& facets, std::size_t n) {
  const auto points = lattice_points(n);
  std::vector<Mask> masks;
  for (const auto& f : facets) {
    Mask m = 0;
    for (const auto& p : f.touching_set) {
      const auto it = std::lower_bound(points.begin(), points.end(), p);
      m |= Mask{1} << (it - points.begin());
    }
    masks.push_back(m);
  }
  return masks;
}

std::vector<std::size_t> greedy_cover(const std::vector<Mask>& masks, Mask universe) {
  std::vector<std::size_t> chosen;
  Mask uncovered = universe;
  while (uncovered != 0) {
    std::size_t best = masks.size();
    int best_gain = 0;
    for (std::size_t k = 0; k < masks.size(); ++k) {
      const int gain = std::popcount(masks[k] & uncovered);
      if (gain > best_gain) {
        best = k;
        best_gain = gain;
      }
    }
    if (best == masks.size()) throw Error("lattice point not covered by any upper facet");
    chosen.push_back(best);
    uncovered &= ~masks[best];
  }
  return chosen;
}

class CoverSearch {
 public:
  CoverSearch(const std::vector<Mask>& masks, Mask universe)
      : masks_(masks), universe_(universe), best_(greedy_cover(masks, universe)) {}

  // Lexicographically least cover among those of minimum size.
  std::vector<std::size_t> run() {
    std::vector<std::size_t> chosen;
    search(universe_, chosen);
    const std::size_t size = best_.size();
    last_cover_.assign(32, 0);
    for (std::size_t k = 0; k < masks_.size(); ++k) {
      for (int e = 0; e < 32; ++e) {
        if (masks_[k] & (Mask{1} << e)) last_cover_[e] = k + 1;
      }
    }
    chosen.clear();
    if (!first_in_order(universe_, 0, size, chosen)) throw Error("minimum cover lost in canonical pass");
    return chosen;
  }

 private:
  bool first_in_order(Mask uncovered, std::size_t from, std::size_t size, std::vector<std::size_t>& chosen) {
    if (uncovered == 0) return true;
    if (chosen.size() == size) return false;
    int widest = 0;
    for (int e = 0; e < 32; ++e) {
      if ((uncovered & (Mask{1} << e)) && last_cover_[e] <= from) return false;
    }
    for (std::size_t k = from; k < masks_.size(); ++k) widest = std::max(widest, std::popcount(masks_[k] & uncovered));
    if (widest == 0) return false;
    const std::size_t remaining = static_cast<std::size_t>(std::popcount(uncovered));
    if (chosen.size() + (remaining + widest - 1) / static_cast<std::size_t>(widest) > size) return false;
    for (std::size_t k = from; k < masks_.size(); ++k) {
      if (!(masks_[k] & uncovered)) continue;
      chosen.push_back(k);
      if (first_in_order(uncovered & ~masks_[k], k + 1, size, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  void search(Mask uncovered, std::vector<std::size_t>& chosen) {
    if (uncovered == 0) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    int widest = 0;
    for (Mask m : masks_) widest = std::max(widest, std::popcount(m & uncovered));
    if (widest == 0) return;
    const std::size_t remaining = static_cast<std::size_t>(std::popcount(uncovered));
    const std::size_t lower = (remaining + widest - 1) / static_cast<std::size_t>(widest);
    if (chosen.size() + lower >= best_.size()) return;

    // Branch on the uncovered point with the fewest covering facets.
    int pivot = -1;
    std::size_t fewest = masks_.size() + 1;
    for (int e = 0; e < 32; ++e) {
      if (!(uncovered & (Mask{1} << e))) continue;
      std::size_t count = 0;
      for (Mask m : masks_) count += (m >> e) & 1u;
      if (count < fewest) {
        fewest = count;
        pivot = e;
      }
    }
    for (std::size_t k = 0; k < masks_.size(); ++k) {
      if (!(masks_[k] & (Mask{1} << pivot))) continue;
      chosen.push_back(k);
      search(uncovered & ~masks_[k], chosen);
      chosen.pop_back();
    }
  }

  const std::vector<Mask>& masks_;
  Mask universe_;
  std::vector<std::size_t> best_;
  std::vector<std::size_t> last_cover_;  // one past the last facet covering each point
};

// a . x >= rhs
struct Inequality {
  Vector a;
  Rat rhs;

  friend bool operator==(const Inequality&, const Inequality&) = default;
  friend auto operator<=>(const Inequality& x, const Inequality& y) {
    if (auto c = x.a <=> y.a; c != 0) return c;
    return x.rhs <=> y.rhs;
  }
};

// Scales so the first nonzero coefficient is +-1; a constraint without
// variables is left alone.
void normalize(Inequality& q) {
  for (const auto& v : q.a) {
    if (v.is_zero()) continue;
    const Rat scale = v.abs();
    for (auto& w : q.a) w /= scale;
    q.rhs /= scale;
    return;
  }
}

// Decides {x : eq_a x = eq_b, ineq} != {} exactly.
bool feasible(std::vector<Inequality> equalities, std::vector<Inequality> inequalities,
              std::size_t vars) {
  // Gaussian elimination: each pivot equality eliminates one variable from
  // every other constraint.
  std::vector<bool> eliminated(vars, false);
  for (std::size_t r = 0; r < equalities.size(); ++r) {
    auto& eq = equalities[r];
    std::size_t col = vars;
    for (std::size_t c = 0; c < vars; ++c) {
      if (!eq.a[c].is_zero()) {
        col = c;
        break;
      }
    }
    if (col == vars) {
      if (!eq.rhs.is_zero()) return false;
      continue;
    }
    eliminated[col] = true;
    const Rat pivot = eq.a[col];
    auto eliminate = [&](Inequality& other) {
      if (other.a[col].is_zero()) return;
      const Rat factor = other.a[col] / pivot;
      for (std::size_t c = 0; c < vars; ++c) other.a[c] -= factor * eq.a[c];
      other.rhs -= factor * eq.rhs;
    };
    for (std::size_t s = 0; s < equalities.size(); ++s) {
      if (s != r) eliminate(equalities[s]);
    }
    for (auto& q : inequalities) eliminate(q);
  }

  // Fourier-Motzkin on the remaining variables.
  for (std::size_t col = 0; col < vars; ++col) {
    if (eliminated[col]) continue;
    std::vector<Inequality> lower, upper, rest;
    for (auto& q : inequalities) {
      const int s = q.a[col].sign();
      (s > 0 ? lower : (s < 0 ? upper : rest)).push_back(std::move(q));
    }
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        const Rat wl = -up.a[col];
        const Rat wu = lo.a[col];
        Inequality combined{Vector(vars), wl * lo.rhs + wu * up.rhs};
        for (std::size_t c = 0; c < vars; ++c) combined.a[c] = wl * lo.a[c] + wu * up.a[c];
        combined.a[col] = Rat(0);
        rest.push_back(std::move(combined));
      }
    }
    for (auto& q : rest) normalize(q);
    std::sort(rest.begin(), rest.end());
    rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
    inequalities = std::move(rest);
  }
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [](const Inequality& q) { return q.rhs.sign() <= 0; });
}

class RankOracle {
 public:
  explicit RankOracle(const SymMatrix& a)
      : a_(a), points_(lattice_points(a.n())), memo_(std::size_t{1} << points_.size()) {}

  bool coverable(std::size_t groups) {
    std::vector<Mask> members(groups, 0);
    return assign(0, 0, members);
  }

 private:
  // Some lambda with lambda.p = h(p) on the group and >= h(p) elsewhere.
  bool group_feasible(Mask group) {
    auto& slot = memo_[group];
    if (slot) return *slot;
    const std::size_t n = a_.n();
    std::vector<Inequality> eqs, ineqs;
    for (std::size_t k = 0; k < points_.size(); ++k) {
      Inequality q{Vector(n), height(a_, points_[k])};
      q.a[points_[k].i] += Rat(1);
      q.a[points_[k].j] += Rat(1);
      ((group >> k) & 1u ? eqs : ineqs).push_back(std::move(q));
    }
    slot = feasible(std::move(eqs), std::move(ineqs), n);
    return *slot;
  }

  // Restricted-growth enumeration: point k joins an existing group or opens
  // the next empty one, so each partition is visited once.
  bool assign(std::size_t k, std::size_t opened, std::vector<Mask>& members) {
    if (k == points_.size()) return true;
    const Mask bit = Mask{1} << k;
    const std::size_t limit = std::min(opened + 1, members.size());
    for (std::size_t g = 0; g < limit; ++g) {
      members[g] |= bit;
      if (group_feasible(members[g]) && assign(k + 1, std::max(opened, g + 1), members)) return true;
      members[g] &= ~bit;
    }
    return false;
  }

  const SymMatrix& a_;
  std::vector<LatticePoint> points_;
  std::vector<std::optional<bool>> memo_;
};

}  // namespace

SymMatrix RankOneDecomposition::reconstruct() const {
  if (vectors.empty()) throw InvalidInput("empty rank-one decomposition");
  SymMatrix result = rank_one_from_vector(vectors.front());
  for (std::size_t k = 1; k < vectors.size(); ++k) {
    const SymMatrix term = rank_one_from_vector(vectors[k]);
    if (term.n() != result.n()) throw InvalidInput("decomposition vectors differ in length");
    for (std::size_t i = 0; i < result.n(); ++i) {
      for (std::size_t j = i; j < result.n(); ++j) result(i, j) = std::min(result(i, j), term(i, j));
    }
  }
  return result;
}

std::size_t symmetric_rank_bound(std::size_t n) { return std::max(n, n * n / 4); }

RankOneDecomposition decompose_rank_one(const SymMatrix& a) {
  require_member(a, "decompose_rank_one");
  const auto facets = upper_facets(a);
  const auto masks = touching_masks(facets, a.n());
  const Mask universe = static_cast<Mask>((std::uint64_t{1} << lattice_points(a.n()).size()) - 1);
  RankOneDecomposition d;
  for (std::size_t k : greedy_cover(masks, universe)) d.vectors.push_back(facets[k].functional.lambda);
  return d;
}

std::vector<UpperFacet> minimum_facet_cover(const SymMatrix& a) {
  require_member(a, "symmetric_barvinok_rank");
  if (a.n() > kExactRankMaxN) {
    throw CapacityError("exact symmetric Barvinok rank accepts n <= " + std::to_string(kExactRankMaxN));
  }
  const auto facets = upper_facets(a);
  const auto masks = touching_masks(facets, a.n());
  const Mask universe = static_cast<Mask>((std::uint64_t{1} << lattice_points(a.n()).size()) - 1);
  std::vector<UpperFacet> cover;
  for (std::size_t k : CoverSearch(masks, universe).run()) cover.push_back(facets[k]);
  return cover;
}

std::size_t symmetric_barvinok_rank(const SymMatrix& a) { return minimum_facet_cover(a).size(); }

GramFactor gram_factor(const SymMatrix& a) {
  const auto d = decompose_rank_one(a);
  GramFactor g{Matrix(a.n(), d.vectors.size())};
  for (std::size_t k = 0; k < d.vectors.size(); ++k) {
    for (std::size_t i = 0; i < a.n(); ++i) g.b(i, k) = d.vectors[k][i];
  }
  return g;
}

bool rank_oracle_small(const SymMatrix& a, std::size_t r) {
  if (r == 0) throw InvalidInput("rank_oracle_small: r must be positive");
  if (a.n() == 0) throw InvalidInput("rank_oracle_small: empty matrix");
  if (a.n() > kRankOracleMaxN || r > kRankOracleMaxR) {
    throw CapacityError("rank_oracle_small accepts n <= " + std::to_string(kRankOracleMaxN) +
                        " and r <= " + std::to_string(kRankOracleMaxR));
  }
  return RankOracle(a).coverable(r);
}

}  // namespace tropsd
