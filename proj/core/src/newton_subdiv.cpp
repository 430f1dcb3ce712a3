#include "tropsd/newton_subdiv.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>

#include "tropsd/errors.hpp"

namespace tropsd {
namespace {

using Bits = std::uint64_t;

// Extreme ray of the homogenized cone {(lambda, s) : lambda.p - s h(p) >= 0,
// s >= 0} together with the set of processed constraints it makes tight.
struct Ray {
  Vector x;
  Bits tight = 0;
};

Rat dot(const Vector& row, const Vector& x) {
  Rat sum(0);
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (!row[k].is_zero()) sum += row[k] * x[k];
  }
  return sum;
}

// Positive rescaling so the first nonzero coordinate is +-1.
void normalize(Vector& x) {
  for (const auto& v : x) {
    if (v.is_zero()) continue;
    const Rat scale = v.abs();
    for (auto& w : x) w /= scale;
    return;
  }
}

void check_capacity(const SymMatrix& a) {
  if (a.n() == 0) throw InvalidInput("hull of an empty matrix");
  if (a.n() > kHullMaxN) {
    throw CapacityError("hull routines accept n <= " + std::to_string(kHullMaxN) + ", got n = " +
                        std::to_string(a.n()));
  }
}

// Vertices of {lambda : lambda_i + lambda_j >= A(i, j) for all i <= j} by the
// double description method. Each vertex is the canonical functional of one
// upper facet.
std::vector<Vector> dominating_vertices(const SymMatrix& a) {
  const std::size_t n = a.n();
  const std::size_t dim = n + 1;  // lambda_0..lambda_{n-1}, s
  const auto points = lattice_points(n);

  // Constraint 0 is s >= 0; constraint 1 + k belongs to points[k].
  std::vector<Vector> rows;
  Vector s_row(dim, Rat(0));
  s_row[n] = Rat(1);
  rows.push_back(std::move(s_row));
  for (const auto& p : points) {
    Vector row(dim, Rat(0));
    row[p.i] += Rat(1);
    row[p.j] += Rat(1);
    row[n] = -height(a, p);
    rows.push_back(std::move(row));
  }

  // Start from the simplicial cone cut out by s >= 0 and the n diagonal
  // points (i, i); its rays are (diag(A)/2, 1) and the unit vectors e_i.
  std::vector<std::size_t> diagonal_rows;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k].i == points[k].j) diagonal_rows.push_back(1 + k);
  }
  Bits initial = Bits{1};
  for (std::size_t r : diagonal_rows) initial |= Bits{1} << r;

  std::vector<Ray> rays;
  {
    Vector apex(dim, Rat(0));
    for (std::size_t i = 0; i < n; ++i) apex[i] = a(i, i).half();
    apex[n] = Rat(1);
    normalize(apex);
    rays.push_back({std::move(apex), initial & ~Bits{1}});
    for (std::size_t i = 0; i < n; ++i) {
      Vector e(dim, Rat(0));
      e[i] = Rat(1);
      rays.push_back({std::move(e), initial & ~(Bits{1} << diagonal_rows[i])});
    }
  }

  for (std::size_t c = 0; c < rows.size(); ++c) {
    if (initial & (Bits{1} << c)) continue;
    const Bits bit = Bits{1} << c;

    std::vector<Rat> value;
    value.reserve(rays.size());
    for (const auto& r : rays) value.push_back(dot(rows[c], r.x));

    std::vector<Ray> next;
    std::vector<std::size_t> positive, negative;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      const int sign = value[k].sign();
      if (sign > 0) {
        positive.push_back(k);
        next.push_back(rays[k]);
      } else if (sign == 0) {
        next.push_back({rays[k].x, rays[k].tight | bit});
      } else {
        negative.push_back(k);
      }
    }

    for (std::size_t p : positive) {
      for (std::size_t q : negative) {
        const Bits common = rays[p].tight & rays[q].tight;
        if (static_cast<std::size_t>(std::popcount(common)) + 2 < dim) continue;
        // Combinatorial adjacency: no third ray is tight on all of `common`.
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k != p && k != q && (rays[k].tight & common) == common) adjacent = false;
        }
        if (!adjacent) continue;
        Vector x(dim);
        for (std::size_t t = 0; t < dim; ++t) {
          x[t] = value[p] * rays[q].x[t] - value[q] * rays[p].x[t];
        }
        normalize(x);
        next.push_back({std::move(x), common | bit});
      }
    }
    rays = std::move(next);
  }

  std::vector<Vector> vertices;
  for (const auto& r : rays) {
    if (r.x[n].sign() <= 0) continue;  // recession direction
    Vector lambda(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(n));
    for (auto& v : lambda) v /= r.x[n];
    vertices.push_back(std::move(lambda));
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

}  // namespace

std::vector<LatticePoint> lattice_points(std::size_t n) {
  std::vector<LatticePoint> points;
  points.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) points.push_back({i, j});
  }
  return points;
}

std::vector<UpperFacet> upper_facets(const SymMatrix& a) {
  check_capacity(a);
  const auto points = lattice_points(a.n());
  std::vector<UpperFacet> facets;
  for (auto& lambda : dominating_vertices(a)) {
    UpperFacet f{AffineFunctional{std::move(lambda)}, {}};
    for (const auto& p : points) {
      if (f.functional(p) == height(a, p)) f.touching_set.push_back(p);
    }
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end(), [](const UpperFacet& x, const UpperFacet& y) {
    return x.touching_set < y.touching_set;
  });
  return facets;
}

Subdivision lower_subdivision(const SymMatrix& a) {
  check_capacity(a);
  // Negating the heights exchanges lower and upper hulls.
  Subdivision s;
  for (auto& facet : upper_facets(-a)) s.cells.push_back(std::move(facet.touching_set));
  std::sort(s.cells.begin(), s.cells.end());
  return s;
}

bool is_psd_by_subdivision(const SymMatrix& a) { return is_trivial(lower_subdivision(a)); }

}  // namespace tropsd
