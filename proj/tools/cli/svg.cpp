#include "cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <vector>

#include "tropsd/errors.hpp"
#include "tropsd/newton_subdiv.hpp"

namespace tropsd::cli {
namespace {

struct Pixel {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Pixel&, const Pixel&) = default;
};

// Corners 2e_1, 2e_2, 2e_3. Every lattice point is the average of two
// corners and all coordinates are even, so pixels stay integral.
constexpr std::array<Pixel, 3> kCorners = {Pixel{60, 420}, Pixel{460, 420}, Pixel{260, 74}};

constexpr std::array<const char*, 6> kCellFills = {"#cfe2f3", "#f4cccc", "#d9ead3",
                                                   "#fff2cc", "#d9d2e9", "#fce5cd"};

Pixel to_pixel(const LatticePoint& p) {
  return {(kCorners[p.i].x + kCorners[p.j].x) / 2, (kCorners[p.i].y + kCorners[p.j].y) / 2};
}

std::int64_t cross(const Pixel& o, const Pixel& a, const Pixel& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Monotone chain; collinear points are dropped.
std::vector<Pixel> convex_hull(std::vector<Pixel> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Pixel> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

std::string render_subdivision_svg(const SymMatrix& a) {
  if (a.n() != 3) throw InvalidInput("svg rendering is only defined for n = 3, got n = " + std::to_string(a.n()));
  const Subdivision sub = lower_subdivision(a);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"480\" viewBox=\"0 0 520 480\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"520\" height=\"480\" fill=\"white\"/>\n";
  os << "  <text x=\"260\" y=\"30\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">"
     << "Regular subdivision of 2*Delta_2: " << sub.cells.size() << (sub.cells.size() == 1 ? " cell" : " cells")
     << (is_trivial(sub) ? " (trivial)" : " (nontrivial)") << "</text>\n";

  os << "  <g id=\"cells\" stroke=\"black\" stroke-width=\"2\" stroke-linejoin=\"round\">\n";
  for (std::size_t c = 0; c < sub.cells.size(); ++c) {
    std::vector<Pixel> pts;
    for (const auto& p : sub.cells[c]) pts.push_back(to_pixel(p));
    os << "    <polygon points=\"";
    bool first = true;
    for (const auto& px : convex_hull(std::move(pts))) {
      os << (first ? "" : " ") << px.x << ',' << px.y;
      first = false;
    }
    os << "\" fill=\"" << kCellFills[c % kCellFills.size()] << "\"/>\n";
  }
  os << "  </g>\n";

  os << "  <g id=\"points\" font-family=\"sans-serif\" font-size=\"13\">\n";
  for (const auto& p : lattice_points(3)) {
    const bool on_hull = std::any_of(sub.cells.begin(), sub.cells.end(), [&](const PointSet& cell) {
      return std::binary_search(cell.begin(), cell.end(), p);
    });
    const Pixel px = to_pixel(p);
    os << "    <circle cx=\"" << px.x << "\" cy=\"" << px.y << "\" r=\"6\" stroke=\"black\" stroke-width=\"1.5\" fill=\""
       << (on_hull ? "black" : "white") << "\"/>\n";
    os << "    <text x=\"" << px.x + 10 << "\" y=\"" << px.y - 10 << "\">a" << p.i + 1 << p.j + 1 << " = "
       << height(a, p) << "</text>\n";
  }
  os << "  </g>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace tropsd::cli
