#include "hextile/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hextile {

namespace {

constexpr double kScale = 40.0;  // pixels per lattice unit

struct Point {
  int p, q;  // lattice corner in lane coordinates (third lane is -p-q)
  friend auto operator<=>(const Point&, const Point&) = default;
};

// Corners of a cell are the three surrounding lattice points.
std::array<Point, 3> corners(const TriCell& c) {
  int u = c.u, v = c.v;
  if (c.orient == Orient::kUp) return {Point{u + 1, v}, Point{u, v + 1}, Point{u, v}};
  return {Point{u, v + 1}, Point{u + 1, v}, Point{u + 1, v + 1}};
}

// Planar position: x = q + p/2, y = p * sqrt(3)/2, drawn y-down.
std::pair<double, double> to_xy(const Point& pt) {
  return {kScale * (pt.q + pt.p / 2.0), -kScale * (pt.p * std::sqrt(3.0) / 2.0)};
}

std::string format_points(const std::array<Point, 4>& quad) {
  std::string out;
  char buf[64];
  for (const Point& pt : quad) {
    auto [x, y] = to_xy(pt);
    std::snprintf(buf, sizeof buf, "%s%.2f,%.2f", out.empty() ? "" : " ", x, y);
    out += buf;
  }
  return out;
}

// The rhombus boundary: far tip of one cell, shared corner, far tip of the
// other cell, remaining shared corner.
std::array<Point, 4> lozenge_quad(const Lozenge& l) {
  auto ca = corners(l.a), cb = corners(l.b);
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  std::array<Point, 2> shared{};
  std::array<Point, 1> only_a{}, only_b{};
  std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), shared.begin());
  std::set_difference(ca.begin(), ca.end(), cb.begin(), cb.end(), only_a.begin());
  std::set_difference(cb.begin(), cb.end(), ca.begin(), ca.end(), only_b.begin());
  return {only_a[0], shared[0], only_b[0], shared[1]};
}

}  // namespace

std::string render_tiling_svg(int n, std::uint64_t index, const OracleOptions& opts) {
  bool found = false;
  Tiling picked;
  std::uint64_t seen = 0;
  enumerate_tilings(n, [&](const Tiling& t) {
    if (seen++ == index) {
      picked = t;
      found = true;
      return false;
    }
    return true;
  }, opts);
  if (!found) {
    std::ostringstream msg;
    msg << "tiling index " << index << " out of range (side " << n << " has " << seen
        << " tilings)";
    throw std::out_of_range(msg.str());
  }

  double half = kScale * n + 2.0;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << -half << " " << -half
      << " " << 2 * half << " " << 2 * half << "\">\n";
  for (const Lozenge& l : picked.lozenges)
    svg << "  <polygon points=\"" << format_points(lozenge_quad(l))
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace hextile
