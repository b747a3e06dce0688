#ifndef MALFATTI_TESTS_SUPPORT_HPP
#define MALFATTI_TESTS_SUPPORT_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "malfatti/malfatti.hpp"

namespace testsupport {

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

inline double triplet_rel_err(const malfatti::RadiiTriplet& got, const malfatti::RadiiTriplet& want) {
  return std::max({rel_err(got.r1, want.r1), rel_err(got.r2, want.r2), rel_err(got.r3, want.r3)});
}

// Well-conditioned random triangle: all angles at least ~14 degrees, scales
// spanning two decades. Scalene draws also keep the angles pairwise apart.
inline malfatti::Triangle random_triangle(std::mt19937_64& rng, bool scalene = true) {
  std::uniform_real_distribution<double> angle_dist(0.25, 2.2);
  std::uniform_real_distribution<double> log_scale(-1.0, 1.0);
  for (;;) {
    const double a = angle_dist(rng);
    const double b = angle_dist(rng);
    const double c = std::numbers::pi - a - b;
    if (c < 0.25) continue;
    if (scalene &&
        (std::abs(a - b) < 0.05 || std::abs(b - c) < 0.05 || std::abs(a - c) < 0.05)) {
      continue;
    }
    const double scale = std::pow(10.0, log_scale(rng));
    return malfatti::Triangle::from_angles(a, b, scale);
  }
}

inline malfatti::Triangle permuted(const malfatti::Triangle& t, int perm) {
  const double s[3] = {t.a(), t.b(), t.c()};
  static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                       {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const int* p = kPerms[perm];
  return malfatti::Triangle::from_sides(s[p[0]], s[p[1]], s[p[2]]);
}

// Sorted radii of each triplet, for multiset comparisons that ignore the
// assignment of circles to vertices.
inline std::vector<std::array<double, 3>> sorted_radii_multiset(
    const std::vector<malfatti::RadiiTriplet>& triplets) {
  std::vector<std::array<double, 3>> out;
  out.reserve(triplets.size());
  for (const auto& t : triplets) {
    std::array<double, 3> r = {t.r1, t.r2, t.r3};
    std::sort(r.begin(), r.end());
    out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool inside_triangle(const malfatti::Frame& f, malfatti::Vec2 p) {
  using malfatti::cross;
  const auto& v = f.vertex;
  const double s0 = cross(v[1] - v[0], p - v[0]);
  const double s1 = cross(v[2] - v[1], p - v[1]);
  const double s2 = cross(v[0] - v[2], p - v[2]);
  return (s0 > 0 && s1 > 0 && s2 > 0) || (s0 < 0 && s1 < 0 && s2 < 0);
}

// Distance from p to the infinite line through two triangle vertices.
inline double line_distance(const malfatti::Frame& f, malfatti::Vertex from, malfatti::Vertex to,
                            malfatti::Vec2 p) {
  const malfatti::Vec2 q = f.at(from);
  const malfatti::Vec2 d = malfatti::normalized(f.at(to) - q);
  return malfatti::distance_to_line(p, q, d);
}

// Worst constraint defect of a configuration: every circle at distance
// radius from its two carrier lines, every pair tangent.
inline double configuration_defect(const malfatti::Frame& f, const malfatti::Configuration& cfg) {
  using namespace malfatti;
  double worst = 0;
  const struct {
    int circle;
    Vertex from, to;
  } lines[6] = {
      {0, Vertex::C, Vertex::A}, {0, Vertex::A, Vertex::B},  // A' on CA and AB
      {1, Vertex::A, Vertex::B}, {1, Vertex::B, Vertex::C},  // B' on AB and BC
      {2, Vertex::B, Vertex::C}, {2, Vertex::C, Vertex::A},  // C' on BC and CA
  };
  for (const auto& l : lines) {
    const Circle& c = cfg.circles[l.circle];
    worst = std::max(worst, std::abs(line_distance(f, l.from, l.to, c.center) - c.radius));
  }
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : pairs) {
    const Circle& x = cfg.circles[pr[0]];
    const Circle& y = cfg.circles[pr[1]];
    const double d = distance(x.center, y.center);
    worst = std::max(worst, std::min(std::abs(d - (x.radius + y.radius)),
                                     std::abs(d - std::abs(x.radius - y.radius))));
  }
  return worst;
}

// Extracts the three geometry circles back out of a rendered SVG (the group
// stroked in the circle color), undoing the y flip.
inline std::vector<malfatti::Circle> parse_svg_circles(const std::string& svg) {
  std::vector<malfatti::Circle> out;
  const size_t group = svg.find("stroke=\"#2060c0\"");
  if (group == std::string::npos) return out;
  const size_t end = svg.find("</g>", group);
  size_t pos = group;
  while (true) {
    pos = svg.find("<circle", pos);
    if (pos == std::string::npos || pos > end) break;
    auto attr = [&](const char* name) {
      const std::string needle = std::string(name) + "=\"";
      const size_t at = svg.find(needle, pos);
      return std::stod(svg.substr(at + needle.size()));
    };
    out.push_back({{attr("cx"), -attr("cy")}, attr("r")});
    pos += 7;
  }
  return out;
}

// Worst tangency defect of three parsed circles against the triangle frame:
// each circle against its two carrier lines, plus the three pairwise contacts.
inline double parsed_circle_defect(const malfatti::Frame& f,
                                   const std::vector<malfatti::Circle>& circles) {
  using namespace malfatti;
  if (circles.size() != 3) return std::numeric_limits<double>::infinity();
  Configuration cfg;
  cfg.circles = {circles[0], circles[1], circles[2]};
  return configuration_defect(f, cfg);
}

}  // namespace testsupport

#endif
