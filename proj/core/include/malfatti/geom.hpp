#ifndef MALFATTI_GEOM_HPP
#define MALFATTI_GEOM_HPP

#include <cmath>

namespace malfatti {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double k, Vec2 v) { return {k * v.x, k * v.y}; }
inline Vec2 operator*(Vec2 v, double k) { return {k * v.x, k * v.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

inline Vec2 normalized(Vec2 v) {
  const double n = norm(v);
  return {v.x / n, v.y / n};
}

// Unsigned distance from p to the infinite line through q with direction d (unit).
inline double distance_to_line(Vec2 p, Vec2 q, Vec2 d) {
  return std::abs(cross(d, p - q));
}

// Orthogonal projection of p onto the line through q with direction d (unit).
inline Vec2 project_onto_line(Vec2 p, Vec2 q, Vec2 d) {
  return q + dot(p - q, d) * d;
}

}  // namespace malfatti

#endif
