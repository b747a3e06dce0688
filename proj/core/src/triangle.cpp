#include "malfatti/triangle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "malfatti/errors.hpp"

namespace malfatti {

namespace {

constexpr double kDegeneracyGuard = 1e-9;  // relative to the semiperimeter

bool all_finite(double a, double b, double c) {
  return std::isfinite(a) && std::isfinite(b) && std::isfinite(c);
}

}  // namespace

Triangle Triangle::from_sides(double a, double b, double c) {
  if (!all_finite(a, b, c)) {
    throw NonFiniteInput("triangle sides must be finite");
  }
  if (a <= 0 || b <= 0 || c <= 0) {
    std::ostringstream msg;
    msg << "triangle sides must be positive, got (" << a << ", " << b << ", " << c << ")";
    throw NonPositiveSide(msg.str());
  }
  const double s = 0.5 * (a + b + c);
  struct Pair {
    double margin;
    const char* what;
  };
  const Pair pairs[3] = {
      {s - a, "b + c <= a"},
      {s - b, "c + a <= b"},
      {s - c, "a + b <= c"},
  };
  for (const Pair& p : pairs) {
    if (p.margin < kDegeneracyGuard * s) {
      std::ostringstream msg;
      msg << "triangle inequality violated or nearly violated: " << p.what
          << " within guard (sides " << a << ", " << b << ", " << c << ")";
      throw TriangleInequalityViolated(msg.str());
    }
  }
  return Triangle(a, b, c);
}

Triangle Triangle::from_angles(double angle_a, double angle_b, double scale) {
  if (!all_finite(angle_a, angle_b, scale)) {
    throw InvalidAngles("angles and scale must be finite");
  }
  const double angle_c = std::numbers::pi - angle_a - angle_b;
  if (angle_a <= 0 || angle_b <= 0 || angle_c <= 0 || scale <= 0) {
    std::ostringstream msg;
    msg << "invalid triangle angles A=" << angle_a << " rad, B=" << angle_b
        << " rad (need A > 0, B > 0, A + B < pi) with scale " << scale;
    throw InvalidAngles(msg.str());
  }
  const double k = scale / std::sin(angle_c);
  try {
    return from_sides(k * std::sin(angle_a), k * std::sin(angle_b), scale);
  } catch (const Error& e) {
    throw InvalidAngles(std::string("angles produce a degenerate triangle: ") + e.what());
  }
}

DerivedQuantities derive(const Triangle& t) {
  DerivedQuantities q;
  q.side = {t.a(), t.b(), t.c()};
  q.s = 0.5 * (t.a() + t.b() + t.c());
  for (int i = 0; i < 3; ++i) q.s_minus[i] = q.s - q.side[i];

  const double area = std::sqrt(q.s * q.s_minus[0] * q.s_minus[1] * q.s_minus[2]);
  q.r = area / q.s;
  for (int i = 0; i < 3; ++i) {
    q.exradius[i] = area / q.s_minus[i];
    // Half-angle tangent form; stable where arccos of the law of cosines is not.
    q.angle[i] = 2.0 * std::atan2(q.r, q.s_minus[i]);
    q.cot_half[i] = q.s_minus[i] / q.r;
    q.tan_half[i] = q.r / q.s_minus[i];
  }
  return q;
}

AuxiliaryAngles auxiliary_angles(const DerivedQuantities& q) {
  AuxiliaryAngles out;
  out.trig.alpha = std::asin(std::sqrt(q.side[0] / q.s));
  out.trig.beta = std::asin(std::sqrt(q.side[1] / q.s));
  out.trig.gamma = std::asin(std::sqrt(q.side[2] / q.s));
  out.trig.sigma = 0.5 * (out.trig.alpha + out.trig.beta + out.trig.gamma);

  // Family V, arguments (alpha_V, beta_V, gamma_V): the slot matching V holds
  // side_V/(s - side_V); the slot at position p != V holds
  // (s - side_{3-p-V})/(s - side_V). Family A: (a, s-c, s-b)/(s-a);
  // family B: (s-c, b, s-a)/(s-b); family C: (s-b, s-a, c)/(s-c).
  for (int v = 0; v < 3; ++v) {
    std::array<double, 3> num;
    for (int p = 0; p < 3; ++p) {
      num[p] = (p == v) ? q.side[v] : q.s_minus[3 - p - v];
    }
    auto& set = out.hyperbolic[v];
    set.alpha = std::asinh(std::sqrt(num[0] / q.s_minus[v]));
    set.beta = std::asinh(std::sqrt(num[1] / q.s_minus[v]));
    set.gamma = std::asinh(std::sqrt(num[2] / q.s_minus[v]));
    set.sigma = 0.5 * (set.alpha + set.beta + set.gamma);
  }
  return out;
}

}  // namespace malfatti
