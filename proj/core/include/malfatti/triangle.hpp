#ifndef MALFATTI_TRIANGLE_HPP
#define MALFATTI_TRIANGLE_HPP

#include <array>

namespace malfatti {

enum class Vertex : int { A = 0, B = 1, C = 2 };

constexpr int index(Vertex v) { return static_cast<int>(v); }
constexpr Vertex next(Vertex v) { return static_cast<Vertex>((index(v) + 1) % 3); }
constexpr Vertex prev(Vertex v) { return static_cast<Vertex>((index(v) + 2) % 3); }

/// A validated triangle given by its side lengths a = BC, b = CA, c = AB.
///
/// Construction enforces positivity and a strict triangle inequality with a
/// relative margin: triangles with min(s-a, s-b, s-c) < 1e-9 * s are rejected,
/// since the hyperbolic parameters of the excircle families blow up there.
class Triangle {
 public:
  static Triangle from_sides(double a, double b, double c);

  // Angles in radians; the third angle is pi - a - b. Sides follow the law of
  // sines with side c equal to `scale`.
  static Triangle from_angles(double angle_a, double angle_b, double scale);

  double a() const { return sides_[0]; }
  double b() const { return sides_[1]; }
  double c() const { return sides_[2]; }

  // Side opposite the given vertex.
  double side(Vertex v) const { return sides_[index(v)]; }

  Triangle scaled(double k) const { return Triangle(k * a(), k * b(), k * c()); }

 private:
  Triangle(double a, double b, double c) : sides_{a, b, c} {}
  std::array<double, 3> sides_;
};

/// Scalar quantities derived from the side lengths.
struct DerivedQuantities {
  std::array<double, 3> side;        // a, b, c
  double s = 0;                      // semiperimeter
  std::array<double, 3> s_minus;     // s-a, s-b, s-c
  double r = 0;                      // inradius
  std::array<double, 3> exradius;    // r_A, r_B, r_C
  std::array<double, 3> angle;       // interior angles (radians)
  std::array<double, 3> cot_half;    // cot(angle/2) = (s - side)/r
  std::array<double, 3> tan_half;    // tan(angle/2) = r/(s - side)

  double angle_at(Vertex v) const { return angle[index(v)]; }
  double exradius_at(Vertex v) const { return exradius[index(v)]; }
};

DerivedQuantities derive(const Triangle& t);

/// Auxiliary angle arguments of the radius formulas.
///
/// Trigonometric set: sin^2(alpha) = a/s, sin^2(beta) = b/s,
/// sin^2(gamma) = c/s, sigma = (alpha+beta+gamma)/2.
///
/// One hyperbolic set per excircle family V in {A,B,C}; for V = A:
/// sinh^2(alpha_A) = a/(s-a), sinh^2(beta_A) = (s-c)/(s-a),
/// sinh^2(gamma_A) = (s-b)/(s-a). The B and C sets are the cyclic relabelings.
struct AuxiliaryAngles {
  struct AngleSet {
    double alpha = 0;
    double beta = 0;
    double gamma = 0;
    double sigma = 0;
  };
  AngleSet trig;
  std::array<AngleSet, 3> hyperbolic;

  const AngleSet& hyperbolic_at(Vertex v) const { return hyperbolic[index(v)]; }
};

AuxiliaryAngles auxiliary_angles(const DerivedQuantities& q);

}  // namespace malfatti

#endif
