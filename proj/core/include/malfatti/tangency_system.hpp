#ifndef MALFATTI_TANGENCY_SYSTEM_HPP
#define MALFATTI_TANGENCY_SYSTEM_HPP

#include <array>
#include <vector>

#include "malfatti/closed_form.hpp"
#include "malfatti/triangle.hpp"

namespace malfatti {

/// The normalized six-equation tangency system of one family.
///
/// Incircle family (parameters l, m, n = the half-angle cotangents,
/// scale the inradius):
///   p2*y + p3*z + 2u = p2 + p3
///   p1*x + p3*z + 2v = p1 + p3
///   p1*x + p2*y + 2w = p1 + p2
///   x*y = w^2,  x*z = v^2,  y*z = u^2
/// with x, y, z the circle radii divided by the inradius.
///
/// Excircle families (parameters l = cot of the distinguished half-angle and
/// the tan of the other two half-angles, scale the matching exradius):
///   p2*y + p3*z - 2u = p2 + p3
///   p1*x - p3*z + 2v = p1 - p3
///   p1*x - p2*y + 2w = p1 - p2
///   x*y = w^2,  x*z = v^2,  y*z = u^2
/// with (x, y, z) = +-(radii)/exradius; the common sign distinguishes the two
/// placement cases of the family.
///
/// The parameters of a valid spec satisfy p1*p2*p3 = p1+p2+p3 (incircle) or
/// p1*p2*p3 = p1-p2-p3 (excircle).
struct SystemSpec {
  Family family = Family::Incircle;
  double p1 = 0;
  double p2 = 0;
  double p3 = 0;
  double scale_radius = 1;
};

SystemSpec build_system(const DerivedQuantities& q, Family family);

/// One solution (u, v, w, x, y, z) of a tangency system.
///
/// For excircle families the system variables refer to the circles in the
/// rotated labeling that puts the distinguished vertex first: x is the circle
/// at that vertex, y at the next one, z at the previous one. to_radii undoes
/// the rotation. `slot` is the solution's position 1..8 in the published
/// order for the family's system.
struct NormalizedSolution {
  double u = 0, v = 0, w = 0;
  double x = 0, y = 0, z = 0;
  Family family = Family::Incircle;
  int slot = 0;
};

/// Maximum absolute residual of the six equations, evaluated verbatim.
double residual(const SystemSpec& spec, const NormalizedSolution& sol);

/// The eight solutions in closed radical form, in published slot order.
std::array<NormalizedSolution, 8> solve_in_closed_form(const SystemSpec& spec);

/// All 64 candidate tuples from the factored quartics: four real roots for
/// each of u, v, w (two quadratic factors each, discriminant p^2+1 > 0),
/// combined and completed to (x, y, z) through the three linear relations
///   p1*x = p1 + u - v - w
///   p2*y = p2 -+ (u - v + w)   (sign by family)
///   p3*z = p3 -+ (u + v - w)
/// Candidates carry slot 0; deterministic order.
std::vector<NormalizedSolution> enumerate_candidates(const SystemSpec& spec);

/// Keeps the candidates whose full-system residual is below
/// 1e-8 * max(1, p1, p2, p3). Exactly eight must survive; anything else
/// throws FilterCountMismatch. Survivors are labeled with the slot of the
/// nearest closed-form solution (labels only; the numeric values are the
/// enumerated ones) and returned in slot order.
std::vector<NormalizedSolution> filter_solutions(const SystemSpec& spec,
                                                 const std::vector<NormalizedSolution>& candidates);

/// Converts a solution to circle radii. Incircle: (r1,r2,r3) =
/// scale*(x,y,z). Excircle: scale*|x,y,z| mapped back through the family's
/// vertex rotation, with case_hint 2/3, 4/5 or 6/7 picked by the common sign,
/// and the slot translated to the matching published variant label.
RadiiTriplet to_radii(const SystemSpec& spec, const NormalizedSolution& sol);

}  // namespace malfatti

#endif
