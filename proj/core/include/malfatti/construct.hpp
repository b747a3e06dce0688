#ifndef MALFATTI_CONSTRUCT_HPP
#define MALFATTI_CONSTRUCT_HPP

#include <array>
#include <span>

#include "malfatti/closed_form.hpp"
#include "malfatti/geom.hpp"
#include "malfatti/triangle.hpp"

namespace malfatti {

/// Fixed coordinate frame: B at the origin, C at (a, 0), A in the upper
/// half-plane.
struct Frame {
  std::array<Vec2, 3> vertex;  // A, B, C

  Vec2 at(Vertex v) const { return vertex[index(v)]; }
  double semiperimeter() const;
};

Frame canonical_frame(const Triangle& t);

/// The four sectors at a vertex, named by which of the two rays along the
/// triangle sides are replaced by their opposites:
///   Interior   - neither (the interior angle)
///   Vertical   - both (the vertical angle)
///   ExtFirst   - the ray toward the next vertex (at A: toward B)
///   ExtSecond  - the ray toward the previous vertex (at A: toward C)
enum class Region : int { Interior = 0, Vertical = 1, ExtFirst = 2, ExtSecond = 3 };

/// Sectors hosting the centers of A', B', C', in that order.
using RegionAssignment = std::array<Region, 3>;

constexpr int kInconsistentCase = 0;

/// Case number 1..7 of a consistent assignment, kInconsistentCase otherwise.
/// Only 7 of the 64 assignments admit three mutually tangent circles.
int classify_case(const RegionAssignment& regions);

/// The region row of a case (inverse of classify_case). case_id in 1..7.
RegionAssignment case_regions(int case_id);

/// Placement cases compatible with a family: {1} for the incircle family,
/// {2,3} for exA, {4,5} for exB, {6,7} for exC.
std::span<const int> compatible_cases(Family family);

/// Center of a circle of the given radius tangent to both side lines through
/// the vertex, inside the requested sector. Lies on the sector's bisector at
/// distance radius/sin(half sector angle) from the vertex.
Vec2 center_in_region(const Frame& frame, Vertex v, Region region, double radius);

enum class TangencyType { External, Internal };

struct Circle {
  Vec2 center;
  double radius = 0;
};

/// The nine tangent points: six on the side lines and three between circles.
/// D* lie on line BC, E* on CA, F* on AB; circle A' touches at E1 and F1,
/// B' at F2 and D2, C' at D3 and E3. T12, T13, T23 are the circle-circle
/// contacts.
enum class TangentPoint : int { D2 = 0, D3, E1, E3, F1, F2, T12, T13, T23 };
constexpr int kTangentPointCount = 9;
std::string_view tangent_point_name(TangentPoint p);

struct Configuration {
  std::array<Circle, 3> circles;  // A', B', C'
  std::array<Vec2, kTangentPointCount> tangent_points;
  RegionAssignment regions{};
  int case_id = 0;
  TripletVariant variant;
  std::array<TangencyType, 3> tangency{};  // pairs (1,2), (1,3), (2,3)
  double max_residual = 0;                 // worst pairwise tangency defect
  bool corrected_from_paper = false;
  bool near_degenerate = false;  // two tangent points closer than 1e-6*s

  Vec2 tangent_point(TangentPoint p) const { return tangent_points[static_cast<int>(p)]; }
};

/// Places the triplet in the best of its family-compatible cases without
/// thresholding; max_residual reports how well the placement closes.
Configuration place_configuration(const Frame& frame, const RadiiTriplet& triplet);

/// As place_configuration, but requires the residual to be below 1e-9*s;
/// throws NoConsistentPlacement otherwise.
Configuration construct_configuration(const Frame& frame, const RadiiTriplet& triplet);

}  // namespace malfatti

#endif
