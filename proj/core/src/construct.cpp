#include "malfatti/construct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "malfatti/errors.hpp"

namespace malfatti {

namespace {

using R = Region;

// The seven consistent assignments (A', B', C'). In the sector notation of
// classify_case's contract:
//   case 1: interior, interior, interior
//   case 2: interior at A, previous-ray flipped at B, next-ray flipped at C
//   case 3: vertical at A, next-ray flipped at B, previous-ray flipped at C
//   cases 4/5 and 6/7 are the cyclic counterparts around B and C.
constexpr RegionAssignment kCaseTable[7] = {
    {R::Interior, R::Interior, R::Interior},    // 1
    {R::Interior, R::ExtSecond, R::ExtFirst},   // 2
    {R::Vertical, R::ExtFirst, R::ExtSecond},   // 3
    {R::ExtFirst, R::Interior, R::ExtSecond},   // 4
    {R::ExtSecond, R::Vertical, R::ExtFirst},   // 5
    {R::ExtSecond, R::ExtFirst, R::Interior},   // 6
    {R::ExtFirst, R::ExtSecond, R::Vertical},   // 7
};

constexpr int kCasesByFamily[4][2] = {{1, 1}, {2, 3}, {4, 5}, {6, 7}};

// Tangency point of two tangent circles, on the line through the centers.
Vec2 circle_contact(const Circle& a, const Circle& b, TangencyType type) {
  if (type == TangencyType::External) {
    return (1.0 / (a.radius + b.radius)) * (b.radius * a.center + a.radius * b.center);
  }
  return (1.0 / (a.radius - b.radius)) * (a.radius * b.center - b.radius * a.center);
}

struct PairCheck {
  double residual;
  TangencyType type;
};

PairCheck pair_tangency(const Circle& a, const Circle& b) {
  const double d = distance(a.center, b.center);
  const double ext = std::abs(d - (a.radius + b.radius));
  const double inl = std::abs(d - std::abs(a.radius - b.radius));
  if (ext <= inl) return {ext, TangencyType::External};
  return {inl, TangencyType::Internal};
}

}  // namespace

double Frame::semiperimeter() const {
  return 0.5 * (distance(vertex[1], vertex[2]) + distance(vertex[2], vertex[0]) +
                distance(vertex[0], vertex[1]));
}

Frame canonical_frame(const Triangle& t) {
  Frame f;
  const double a = t.a(), b = t.b(), c = t.c();
  f.vertex[index(Vertex::B)] = {0, 0};
  f.vertex[index(Vertex::C)] = {a, 0};
  const double ax = (a * a + c * c - b * b) / (2 * a);
  const double ay = std::sqrt(std::max(c * c - ax * ax, 0.0));
  f.vertex[index(Vertex::A)] = {ax, ay};
  return f;
}

int classify_case(const RegionAssignment& regions) {
  for (int i = 0; i < 7; ++i) {
    if (kCaseTable[i] == regions) return i + 1;
  }
  return kInconsistentCase;
}

RegionAssignment case_regions(int case_id) {
  if (case_id < 1 || case_id > 7) {
    throw Error("case id out of range 1..7");
  }
  return kCaseTable[case_id - 1];
}

std::span<const int> compatible_cases(Family family) {
  const int* row = kCasesByFamily[index(family)];
  return {row, family == Family::Incircle ? std::size_t{1} : std::size_t{2}};
}

Vec2 center_in_region(const Frame& frame, Vertex v, Region region, double radius) {
  const Vec2 p = frame.at(v);
  const Vec2 to_next = normalized(frame.at(next(v)) - p);
  const Vec2 to_prev = normalized(frame.at(prev(v)) - p);
  double s1 = 1, s2 = 1;
  switch (region) {
    case Region::Interior: break;
    case Region::Vertical: s1 = s2 = -1; break;
    case Region::ExtFirst: s1 = -1; break;
    case Region::ExtSecond: s2 = -1; break;
  }
  const Vec2 dir = normalized(s1 * to_next + s2 * to_prev);
  // dir bisects the sector, so it makes the same angle with both side lines;
  // scale so the distance to each line equals the radius.
  const double sin_half = std::abs(cross(dir, to_next));
  return p + (radius / sin_half) * dir;
}

Configuration place_configuration(const Frame& frame, const RadiiTriplet& triplet) {
  const double radii[3] = {triplet.r1, triplet.r2, triplet.r3};
  Configuration best;
  best.max_residual = std::numeric_limits<double>::infinity();

  for (int case_id : compatible_cases(triplet.variant.family)) {
    const RegionAssignment regions = case_regions(case_id);
    Configuration cand;
    cand.regions = regions;
    cand.case_id = case_id;
    for (int i = 0; i < 3; ++i) {
      cand.circles[i].center =
          center_in_region(frame, static_cast<Vertex>(i), regions[i], radii[i]);
      cand.circles[i].radius = radii[i];
    }
    double worst = 0;
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int k = 0; k < 3; ++k) {
      const PairCheck pc = pair_tangency(cand.circles[pairs[k][0]], cand.circles[pairs[k][1]]);
      cand.tangency[k] = pc.type;
      worst = std::max(worst, pc.residual);
    }
    cand.max_residual = worst;
    if (worst < best.max_residual) best = cand;
  }

  best.variant = triplet.variant;
  best.corrected_from_paper = triplet.corrected_from_paper;

  // Feet of the perpendiculars onto the carrier lines. Circle A' touches
  // lines CA and AB, B' touches AB and BC, C' touches BC and CA.
  const Vec2 A = frame.at(Vertex::A), B = frame.at(Vertex::B), C = frame.at(Vertex::C);
  const Vec2 dBC = normalized(C - B), dCA = normalized(A - C), dAB = normalized(B - A);
  auto& tp = best.tangent_points;
  tp[static_cast<int>(TangentPoint::E1)] = project_onto_line(best.circles[0].center, C, dCA);
  tp[static_cast<int>(TangentPoint::F1)] = project_onto_line(best.circles[0].center, A, dAB);
  tp[static_cast<int>(TangentPoint::F2)] = project_onto_line(best.circles[1].center, A, dAB);
  tp[static_cast<int>(TangentPoint::D2)] = project_onto_line(best.circles[1].center, B, dBC);
  tp[static_cast<int>(TangentPoint::D3)] = project_onto_line(best.circles[2].center, B, dBC);
  tp[static_cast<int>(TangentPoint::E3)] = project_onto_line(best.circles[2].center, C, dCA);
  tp[static_cast<int>(TangentPoint::T12)] =
      circle_contact(best.circles[0], best.circles[1], best.tangency[0]);
  tp[static_cast<int>(TangentPoint::T13)] =
      circle_contact(best.circles[0], best.circles[2], best.tangency[1]);
  tp[static_cast<int>(TangentPoint::T23)] =
      circle_contact(best.circles[1], best.circles[2], best.tangency[2]);

  const double s = frame.semiperimeter();
  double min_sep = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kTangentPointCount; ++i) {
    for (int j = i + 1; j < kTangentPointCount; ++j) {
      min_sep = std::min(min_sep, distance(tp[i], tp[j]));
    }
  }
  best.near_degenerate = min_sep < 1e-6 * s;
  return best;
}

Configuration construct_configuration(const Frame& frame, const RadiiTriplet& triplet) {
  Configuration cfg = place_configuration(frame, triplet);
  const double s = frame.semiperimeter();
  if (!(cfg.max_residual < 1e-9 * s)) {
    std::ostringstream msg;
    msg << "no region assignment places variant " << triplet.variant.label()
        << " as tangent circles (best case " << cfg.case_id << ", residual " << cfg.max_residual
        << ")";
    throw NoConsistentPlacement(msg.str());
  }
  return cfg;
}

std::string_view tangent_point_name(TangentPoint p) {
  static constexpr const char* names[kTangentPointCount] = {"D2", "D3", "E1", "E3", "F1",
                                                            "F2", "T12", "T13", "T23"};
  return names[static_cast<int>(p)];
}

}  // namespace malfatti
