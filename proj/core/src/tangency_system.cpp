#include "malfatti/tangency_system.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "malfatti/errors.hpp"

namespace malfatti {

namespace {

bool is_excircle(Family f) { return f != Family::Incircle; }

// Roots of the factored quartics have the form
//   incircle, all of u,v,w:  (er*sqrt(p^2+1) - p + e1)/2
//   excircle, u:             (er*sqrt(p^2+1) - p + e1)/2
//   excircle, v and w:       (er*sqrt(p^2+1) + p + e1)/2
// with independent signs er, e1. The eight published solutions are these
// sign choices:
struct SignPair {
  int rad;
  int one;
};
struct SlotSigns {
  SignPair u, v, w;
};

constexpr SlotSigns kIncircleSigns[8] = {
    {{+1, +1}, {+1, +1}, {+1, +1}},  // slot 1
    {{+1, +1}, {-1, +1}, {-1, +1}},  // slot 2
    {{-1, +1}, {+1, +1}, {-1, +1}},  // slot 3
    {{-1, +1}, {-1, +1}, {+1, +1}},  // slot 4
    {{-1, -1}, {-1, -1}, {-1, -1}},  // slot 5
    {{-1, -1}, {+1, -1}, {+1, -1}},  // slot 6
    {{+1, -1}, {-1, -1}, {+1, -1}},  // slot 7
    {{+1, -1}, {+1, -1}, {-1, -1}},  // slot 8
};

constexpr SlotSigns kExcircleSigns[8] = {
    {{+1, -1}, {+1, -1}, {+1, -1}},  // slot 1
    {{+1, -1}, {-1, -1}, {-1, -1}},  // slot 2
    {{+1, +1}, {-1, +1}, {+1, +1}},  // slot 3
    {{+1, +1}, {+1, +1}, {-1, +1}},  // slot 4
    {{-1, +1}, {-1, +1}, {-1, +1}},  // slot 5
    {{-1, +1}, {+1, +1}, {+1, +1}},  // slot 6
    {{-1, -1}, {+1, -1}, {-1, -1}},  // slot 7
    {{-1, -1}, {-1, -1}, {+1, -1}},  // slot 8
};

double root_u(double p, SignPair s) {
  return 0.5 * (s.rad * std::sqrt(p * p + 1) - p + s.one);
}
double root_vw(double p, SignPair s, bool excircle) {
  return 0.5 * (s.rad * std::sqrt(p * p + 1) + (excircle ? p : -p) + s.one);
}

// Completes (u, v, w) to a full tuple through the linear relations.
NormalizedSolution complete(const SystemSpec& spec, double u, double v, double w) {
  NormalizedSolution sol;
  sol.u = u;
  sol.v = v;
  sol.w = w;
  sol.family = spec.family;
  sol.x = (spec.p1 + u - v - w) / spec.p1;
  if (is_excircle(spec.family)) {
    sol.y = (spec.p2 + u - v + w) / spec.p2;
    sol.z = (spec.p3 + u + v - w) / spec.p3;
  } else {
    sol.y = (spec.p2 - u + v - w) / spec.p2;
    sol.z = (spec.p3 - u - v + w) / spec.p3;
  }
  return sol;
}

double sq_distance(const NormalizedSolution& a, const NormalizedSolution& b) {
  const double d[6] = {a.u - b.u, a.v - b.v, a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  double s = 0;
  for (double t : d) s += t * t;
  return s;
}

// Circle role rotation per family: system variable (x, y, z) holds the circle
// at (distinguished vertex, next, previous). Mapping back to (r1, r2, r3):
//   exA: (x,y,z) -> (r1,r2,r3)
//   exB: (x,y,z) -> (r2,r3,r1)
//   exC: (x,y,z) -> (r3,r1,r2)
// The rotation also permutes the published slot labels.
constexpr int kSlotPermExB[8] = {1, 3, 4, 2, 5, 7, 8, 6};
constexpr int kSlotPermExC[8] = {1, 4, 2, 3, 5, 8, 6, 7};

}  // namespace

SystemSpec build_system(const DerivedQuantities& q, Family family) {
  SystemSpec spec;
  spec.family = family;
  if (family == Family::Incircle) {
    spec.p1 = q.cot_half[0];
    spec.p2 = q.cot_half[1];
    spec.p3 = q.cot_half[2];
    spec.scale_radius = q.r;
  } else {
    const int v = index(family) - 1;
    spec.p1 = q.cot_half[v];
    spec.p2 = q.tan_half[(v + 1) % 3];
    spec.p3 = q.tan_half[(v + 2) % 3];
    spec.scale_radius = q.exradius[v];
  }
  return spec;
}

double residual(const SystemSpec& spec, const NormalizedSolution& sol) {
  const double p1 = spec.p1, p2 = spec.p2, p3 = spec.p3;
  const double u = sol.u, v = sol.v, w = sol.w, x = sol.x, y = sol.y, z = sol.z;
  double lin1, lin2, lin3;
  if (is_excircle(spec.family)) {
    lin1 = p2 * y + p3 * z - 2 * u - p2 - p3;
    lin2 = p1 * x - p3 * z + 2 * v - p1 + p3;
    lin3 = p1 * x - p2 * y + 2 * w - p1 + p2;
  } else {
    lin1 = p2 * y + p3 * z + 2 * u - p2 - p3;
    lin2 = p1 * x + p3 * z + 2 * v - p1 - p3;
    lin3 = p1 * x + p2 * y + 2 * w - p1 - p2;
  }
  const double quad1 = x * y - w * w;
  const double quad2 = x * z - v * v;
  const double quad3 = y * z - u * u;
  double worst = 0;
  for (double t : {lin1, lin2, lin3, quad1, quad2, quad3}) {
    worst = std::max(worst, std::abs(t));
  }
  return worst;
}

std::array<NormalizedSolution, 8> solve_in_closed_form(const SystemSpec& spec) {
  const bool ex = is_excircle(spec.family);
  const SlotSigns* signs = ex ? kExcircleSigns : kIncircleSigns;
  std::array<NormalizedSolution, 8> out;
  for (int slot = 1; slot <= 8; ++slot) {
    const SlotSigns& sg = signs[slot - 1];
    const double u = root_u(spec.p1, sg.u);
    const double v = root_vw(spec.p2, sg.v, ex);
    const double w = root_vw(spec.p3, sg.w, ex);
    out[slot - 1] = complete(spec, u, v, w);
    out[slot - 1].slot = slot;
  }
  return out;
}

std::vector<NormalizedSolution> enumerate_candidates(const SystemSpec& spec) {
  const bool ex = is_excircle(spec.family);
  constexpr SignPair kCombos[4] = {{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}};
  double uroots[4], vroots[4], wroots[4];
  for (int i = 0; i < 4; ++i) {
    uroots[i] = root_u(spec.p1, kCombos[i]);
    vroots[i] = root_vw(spec.p2, kCombos[i], ex);
    wroots[i] = root_vw(spec.p3, kCombos[i], ex);
  }
  std::vector<NormalizedSolution> out;
  out.reserve(64);
  for (double u : uroots) {
    for (double v : vroots) {
      for (double w : wroots) {
        out.push_back(complete(spec, u, v, w));
      }
    }
  }
  return out;
}

std::vector<NormalizedSolution> filter_solutions(const SystemSpec& spec,
                                                 const std::vector<NormalizedSolution>& candidates) {
  const double tol = 1e-8 * std::max({1.0, spec.p1, spec.p2, spec.p3});
  std::vector<NormalizedSolution> survivors;
  for (const NormalizedSolution& cand : candidates) {
    if (residual(spec, cand) < tol) survivors.push_back(cand);
  }
  if (survivors.size() != 8) {
    std::ostringstream msg;
    msg << "expected 8 surviving solutions, got " << survivors.size() << " (params " << spec.p1
        << ", " << spec.p2 << ", " << spec.p3 << ")";
    throw FilterCountMismatch(msg.str(), static_cast<int>(survivors.size()));
  }

  // Label each survivor with the slot of the nearest radical solution. The
  // numeric content stays the enumerated value.
  const std::array<NormalizedSolution, 8> reference = solve_in_closed_form(spec);
  unsigned taken = 0;
  for (NormalizedSolution& sol : survivors) {
    int best = -1;
    double best_d = 0;
    for (int k = 0; k < 8; ++k) {
      const double d = sq_distance(sol, reference[k]);
      if (best < 0 || d < best_d) {
        best = k;
        best_d = d;
      }
    }
    sol.slot = best + 1;
    taken |= 1u << best;
  }
  if (taken != 0xffu) {
    throw FilterCountMismatch("survivors do not map onto the 8 published slots", 8);
  }
  std::sort(survivors.begin(), survivors.end(),
            [](const NormalizedSolution& a, const NormalizedSolution& b) { return a.slot < b.slot; });
  return survivors;
}

RadiiTriplet to_radii(const SystemSpec& spec, const NormalizedSolution& sol) {
  RadiiTriplet out;
  const double k = spec.scale_radius;
  if (spec.family == Family::Incircle) {
    out.r1 = k * sol.x;
    out.r2 = k * sol.y;
    out.r3 = k * sol.z;
    out.variant = {Family::Incircle, sol.slot};
    out.case_hint = 1;
    return out;
  }
  const double rx = k * std::abs(sol.x);
  const double ry = k * std::abs(sol.y);
  const double rz = k * std::abs(sol.z);
  int slot = sol.slot;
  switch (spec.family) {
    case Family::ExA:
      out.r1 = rx;
      out.r2 = ry;
      out.r3 = rz;
      break;
    case Family::ExB:
      out.r1 = rz;
      out.r2 = rx;
      out.r3 = ry;
      if (slot >= 1 && slot <= 8) slot = kSlotPermExB[slot - 1];
      break;
    case Family::ExC:
      out.r1 = ry;
      out.r2 = rz;
      out.r3 = rx;
      if (slot >= 1 && slot <= 8) slot = kSlotPermExC[slot - 1];
      break;
    default:
      break;
  }
  out.variant = {spec.family, slot};
  // Positive system sign is the case listed first for the family (2, 4, 6);
  // negative the second (3, 5, 7).
  out.case_hint = 2 * index(spec.family) + (sol.x > 0 ? 0 : 1);
  return out;
}

}  // namespace malfatti
