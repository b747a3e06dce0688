#include "malfatti/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "malfatti/errors.hpp"

namespace malfatti {

namespace {

// Center of circle i as an affine function of its radius: origin + rho * ray.
struct CenterRay {
  Vec2 origin;
  Vec2 ray;
};

CenterRay center_ray(const Frame& frame, Vertex v, Region region) {
  // center_in_region is linear in the radius with a fixed direction.
  const Vec2 at_one = center_in_region(frame, v, region, 1.0);
  return {frame.at(v), at_one - frame.at(v)};
}

struct TangencySystem {
  CenterRay rays[3];
  // Branch sign per pair: +1 external (d = ri + rj), -1 internal (d = |ri - rj|).
  int branch[3] = {1, 1, 1};
  static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};

  Vec2 center(int i, double rho) const { return rays[i].origin + rho * rays[i].ray; }

  // Residuals only; false when centers coincide. Plain sqrt instead of
  // norm()/hypot keeps the hot loop cheap; all values are at triangle scale.
  bool eval_g(const double rho[3], double g[3]) const {
    Vec2 c[3];
    for (int i = 0; i < 3; ++i) c[i] = center(i, rho[i]);
    for (int k = 0; k < 3; ++k) {
      const int i = kPairs[k][0], j = kPairs[k][1];
      const Vec2 diff = c[i] - c[j];
      const double d2 = diff.x * diff.x + diff.y * diff.y;
      if (!(d2 > 1e-300)) return false;
      const double target = branch[k] > 0 ? rho[i] + rho[j] : std::abs(rho[i] - rho[j]);
      g[k] = std::sqrt(d2) - target;
    }
    return true;
  }

  // Residuals and Jacobian dg_k/drho_j together.
  bool eval(const double rho[3], double g[3], double jac[3][3]) const {
    Vec2 c[3];
    for (int i = 0; i < 3; ++i) c[i] = center(i, rho[i]);
    for (int k = 0; k < 3; ++k) {
      const int i = kPairs[k][0], j = kPairs[k][1];
      const Vec2 diff = c[i] - c[j];
      const double d2 = diff.x * diff.x + diff.y * diff.y;
      if (!(d2 > 1e-300)) return false;
      const double d = std::sqrt(d2);
      double target, dti, dtj;
      if (branch[k] > 0) {
        target = rho[i] + rho[j];
        dti = 1;
        dtj = 1;
      } else {
        target = std::abs(rho[i] - rho[j]);
        const double sgn = rho[i] >= rho[j] ? 1.0 : -1.0;
        dti = sgn;
        dtj = -sgn;
      }
      g[k] = d - target;
      for (int col = 0; col < 3; ++col) jac[k][col] = 0;
      jac[k][i] = dot(diff, rays[i].ray) / d - dti;
      jac[k][j] = -dot(diff, rays[j].ray) / d - dtj;
    }
    return true;
  }
};

bool solve3(const double a[3][3], const double b[3], double x[3]) {
  const double det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                     a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                     a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  if (!(std::abs(det) > 1e-300)) return false;
  const double inv = 1.0 / det;
  x[0] = inv * (b[0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                a[0][1] * (b[1] * a[2][2] - a[1][2] * b[2]) +
                a[0][2] * (b[1] * a[2][1] - a[1][1] * b[2]));
  x[1] = inv * (a[0][0] * (b[1] * a[2][2] - a[1][2] * b[2]) -
                b[0] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                a[0][2] * (a[1][0] * b[2] - b[1] * a[2][0]));
  x[2] = inv * (a[0][0] * (a[1][1] * b[2] - b[1] * a[2][1]) -
                a[0][1] * (a[1][0] * b[2] - b[1] * a[2][0]) +
                b[0] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]));
  return true;
}

// Damped Newton from one start; true when converged to a positive root.
bool newton(const TangencySystem& sys, double rho[3], double scale, int max_iterations) {
  const double tol = 1e-13 * scale;
  const double hi = 1e6 * scale, lo = -10 * scale;
  double g[3], jac[3][3];
  if (!sys.eval(rho, g, jac)) return false;
  double gnorm = std::max({std::abs(g[0]), std::abs(g[1]), std::abs(g[2])});
  for (int it = 0; it < max_iterations; ++it) {
    if (gnorm < tol) {
      return rho[0] > 0 && rho[1] > 0 && rho[2] > 0;
    }
    double step[3];
    const double rhs[3] = {-g[0], -g[1], -g[2]};
    if (!solve3(jac, rhs, step)) return false;
    double factor = 1.0;
    bool moved = false;
    for (int halving = 0; halving < 6 && !moved; ++halving, factor *= 0.5) {
      const double trial[3] = {rho[0] + factor * step[0], rho[1] + factor * step[1],
                               rho[2] + factor * step[2]};
      bool in_range = true;
      for (double t : trial) {
        if (!std::isfinite(t) || t > hi || t < lo) in_range = false;
      }
      if (!in_range) continue;
      double gt[3];
      if (!sys.eval_g(trial, gt)) continue;
      const double gn = std::max({std::abs(gt[0]), std::abs(gt[1]), std::abs(gt[2])});
      if (gn < gnorm) {
        rho[0] = trial[0];
        rho[1] = trial[1];
        rho[2] = trial[2];
        gnorm = gn;
        moved = true;
      }
    }
    if (!moved) return false;  // stalled; no descent along the Newton direction
    if (!sys.eval(rho, g, jac)) return false;
  }
  return false;
}

}  // namespace

std::vector<std::array<double, 3>> oracle_solve(const Frame& frame, Family family, int case_id,
                                                const RegionAssignment& regions,
                                                const OracleOptions& options) {
  const int classified = classify_case(regions);
  if (classified != kInconsistentCase) {
    if (classified != case_id) {
      throw Error("region assignment does not match the requested case");
    }
    const auto cases = compatible_cases(family);
    if (std::find(cases.begin(), cases.end(), case_id) == cases.end()) {
      throw Error("case id is not compatible with the family");
    }
  }
  // An inconsistent assignment is allowed through: no tangent triple exists
  // for it and the solver reports the divergence.

  const double s = frame.semiperimeter();
  TangencySystem sys;
  for (int i = 0; i < 3; ++i) {
    sys.rays[i] = center_ray(frame, static_cast<Vertex>(i), regions[i]);
  }

  const int n = options.grid_points;
  std::vector<double> grid(n);
  const double lo = std::log(options.range_min * s);
  const double hi = std::log(options.range_max * s);
  for (int i = 0; i < n; ++i) {
    grid[i] = std::exp(lo + (hi - lo) * i / (n - 1));
  }

  std::vector<std::array<double, 3>> roots;
  const double cluster = options.cluster_resolution * s;
  const double accept = 1e-12 * s;

  for (int branch_bits = 0; branch_bits < 8; ++branch_bits) {
    sys.branch[0] = (branch_bits & 1) ? -1 : 1;
    sys.branch[1] = (branch_bits & 2) ? -1 : 1;
    sys.branch[2] = (branch_bits & 4) ? -1 : 1;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          double rho[3] = {grid[i], grid[j], grid[k]};
          if (!newton(sys, rho, s, options.max_iterations)) continue;
          // Reverify from scratch against the physical (abs) constraints,
          // independent of the branch that produced the root.
          bool ok = true;
          for (int p = 0; p < 3; ++p) {
            const int u = TangencySystem::kPairs[p][0], v = TangencySystem::kPairs[p][1];
            const double d = distance(sys.center(u, rho[u]), sys.center(v, rho[v]));
            const double defect =
                std::min(std::abs(d - (rho[u] + rho[v])), std::abs(d - std::abs(rho[u] - rho[v])));
            if (!(defect < accept)) ok = false;
          }
          if (!ok) continue;
          bool known = false;
          for (const auto& root : roots) {
            if (std::abs(root[0] - rho[0]) < cluster && std::abs(root[1] - rho[1]) < cluster &&
                std::abs(root[2] - rho[2]) < cluster) {
              known = true;
              break;
            }
          }
          if (!known) roots.push_back({rho[0], rho[1], rho[2]});
        }
      }
    }
  }

  if (roots.empty()) {
    std::ostringstream msg;
    msg << "no tangent triple found for case " << case_id << " from "
        << 8 * n * n * n << " starts";
    throw OracleDivergence(msg.str());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string_view to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Match: return "match";
    case VerifyStatus::Corrected: return "corrected";
    case VerifyStatus::Fail: return "fail";
  }
  return "?";
}

namespace {

double max_rel_error(const std::array<double, 3>& got, const std::array<double, 3>& want) {
  double worst = 0;
  for (int i = 0; i < 3; ++i) {
    worst = std::max(worst, std::abs(got[i] - want[i]) / std::abs(want[i]));
  }
  return worst;
}

struct OracleCache {
  std::map<int, std::vector<std::array<double, 3>>> by_case;
};

VerificationReport verify_one(const Frame& frame, const DerivedQuantities& q,
                              const AuxiliaryAngles& ang, TripletVariant v,
                              const VerifyOptions& options, OracleCache& cache) {
  VerificationReport report;
  report.variant = v;

  const RadiiTriplet verbatim = radii_for_variant(q, ang, v, FormulaForm::PaperVerbatim);
  const RadiiTriplet adjudicated = radii_for_variant(q, ang, v, FormulaForm::Adjudicated);
  const RadiiTriplet& shipped = options.form == FormulaForm::PaperVerbatim ? verbatim : adjudicated;
  report.closed_form = shipped;

  // The configuration (and with it the placement case) comes from whichever
  // form admits a placement; the pattern form always does for true formulas.
  Configuration cfg;
  try {
    cfg = construct_configuration(frame, shipped);
  } catch (const NoConsistentPlacement&) {
    try {
      cfg = construct_configuration(frame, adjudicated);
    } catch (const NoConsistentPlacement& e) {
      report.status = VerifyStatus::Fail;
      report.note = e.what();
      return report;
    }
  }
  report.case_id = cfg.case_id;
  report.tangency = cfg.tangency;
  report.max_geometric_residual = cfg.max_residual;

  std::vector<std::array<double, 3>>* roots = nullptr;
  try {
    auto it = cache.by_case.find(cfg.case_id);
    if (it == cache.by_case.end()) {
      it = cache.by_case
               .emplace(cfg.case_id, oracle_solve(frame, v.family, cfg.case_id,
                                                  case_regions(cfg.case_id), options.oracle))
               .first;
    }
    roots = &it->second;
  } catch (const OracleDivergence& e) {
    report.status = VerifyStatus::Fail;
    report.note = e.what();
    return report;
  }

  const std::array<double, 3> shipped_radii = {shipped.r1, shipped.r2, shipped.r3};
  const std::array<double, 3> verbatim_radii = {verbatim.r1, verbatim.r2, verbatim.r3};
  double best_shipped = std::numeric_limits<double>::infinity();
  double best_verbatim = std::numeric_limits<double>::infinity();
  for (const auto& root : *roots) {
    const double e1 = max_rel_error(shipped_radii, root);
    if (e1 < best_shipped) {
      best_shipped = e1;
      report.oracle = root;
      report.oracle_found = true;
    }
    best_verbatim = std::min(best_verbatim, max_rel_error(verbatim_radii, root));
  }
  report.rel_error = best_shipped;
  report.verbatim_rel_error = best_verbatim;

  if (best_verbatim < options.tolerance) {
    report.status = VerifyStatus::Match;
  } else if (options.form == FormulaForm::Adjudicated && best_shipped < options.tolerance) {
    report.status = VerifyStatus::Corrected;
  } else {
    report.status = VerifyStatus::Fail;
  }
  return report;
}

}  // namespace

VerificationReport verify_variant(const Triangle& t, TripletVariant v,
                                  const VerifyOptions& options) {
  const Frame frame = canonical_frame(t);
  const DerivedQuantities q = derive(t);
  const AuxiliaryAngles ang = auxiliary_angles(q);
  OracleCache cache;
  return verify_one(frame, q, ang, v, options, cache);
}

std::vector<VerificationReport> verify_all(const Triangle& t, const VerifyOptions& options) {
  const Frame frame = canonical_frame(t);
  const DerivedQuantities q = derive(t);
  const AuxiliaryAngles ang = auxiliary_angles(q);
  OracleCache cache;
  std::vector<VerificationReport> reports;
  reports.reserve(kVariantCount);
  for (int i = 1; i <= kVariantCount; ++i) {
    reports.push_back(verify_one(frame, q, ang, TripletVariant::from_index(i), options, cache));
  }
  return reports;
}

}  // namespace malfatti
