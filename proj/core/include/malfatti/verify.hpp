#ifndef MALFATTI_VERIFY_HPP
#define MALFATTI_VERIFY_HPP

#include <array>
#include <string>
#include <vector>

#include "malfatti/construct.hpp"

namespace malfatti {

struct OracleOptions {
  int grid_points = 16;         // starts per radius dimension, log spaced
  double range_min = 1e-3;      // grid range as multiples of the semiperimeter
  double range_max = 1e2;
  int max_iterations = 40;
  double cluster_resolution = 1e-8;  // times the semiperimeter
};

/// Finds every triple of positive radii whose circles, centered in the given
/// regions, are pairwise tangent. Centers are parameterized by radius alone;
/// the three pairwise contact conditions are solved by damped Newton from a
/// deterministic log-spaced grid, over all 2^3 external/internal branch
/// choices. Converged roots are reverified from scratch and clustered.
/// Solutions are returned sorted lexicographically; throws OracleDivergence
/// if none converge. Closed-form radii are never consulted.
std::vector<std::array<double, 3>> oracle_solve(const Frame& frame, Family family, int case_id,
                                                const RegionAssignment& regions,
                                                const OracleOptions& options = {});

enum class VerifyStatus { Match, Corrected, Fail };
std::string_view to_string(VerifyStatus s);

struct VerificationReport {
  TripletVariant variant;
  RadiiTriplet closed_form;             // the shipped (possibly corrected) radii
  std::array<double, 3> oracle{};       // nearest oracle root
  bool oracle_found = false;
  double rel_error = 0;                 // shipped radii vs oracle, worst of three
  double verbatim_rel_error = 0;        // printed-table radii vs oracle
  double max_geometric_residual = 0;    // from the placed configuration
  std::array<TangencyType, 3> tangency{};
  int case_id = 0;
  VerifyStatus status = VerifyStatus::Fail;
  std::string note;
};

struct VerifyOptions {
  double tolerance = 1e-7;  // relative radius agreement for a Match
  FormulaForm form = FormulaForm::Adjudicated;
  OracleOptions oracle;
};

VerificationReport verify_variant(const Triangle& t, TripletVariant v,
                                  const VerifyOptions& options = {});

/// Reports for all 32 variants in index order. Placement or oracle failures
/// of one variant are folded into its report as status Fail.
std::vector<VerificationReport> verify_all(const Triangle& t, const VerifyOptions& options = {});

}  // namespace malfatti

#endif
