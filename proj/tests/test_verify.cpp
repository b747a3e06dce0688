#include <cmath>
#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace malfatti;
using testsupport::random_triangle;
using testsupport::rel_err;

namespace {

// Independent 1-D check for the symmetric equilateral roots: all radii equal,
// centers on the interior bisectors, |c1 - c2| = 2 rho. Scans for sign
// changes and bisects; knows nothing about the closed forms.
std::vector<double> equilateral_symmetric_roots(const Frame& f) {
  auto defect = [&](double rho) {
    const Vec2 c1 = center_in_region(f, Vertex::A, Region::Interior, rho);
    const Vec2 c2 = center_in_region(f, Vertex::B, Region::Interior, rho);
    return distance(c1, c2) - 2 * rho;
  };
  const double s = f.semiperimeter();
  std::vector<double> roots;
  double prev = 1e-4 * s;
  double fprev = defect(prev);
  for (int i = 1; i <= 4000; ++i) {
    const double cur = 1e-4 * s * std::pow(10.0, 4.0 * i / 4000.0);
    const double fcur = defect(cur);
    if (fprev == 0 || (fprev < 0) != (fcur < 0)) {
      double lo = prev, hi = cur;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((defect(mid) < 0) == (defect(lo) < 0)) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev = cur;
    fprev = fcur;
  }
  return roots;
}

}  // namespace

TEST_CASE("oracle finds the classic Malfatti root on 3-4-5") {
  const Triangle t = Triangle::from_sides(3, 4, 5);
  const Frame f = canonical_frame(t);
  const auto roots = oracle_solve(f, Family::Incircle, 1, case_regions(1));
  CHECK(roots.size() >= 8);  // the eight incircle-family triplets share case 1
  bool found = false;
  for (const auto& root : roots) {
    if (rel_err(root[0], 0.75199935338258243) < 1e-7 &&
        rel_err(root[1], 0.66489418873957883) < 1e-7 &&
        rel_err(root[2], 0.50793396235246301) < 1e-7) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("oracle agrees with the 1-D reduction on the equilateral triangle") {
  const Triangle t = Triangle::from_sides(1, 1, 1);
  const Frame f = canonical_frame(t);
  const std::vector<double> symmetric = equilateral_symmetric_roots(f);
  REQUIRE(symmetric.size() >= 1);
  // smallest symmetric root is the Malfatti radius
  CHECK(rel_err(symmetric.front(), (std::sqrt(3.0) - 1) / 4) < 1e-9);

  const auto roots = oracle_solve(f, Family::Incircle, 1, case_regions(1));
  for (double want : symmetric) {
    bool found = false;
    for (const auto& root : roots) {
      if (rel_err(root[0], want) < 1e-7 && rel_err(root[1], want) < 1e-7 &&
          rel_err(root[2], want) < 1e-7) {
        found = true;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("oracle reports divergence for an inconsistent assignment") {
  const Frame f = canonical_frame(Triangle::from_sides(3, 4, 5));
  OracleOptions cheap;
  cheap.grid_points = 6;
  const RegionAssignment inconsistent = {Region::Vertical, Region::Vertical, Region::Vertical};
  CHECK(classify_case(inconsistent) == kInconsistentCase);
  CHECK_THROWS_AS(oracle_solve(f, Family::Incircle, 1, inconsistent, cheap), OracleDivergence);
}

TEST_CASE("oracle rejects mismatched case metadata") {
  const Frame f = canonical_frame(Triangle::from_sides(3, 4, 5));
  CHECK_THROWS_AS(oracle_solve(f, Family::Incircle, 2, case_regions(1)), Error);
  CHECK_THROWS_AS(oracle_solve(f, Family::ExA, 1, case_regions(1)), Error);
}

TEST_CASE("verify_variant matches i1 and distinguishes i2") {
  const Triangle t = Triangle::from_sides(3, 4, 5);
  const VerificationReport rep = verify_variant(t, {Family::Incircle, 1});
  CHECK(rep.status == VerifyStatus::Match);
  CHECK(rep.rel_error < 1e-7);
  CHECK(rep.case_id == 1);
  CHECK(rep.oracle_found);

  const VerificationReport rep2 = verify_variant(t, {Family::Incircle, 2});
  CHECK(rep2.status == VerifyStatus::Match);
  // i1 and i2 are genuinely different triplets
  CHECK(rel_err(rep.closed_form.r1, rep2.closed_form.r1) > 1e-3);
}

TEST_CASE("verify_all on 3-4-5: 30 matches and the two corrected slots") {
  const Triangle t = Triangle::from_sides(3, 4, 5);
  const auto reports = verify_all(t);
  REQUIRE(reports.size() == kVariantCount);
  int match = 0, corrected = 0, fail = 0;
  for (const auto& rep : reports) {
    switch (rep.status) {
      case VerifyStatus::Match: ++match; break;
      case VerifyStatus::Corrected: ++corrected; break;
      case VerifyStatus::Fail: ++fail; break;
    }
    CHECK(rep.rel_error < 1e-7);
    for (TangencyType ty : rep.tangency) CHECK(ty == TangencyType::External);
  }
  CHECK(match == 30);
  CHECK(corrected == 2);
  CHECK(fail == 0);
  CHECK(reports[21].variant.label() == "b6");
  CHECK(reports[21].status == VerifyStatus::Corrected);
  CHECK(reports[21].verbatim_rel_error > 1e-3);
  CHECK(reports[30].variant.label() == "c7");
  CHECK(reports[30].status == VerifyStatus::Corrected);
  CHECK(reports[30].verbatim_rel_error > 1e-3);
}

TEST_CASE("verbatim mode fails exactly the two typo slots") {
  VerifyOptions options;
  options.form = FormulaForm::PaperVerbatim;
  const auto reports = verify_all(Triangle::from_sides(3, 4, 5), options);
  int fail = 0;
  for (const auto& rep : reports) {
    if (rep.status == VerifyStatus::Fail) {
      ++fail;
      const std::string label = rep.variant.label();
      CHECK((label == "b6" || label == "c7"));
    } else {
      CHECK(rep.status == VerifyStatus::Match);
    }
  }
  CHECK(fail == 2);
}

TEST_CASE("verification is deterministic") {
  const Triangle t = Triangle::from_sides(2, 3, 4);
  const auto a = verify_all(t);
  const auto b = verify_all(t);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].rel_error == b[i].rel_error);
    CHECK(a[i].oracle == b[i].oracle);
    CHECK(a[i].max_geometric_residual == b[i].max_geometric_residual);
    CHECK(a[i].status == b[i].status);
  }
}

TEST_CASE("three routes agree on every variant of the 3-4-5 triangle") {
  const Triangle t = Triangle::from_sides(3, 4, 5);
  const DerivedQuantities q = derive(t);
  const AuxiliaryAngles ang = auxiliary_angles(q);
  const auto reports = verify_all(t);
  for (Family fam : {Family::Incircle, Family::ExA, Family::ExB, Family::ExC}) {
    const SystemSpec spec = build_system(q, fam);
    for (const NormalizedSolution& sol : solve_in_closed_form(spec)) {
      const RadiiTriplet algebraic = to_radii(spec, sol);
      const RadiiTriplet closed = radii_for_variant(q, ang, algebraic.variant);
      CHECK(testsupport::triplet_rel_err(algebraic, closed) < 1e-7);
      const auto& rep = reports[algebraic.variant.global_index() - 1];
      REQUIRE(rep.oracle_found);
      CHECK(rel_err(algebraic.r1, rep.oracle[0]) < 1e-7);
      CHECK(rel_err(algebraic.r2, rep.oracle[1]) < 1e-7);
      CHECK(rel_err(algebraic.r3, rep.oracle[2]) < 1e-7);
    }
  }
}

TEST_CASE("near-isoceles triangles verify cleanly") {
  const Triangle t = Triangle::from_sides(1.0, 1.0 + 1e-7, 1.55);
  const auto reports = verify_all(t);
  for (const auto& rep : reports) {
    CHECK(rep.status != VerifyStatus::Fail);
  }
}

TEST_CASE("verify over random scalene triangles") {
  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < 5; ++trial) {
    const Triangle t = random_triangle(rng);
    const auto reports = verify_all(t);
    for (const auto& rep : reports) {
      CHECK(rep.status != VerifyStatus::Fail);
      CHECK(rep.rel_error < 1e-7);
    }
  }
}
