#ifndef MALFATTI_CLOSED_FORM_HPP
#define MALFATTI_CLOSED_FORM_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "malfatti/triangle.hpp"

namespace malfatti {

/// The four tangency families. Incircle hosts the classic Malfatti circles
/// and their three co-variants per slot group; each Ex* family hosts the
/// eight triplets built around the corresponding excircle.
enum class Family : int { Incircle = 0, ExA = 1, ExB = 2, ExC = 3 };

constexpr int index(Family f) { return static_cast<int>(f); }

std::string_view family_name(Family f);  // "incircle", "exA", "exB", "exC"

/// One of the 32 triplets: a family plus a slot 1..8.
///
/// Global indices run 1..32 in family-major order (1-8 incircle, 9-16 exA,
/// 17-24 exB, 25-32 exC); labels are "i1".."i8", "a1".."a8", "b1".."b8",
/// "c1".."c8" in the same order.
struct TripletVariant {
  Family family = Family::Incircle;
  int slot = 1;

  int global_index() const { return 8 * index(family) + slot; }
  std::string label() const;

  static TripletVariant from_index(int global_index);  // throws UnknownVariant
  static std::optional<TripletVariant> from_label(std::string_view label);

  friend bool operator==(const TripletVariant&, const TripletVariant&) = default;
};

constexpr int kVariantCount = 32;

/// Radii (r1, r2, r3) of the circles A', B', C' for one variant.
struct RadiiTriplet {
  double r1 = 0;
  double r2 = 0;
  double r3 = 0;
  TripletVariant variant;
  // True when the shipped value deviates from the printed table (variants b6
  // and c7, whose printed entries fail the tangency check; see verify).
  bool corrected_from_paper = false;
  // 1..7 when the solution path implies a placement case, 0 otherwise.
  int case_hint = 0;
};

/// Which formula table to evaluate: the adjudicated one (default; b6 and c7
/// follow the family pattern that passes the numerical tangency oracle) or
/// the table exactly as printed.
enum class FormulaForm { Adjudicated, PaperVerbatim };

RadiiTriplet radii_for_variant(const DerivedQuantities& q, const AuxiliaryAngles& ang,
                               TripletVariant v, FormulaForm form = FormulaForm::Adjudicated);

/// All 32 triplets in global-index order.
std::vector<RadiiTriplet> all_triplets(const DerivedQuantities& q, const AuxiliaryAngles& ang,
                                       FormulaForm form = FormulaForm::Adjudicated);

/// Human-readable radius formulas, e.g.
/// "r1 = rA sin²(σ−α), r2 = rB sin²(σ−β), r3 = rC sin²(σ−γ)".
std::string formula_text(TripletVariant v, FormulaForm form = FormulaForm::Adjudicated);

}  // namespace malfatti

#endif
