#include "malfatti/closed_form.hpp"

#include <cmath>
#include <sstream>

#include "malfatti/errors.hpp"

namespace malfatti {

namespace {

// Which angle is subtracted from sigma in each of the three radius formulas,
// by slot group (slots 1-4; slots 5-8 repeat the pattern with the
// complementary function). 0=alpha, 1=beta, 2=gamma, 3=sigma alone.
constexpr int kSigma = 3;
constexpr int kArgPattern[4][3] = {
    {0, 1, 2},       // slots 1, 5
    {kSigma, 2, 1},  // slots 2, 6
    {2, kSigma, 0},  // slots 3, 7
    {1, 0, kSigma},  // slots 4, 8
};

// Scale factors per family, as indices into {r, rA, rB, rC}.
constexpr int kInradius = 0;
constexpr int kScale[4][3] = {
    {1, 2, 3},         // incircle: rA, rB, rC
    {kInradius, 3, 2},  // exA: r, rC, rB
    {3, kInradius, 1},  // exB: rC, r, rA
    {2, 1, kInradius},  // exC: rB, rA, r
};

enum class Func { Sin, Cos, Sinh, Cosh };

// Base function per circle for slots 1-4; slots 5-8 use the co-function.
constexpr Func kBaseFunc[4][3] = {
    {Func::Sin, Func::Sin, Func::Sin},
    {Func::Cosh, Func::Sinh, Func::Sinh},
    {Func::Sinh, Func::Cosh, Func::Sinh},
    {Func::Sinh, Func::Sinh, Func::Cosh},
};

Func co(Func f) {
  switch (f) {
    case Func::Sin: return Func::Cos;
    case Func::Cos: return Func::Sin;
    case Func::Sinh: return Func::Cosh;
    case Func::Cosh: return Func::Sinh;
  }
  return f;
}

double eval_sq(Func f, double arg) {
  double t = 0;
  switch (f) {
    case Func::Sin: t = std::sin(arg); break;
    case Func::Cos: t = std::cos(arg); break;
    case Func::Sinh: t = std::sinh(arg); break;
    case Func::Cosh: t = std::cosh(arg); break;
  }
  return t * t;
}

struct Term {
  int scale;  // index into {r, rA, rB, rC}
  Func func;
  int arg;  // 0..2 subtract that angle from sigma, kSigma for sigma alone
};

// The printed table deviates from the family pattern in exactly two places.
// The adjudicated (pattern) entries pass the tangency oracle; the printed
// ones do not. verify re-establishes this numerically on every run of the
// adjudication fixture.
void apply_verbatim_deviations(TripletVariant v, Term terms[3]) {
  if (v.family == Family::ExB && v.slot == 6) {
    terms[2].scale = 2;  // printed as rB; pattern (and oracle) give rA
  }
  if (v.family == Family::ExC && v.slot == 7) {
    terms[2].arg = 1;  // printed as sigma-beta; pattern (and oracle) give sigma-alpha
  }
}

void variant_terms(TripletVariant v, FormulaForm form, Term terms[3]) {
  const int fi = index(v.family);
  const int group = (v.slot - 1) % 4;
  const bool use_co = v.slot > 4;
  for (int i = 0; i < 3; ++i) {
    terms[i].scale = kScale[fi][i];
    terms[i].func = use_co ? co(kBaseFunc[fi][i]) : kBaseFunc[fi][i];
    terms[i].arg = kArgPattern[group][i];
  }
  if (form == FormulaForm::PaperVerbatim) apply_verbatim_deviations(v, terms);
}

bool has_verbatim_deviation(TripletVariant v) {
  return (v.family == Family::ExB && v.slot == 6) || (v.family == Family::ExC && v.slot == 7);
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Incircle: return "incircle";
    case Family::ExA: return "exA";
    case Family::ExB: return "exB";
    case Family::ExC: return "exC";
  }
  return "?";
}

std::string TripletVariant::label() const {
  static constexpr char prefix[4] = {'i', 'a', 'b', 'c'};
  std::string out(1, prefix[index(family)]);
  out += static_cast<char>('0' + slot);
  return out;
}

TripletVariant TripletVariant::from_index(int global_index) {
  if (global_index < 1 || global_index > kVariantCount) {
    std::ostringstream msg;
    msg << "variant index " << global_index << " out of range 1.." << kVariantCount;
    throw UnknownVariant(msg.str());
  }
  return {static_cast<Family>((global_index - 1) / 8), (global_index - 1) % 8 + 1};
}

std::optional<TripletVariant> TripletVariant::from_label(std::string_view label) {
  if (label.size() != 2 || label[1] < '1' || label[1] > '8') return std::nullopt;
  Family f;
  switch (label[0]) {
    case 'i': f = Family::Incircle; break;
    case 'a': f = Family::ExA; break;
    case 'b': f = Family::ExB; break;
    case 'c': f = Family::ExC; break;
    default: return std::nullopt;
  }
  return TripletVariant{f, label[1] - '0'};
}

RadiiTriplet radii_for_variant(const DerivedQuantities& q, const AuxiliaryAngles& ang,
                               TripletVariant v, FormulaForm form) {
  if (v.slot < 1 || v.slot > 8) {
    throw UnknownVariant("variant slot out of range 1..8");
  }
  const AuxiliaryAngles::AngleSet& set =
      v.family == Family::Incircle ? ang.trig : ang.hyperbolic[index(v.family) - 1];
  const double angles[4] = {set.alpha, set.beta, set.gamma, 0.0};
  const double scales[4] = {q.r, q.exradius[0], q.exradius[1], q.exradius[2]};

  Term terms[3];
  variant_terms(v, form, terms);

  double radii[3];
  for (int i = 0; i < 3; ++i) {
    radii[i] = scales[terms[i].scale] * eval_sq(terms[i].func, set.sigma - angles[terms[i].arg]);
  }
  RadiiTriplet out{radii[0], radii[1], radii[2], v};
  out.corrected_from_paper = form == FormulaForm::Adjudicated && has_verbatim_deviation(v);
  return out;
}

std::vector<RadiiTriplet> all_triplets(const DerivedQuantities& q, const AuxiliaryAngles& ang,
                                       FormulaForm form) {
  std::vector<RadiiTriplet> out;
  out.reserve(kVariantCount);
  for (int i = 1; i <= kVariantCount; ++i) {
    out.push_back(radii_for_variant(q, ang, TripletVariant::from_index(i), form));
  }
  return out;
}

std::string formula_text(TripletVariant v, FormulaForm form) {
  static constexpr const char* scale_names[4] = {"r", "rA", "rB", "rC"};
  static constexpr const char* func_names[4] = {"sin", "cos", "sinh", "cosh"};
  const char* greek[3] = {"α", "β", "γ"};  // alpha, beta, gamma
  const char* sigma = "σ";

  std::string suffix;  // family subscript on the hyperbolic angles
  if (v.family != Family::Incircle) {
    suffix = std::string(1, "ABC"[index(v.family) - 1]);
  }

  Term terms[3];
  variant_terms(v, form, terms);

  std::string out = v.label() + ": ";
  for (int i = 0; i < 3; ++i) {
    if (i > 0) out += ", ";
    out += "r" + std::to_string(i + 1) + " = ";
    out += scale_names[terms[i].scale];
    out += ' ';
    out += func_names[static_cast<int>(terms[i].func)];
    out += "²(";  // superscript two
    out += sigma + suffix;
    if (terms[i].arg != kSigma) {
      out += "-";
      out += greek[terms[i].arg] + suffix;
    }
    out += ")";
  }
  return out;
}

}  // namespace malfatti
