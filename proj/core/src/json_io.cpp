#include "malfatti/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace malfatti {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

std::string num(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string point(Vec2 p) { return "[" + num(p.x) + "," + num(p.y) + "]"; }

std::string radii3(double r1, double r2, double r3) {
  return "[" + num(r1) + "," + num(r2) + "," + num(r3) + "]";
}

const char* tangency_name(TangencyType t) {
  return t == TangencyType::External ? "external" : "internal";
}

std::string tangency_array(const std::array<TangencyType, 3>& t) {
  std::string out = "[";
  for (int i = 0; i < 3; ++i) {
    if (i) out += ",";
    out += std::string("\"") + tangency_name(t[i]) + "\"";
  }
  return out + "]";
}

std::string triangle_object(const DerivedQuantities& q) {
  std::string out = "{";
  out += "\"a\":" + num(q.side[0]) + ",";
  out += "\"b\":" + num(q.side[1]) + ",";
  out += "\"c\":" + num(q.side[2]) + ",";
  out += "\"A_deg\":" + num(q.angle[0] * kRadToDeg) + ",";
  out += "\"B_deg\":" + num(q.angle[1] * kRadToDeg) + ",";
  out += "\"C_deg\":" + num(q.angle[2] * kRadToDeg) + ",";
  out += "\"s\":" + num(q.s) + ",";
  out += "\"r\":" + num(q.r) + ",";
  out += "\"rA\":" + num(q.exradius[0]) + ",";
  out += "\"rB\":" + num(q.exradius[1]) + ",";
  out += "\"rC\":" + num(q.exradius[2]);
  return out + "}";
}

}  // namespace

std::string compute_document(const DerivedQuantities& q,
                             const std::vector<Configuration>& configs) {
  std::string out = "{\"schema\":1,\"triangle\":" + triangle_object(q) + ",\"triplets\":[";
  bool first = true;
  for (const Configuration& cfg : configs) {
    if (!first) out += ",";
    first = false;
    out += "{";
    out += "\"index\":" + std::to_string(cfg.variant.global_index()) + ",";
    out += "\"label\":\"" + cfg.variant.label() + "\",";
    out += "\"family\":\"" + std::string(family_name(cfg.variant.family)) + "\",";
    out += "\"case\":" + std::to_string(cfg.case_id) + ",";
    out += "\"r1\":" + num(cfg.circles[0].radius) + ",";
    out += "\"r2\":" + num(cfg.circles[1].radius) + ",";
    out += "\"r3\":" + num(cfg.circles[2].radius) + ",";
    out += "\"centers\":[" + point(cfg.circles[0].center) + "," + point(cfg.circles[1].center) +
           "," + point(cfg.circles[2].center) + "],";
    out += "\"tangent_points\":{";
    for (int i = 0; i < kTangentPointCount; ++i) {
      if (i) out += ",";
      out += "\"" + std::string(tangent_point_name(static_cast<TangentPoint>(i))) +
             "\":" + point(cfg.tangent_points[i]);
    }
    out += "},";
    out += "\"tangency_types\":" + tangency_array(cfg.tangency) + ",";
    out += "\"max_residual\":" + num(cfg.max_residual) + ",";
    out += std::string("\"corrected_from_paper\":") + (cfg.corrected_from_paper ? "true" : "false") + ",";
    out += std::string("\"near_degenerate\":") + (cfg.near_degenerate ? "true" : "false");
    out += "}";
  }
  out += "]}";
  return out;
}

std::string verify_document(const DerivedQuantities& q,
                            const std::vector<VerificationReport>& reports) {
  int match = 0, corrected = 0, fail = 0;
  std::string out = "{\"schema\":1,\"triangle\":" + triangle_object(q) + ",\"reports\":[";
  bool first = true;
  for (const VerificationReport& rep : reports) {
    if (!first) out += ",";
    first = false;
    switch (rep.status) {
      case VerifyStatus::Match: ++match; break;
      case VerifyStatus::Corrected: ++corrected; break;
      case VerifyStatus::Fail: ++fail; break;
    }
    out += "{";
    out += "\"index\":" + std::to_string(rep.variant.global_index()) + ",";
    out += "\"label\":\"" + rep.variant.label() + "\",";
    out += "\"family\":\"" + std::string(family_name(rep.variant.family)) + "\",";
    out += "\"case\":" + std::to_string(rep.case_id) + ",";
    out += "\"status\":\"" + std::string(to_string(rep.status)) + "\",";
    out += "\"closed_form\":" + radii3(rep.closed_form.r1, rep.closed_form.r2, rep.closed_form.r3) + ",";
    out += "\"oracle\":";
    out += rep.oracle_found ? radii3(rep.oracle[0], rep.oracle[1], rep.oracle[2]) : "null";
    out += ",";
    out += "\"rel_error\":" + num(rep.rel_error) + ",";
    out += "\"verbatim_rel_error\":" + num(rep.verbatim_rel_error) + ",";
    out += "\"max_geometric_residual\":" + num(rep.max_geometric_residual) + ",";
    out += "\"tangency_types\":" + tangency_array(rep.tangency) + ",";
    out += std::string("\"corrected_from_paper\":") +
           (rep.closed_form.corrected_from_paper ? "true" : "false");
    if (!rep.note.empty()) {
      std::string escaped;
      for (char ch : rep.note) {
        if (ch == '"' || ch == '\\') escaped += '\\';
        if (static_cast<unsigned char>(ch) >= 0x20) escaped += ch;
      }
      out += ",\"note\":\"" + escaped + "\"";
    }
    out += "}";
  }
  out += "],\"summary\":{\"match\":" + std::to_string(match) +
         ",\"corrected\":" + std::to_string(corrected) + ",\"fail\":" + std::to_string(fail) + "}}";
  return out;
}

}  // namespace malfatti
