// Command line front end: compute | verify | render.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/input/output error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "malfatti/malfatti.hpp"

namespace {

using namespace malfatti;

struct RunRequest {
  std::vector<double> sides;   // a b c
  std::vector<double> angles;  // A_deg B_deg
  double scale = 1.0;
  std::string variants = "all";
  bool paper_verbatim = false;
  double tolerance = 1e-7;
  std::string out_dir = ".";
};

FormulaForm form_of(const RunRequest& req) {
  return req.paper_verbatim ? FormulaForm::PaperVerbatim : FormulaForm::Adjudicated;
}

Triangle make_triangle(const RunRequest& req) {
  const bool have_sides = !req.sides.empty();
  const bool have_angles = !req.angles.empty();
  if (have_sides == have_angles) {
    throw Error("give exactly one of --sides or --angles");
  }
  if (have_sides) {
    return Triangle::from_sides(req.sides[0], req.sides[1], req.sides[2]);
  }
  constexpr double kDegToRad = std::numbers::pi / 180.0;
  return Triangle::from_angles(req.angles[0] * kDegToRad, req.angles[1] * kDegToRad, req.scale);
}

// "all", or comma-separated indices and ranges ("1,5,9..12,17-20").
std::vector<int> parse_variants(const std::string& text) {
  std::vector<bool> selected(kVariantCount + 1, false);
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string token = text.substr(pos, comma - pos);
    pos = comma + 1;
    if (token.empty()) continue;
    if (token == "all") {
      std::fill(selected.begin() + 1, selected.end(), true);
      continue;
    }
    int lo = 0, hi = 0;
    size_t sep = token.find("..");
    size_t sep_len = 2;
    if (sep == std::string::npos) {
      sep = token.find('-', 1);
      sep_len = 1;
    }
    try {
      if (sep == std::string::npos) {
        lo = hi = std::stoi(token);
      } else {
        lo = std::stoi(token.substr(0, sep));
        hi = std::stoi(token.substr(sep + sep_len));
      }
    } catch (const std::exception&) {
      throw Error("bad variant selection token '" + token + "'");
    }
    if (lo < 1 || hi > kVariantCount || lo > hi) {
      throw Error("variant selection '" + token + "' outside 1..32");
    }
    for (int i = lo; i <= hi; ++i) selected[i] = true;
  }
  std::vector<int> out;
  for (int i = 1; i <= kVariantCount; ++i) {
    if (selected[i]) out.push_back(i);
  }
  if (out.empty()) throw Error("empty variant selection");
  return out;
}

int cmd_compute(const RunRequest& req) {
  const Triangle t = make_triangle(req);
  const DerivedQuantities q = derive(t);
  const AuxiliaryAngles ang = auxiliary_angles(q);
  const Frame frame = canonical_frame(t);
  std::vector<Configuration> configs;
  for (int idx : parse_variants(req.variants)) {
    const RadiiTriplet radii =
        radii_for_variant(q, ang, TripletVariant::from_index(idx), form_of(req));
    configs.push_back(place_configuration(frame, radii));
  }
  std::cout << compute_document(q, configs) << "\n";
  return 0;
}

int cmd_verify(const RunRequest& req) {
  const Triangle t = make_triangle(req);
  const DerivedQuantities q = derive(t);
  VerifyOptions options;
  options.tolerance = req.tolerance;
  options.form = form_of(req);

  const std::vector<int> indices = parse_variants(req.variants);
  std::vector<VerificationReport> reports;
  if (indices.size() == kVariantCount) {
    reports = verify_all(t, options);
  } else {
    for (int idx : indices) {
      reports.push_back(verify_variant(t, TripletVariant::from_index(idx), options));
    }
  }
  std::cout << verify_document(q, reports) << "\n";

  int match = 0, corrected = 0, fail = 0;
  for (const VerificationReport& rep : reports) {
    if (rep.status == VerifyStatus::Match) ++match;
    if (rep.status == VerifyStatus::Corrected) ++corrected;
    if (rep.status == VerifyStatus::Fail) ++fail;
  }
  std::cerr << "verify: " << match << " match, " << corrected << " corrected, " << fail
            << " fail\n";
  return fail == 0 ? 0 : 1;
}

int cmd_render(const RunRequest& req) {
  const Triangle t = make_triangle(req);
  const DerivedQuantities q = derive(t);
  const AuxiliaryAngles ang = auxiliary_angles(q);
  const Frame frame = canonical_frame(t);
  std::error_code ec;
  std::filesystem::create_directories(req.out_dir, ec);
  for (int idx : parse_variants(req.variants)) {
    const TripletVariant variant = TripletVariant::from_index(idx);
    const RadiiTriplet radii = radii_for_variant(q, ang, variant, form_of(req));
    const Configuration cfg = place_configuration(frame, radii);
    const std::string svg = render_svg(frame, cfg, formula_text(variant, form_of(req)));
    const std::filesystem::path path =
        std::filesystem::path(req.out_dir) / (variant.label() + ".svg");
    std::ofstream file(path, std::ios::binary);
    file << svg;
    if (!file) {
      std::cerr << "error: cannot write " << path.string() << "\n";
      return 2;
    }
  }
  return 0;
}

void add_common_options(CLI::App* cmd, RunRequest& req) {
  cmd->add_option("--sides", req.sides, "Triangle side lengths a b c")->expected(3);
  cmd->add_option("--angles", req.angles, "Angles A and B in degrees")->expected(2);
  cmd->add_option("--scale", req.scale, "Length of side c when using --angles");
  cmd->add_option("--variants", req.variants,
                  "Variant selection: 'all' or indices/ranges, e.g. 1,9..12");
  cmd->add_flag("--paper-verbatim", req.paper_verbatim,
                "Evaluate the radius tables exactly as printed (keeps the two known typos)");
  cmd->add_option("--tolerance", req.tolerance, "Relative tolerance for oracle matching");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tangent circle triplets of a triangle: the Malfatti configuration and its 31 companions"};
  app.require_subcommand(1);

  RunRequest req;
  CLI::App* compute = app.add_subcommand("compute", "Radii, centers and tangent points as JSON");
  add_common_options(compute, req);
  CLI::App* verify = app.add_subcommand("verify", "Check closed forms against the tangency solver");
  add_common_options(verify, req);
  CLI::App* render = app.add_subcommand("render", "Write one SVG figure per variant");
  add_common_options(render, req);
  render->add_option("--out", req.out_dir, "Output directory for SVG files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (compute->parsed()) return cmd_compute(req);
    if (verify->parsed()) return cmd_verify(req);
    if (render->parsed()) return cmd_render(req);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
