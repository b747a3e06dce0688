#include "malfatti/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace malfatti {

namespace {

std::string fmt(double v) {
  char buf[64];
  // -0.000000 and 0.000000 must serialize identically.
  if (v == 0.0) v = 0.0;
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct Box {
  double xmin = 1e300, ymin = 1e300, xmax = -1e300, ymax = -1e300;
  void add(Vec2 p) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  void add_circle(const Circle& c) {
    add({c.center.x - c.radius, c.center.y - c.radius});
    add({c.center.x + c.radius, c.center.y + c.radius});
  }
};

Vec2 flip(Vec2 p) { return {p.x, -p.y}; }

void line_elem(std::string& out, Vec2 a, Vec2 b) {
  a = flip(a);
  b = flip(b);
  out += "  <line x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(a.y) + "\" x2=\"" + fmt(b.x) +
         "\" y2=\"" + fmt(b.y) + "\"/>\n";
}

void circle_elem(std::string& out, Vec2 center, double radius, const char* extra) {
  center = flip(center);
  out += "  <circle cx=\"" + fmt(center.x) + "\" cy=\"" + fmt(center.y) + "\" r=\"" +
         fmt(radius) + "\"" + extra + "/>\n";
}

struct Extension {
  Vec2 from, to;
  bool present = false;
};

// Dashed pieces of the side line beyond the segment [p, q], long enough to
// cover the given tangent points plus a small overhang.
std::pair<Extension, Extension> extensions(Vec2 p, Vec2 q, Vec2 t1, Vec2 t2, double overhang) {
  const double len = distance(p, q);
  const Vec2 dir = normalized(q - p);
  double tmin = 0, tmax = len;
  for (Vec2 t : {t1, t2}) {
    const double proj = dot(t - p, dir);
    tmin = std::min(tmin, proj);
    tmax = std::max(tmax, proj);
  }
  std::pair<Extension, Extension> out;
  if (tmin < 0) {
    out.first = {p, p + (tmin - overhang) * dir, true};
  }
  if (tmax > len) {
    out.second = {q, p + (tmax + overhang) * dir, true};
  }
  return out;
}

std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Frame& frame, const Configuration& config,
                       const std::string& caption) {
  const Vec2 A = frame.at(Vertex::A), B = frame.at(Vertex::B), C = frame.at(Vertex::C);

  Box box;
  for (Vec2 v : {A, B, C}) box.add(v);
  for (const Circle& c : config.circles) box.add_circle(c);
  for (Vec2 t : config.tangent_points) box.add(t);

  const double diag = std::hypot(box.xmax - box.xmin, box.ymax - box.ymin);
  const double overhang = 0.03 * diag;

  // Side lines with their tangent points: BC holds D2 and D3, CA holds E1 and
  // E3, AB holds F1 and F2.
  const std::pair<Extension, Extension> ext[3] = {
      extensions(B, C, config.tangent_point(TangentPoint::D2),
                 config.tangent_point(TangentPoint::D3), overhang),
      extensions(C, A, config.tangent_point(TangentPoint::E1),
                 config.tangent_point(TangentPoint::E3), overhang),
      extensions(A, B, config.tangent_point(TangentPoint::F1),
                 config.tangent_point(TangentPoint::F2), overhang),
  };
  for (const auto& pair : ext) {
    for (const Extension& e : {pair.first, pair.second}) {
      if (e.present) {
        box.add(e.from);
        box.add(e.to);
      }
    }
  }

  const double margin = 0.05 * std::max(box.xmax - box.xmin, box.ymax - box.ymin);
  const double caption_band = 0.06 * diag;
  const double vx = box.xmin - margin;
  const double vy = -box.ymax - margin;  // flipped y
  const double vw = (box.xmax - box.xmin) + 2 * margin;
  const double vh = (box.ymax - box.ymin) + 2 * margin + caption_band;

  const double stroke = 0.004 * diag;
  const double dot_r = 0.008 * diag;
  const double label_font = 0.05 * diag;
  const double caption_font = 0.032 * diag;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + fmt(vx) + " " +
         fmt(vy) + " " + fmt(vw) + " " + fmt(vh) + "\">\n";
  out += "<title>" + xml_escape(config.variant.label()) + "</title>\n";

  out += "<g fill=\"none\" stroke=\"#999999\" stroke-width=\"" + fmt(stroke) +
         "\" stroke-dasharray=\"" + fmt(3 * stroke) + " " + fmt(3 * stroke) + "\">\n";
  for (const auto& pair : ext) {
    for (const Extension& e : {pair.first, pair.second}) {
      if (e.present) line_elem(out, e.from, e.to);
    }
  }
  out += "</g>\n";

  out += "<g fill=\"none\" stroke=\"#000000\" stroke-width=\"" + fmt(stroke) + "\">\n";
  line_elem(out, B, C);
  line_elem(out, C, A);
  line_elem(out, A, B);
  out += "</g>\n";

  out += "<g fill=\"none\" stroke=\"#2060c0\" stroke-width=\"" + fmt(stroke) + "\">\n";
  for (const Circle& c : config.circles) circle_elem(out, c.center, c.radius, "");
  out += "</g>\n";

  out += "<g fill=\"#c03030\" stroke=\"none\">\n";
  for (int i = 0; i < kTangentPointCount; ++i) {
    circle_elem(out, config.tangent_points[i], dot_r, "");
  }
  out += "</g>\n";

  out += "<g font-family=\"sans-serif\" font-size=\"" + fmt(label_font) + "\" fill=\"#000000\">\n";
  const Vec2 centroid = (1.0 / 3.0) * (A + B + C);
  const char* names[3] = {"A", "B", "C"};
  for (int i = 0; i < 3; ++i) {
    const Vec2 v = frame.vertex[i];
    const Vec2 away = normalized(v - centroid);
    const Vec2 pos = flip(v + label_font * away);
    out += "  <text x=\"" + fmt(pos.x) + "\" y=\"" + fmt(pos.y) + "\">" + names[i] + "</text>\n";
  }
  out += "</g>\n";

  out += "<text font-family=\"sans-serif\" font-size=\"" + fmt(caption_font) + "\" x=\"" +
         fmt(vx + margin) + "\" y=\"" + fmt(vy + vh - 0.4 * caption_band) + "\">" +
         xml_escape(caption) + "</text>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace malfatti
