#include "clustercat/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "clustercat/format.hpp"
#include "clustercat/oracle.hpp"
#include "clustercat/triangulation.hpp"

namespace clustercat {

namespace {

constexpr double kLogisticScale = 1.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  // Avoid "-0.000".
  if (std::string(buf) == "-0.000") return "0.000";
  return buf;
}

struct Canvas {
  const ModelParams& params;
  const RenderSpec& spec;
  std::string body;

  double centre() const { return spec.size / 2.0; }
  double radius() const { return spec.size * 0.4; }

  std::pair<double, double> at(const MarkedPoint& p, double r_scale = 1.0) const {
    const double t = point_angle(params, p);
    // SVG's y axis points down; anticlockwise on screen needs -sin.
    return {centre() + radius() * r_scale * std::cos(t), centre() - radius() * r_scale * std::sin(t)};
  }

  void chord(const Arc& a, const char* colour) {
    const auto [x1, y1] = at(a.first());
    const auto [x2, y2] = at(a.second());
    body += "  <line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" + num(y2) +
            "\" stroke=\"" + colour + "\" stroke-width=\"" + num(spec.arc_stroke) + "\"/>\n";
  }

  void point(const MarkedPoint& p) {
    const auto [x, y] = at(p);
    if (p.is_accumulation()) {
      body += "  <circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"4.000\" fill=\"black\"/>\n";
    } else {
      body += "  <circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"2.000\" fill=\"white\" stroke=\"black\"/>\n";
    }
    if (spec.labels) {
      const auto [lx, ly] = at(p, 1.12);
      body += "  <text x=\"" + num(lx) + "\" y=\"" + num(ly) +
              "\" font-size=\"8\" text-anchor=\"middle\" dominant-baseline=\"middle\">" + to_text(p) + "</text>\n";
    }
  }

  std::string finish() const {
    const auto s = std::to_string(spec.size);
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + s + "\" height=\"" + s +
           "\" viewBox=\"0 0 " + s + " " + s + "\">\n";
    out += "  <circle cx=\"" + num(centre()) + "\" cy=\"" + num(centre()) + "\" r=\"" + num(radius()) +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"" + num(spec.boundary_stroke) + "\"/>\n";
    out += body;
    out += "</svg>\n";
    return out;
  }
};

std::string draw(const ModelParams& params, std::span<const Arc> arcs, std::span<const Arc> extra,
                 const RenderSpec& spec) {
  Canvas canvas{params, spec, {}};
  for (const auto& a : arcs) canvas.chord(a, "black");
  for (const auto& a : extra) canvas.chord(a, "#c0392b");
  for (const auto& p : window_points(params, spec.window)) canvas.point(p);
  return canvas.finish();
}

}  // namespace

double point_angle(const ModelParams& params, const MarkedPoint& p) {
  const double sector = 2.0 * std::numbers::pi / params.n;
  double offset = 0.0;
  if (p.is_regular()) offset = 1.0 / (1.0 + std::exp(-static_cast<double>(p.position()) / kLogisticScale));
  return sector * (p.interval() + offset);
}

std::string render_svg(const ModelParams& params, std::span<const Arc> arcs, const RenderSpec& spec) {
  return draw(params, arcs, {}, spec);
}

std::string render_svg(const FanTriangulation& x, std::span<const Arc> extra, const RenderSpec& spec) {
  std::vector<Arc> members;
  for (const auto& a : enumerate_arcs(x.params(), spec.window)) {
    if (x.contains(a)) members.push_back(a);
  }
  return draw(x.params(), members, extra, spec);
}

}  // namespace clustercat
