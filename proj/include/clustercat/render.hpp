#pragma once

// SVG drawings of arc systems on the disc.

#include <span>
#include <string>

#include "clustercat/surface.hpp"

namespace clustercat {

class FanTriangulation;

struct RenderSpec {
  /// Regular points drawn (and labelled) are those of this window.
  Window window{6};
  int size = 480;
  double arc_stroke = 1.2;
  double boundary_stroke = 1.5;
  bool labels = true;
};

/// Angle of a point in radians. Accumulation(j) sits at 2*pi*j/n and
/// Regular(j, k) at a logistic interpolation of k inside interval j.
double point_angle(const ModelParams& params, const MarkedPoint& p);

/// Deterministic SVG 1.1 document. Arcs are straight chords.
std::string render_svg(const ModelParams& params, std::span<const Arc> arcs, const RenderSpec& spec = {});

/// Members of X with both endpoints in the window, plus `extra` arcs in a
/// second colour.
std::string render_svg(const FanTriangulation& x, std::span<const Arc> extra, const RenderSpec& spec = {});

}  // namespace clustercat
