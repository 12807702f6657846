#include "clustercat/homext.hpp"

#include <array>

#include "clustercat/oracle.hpp"
#include "clustercat/triangulation.hpp"

namespace clustercat {

namespace {

bool target_rule(const MarkedPoint& b0, const MarkedPoint& b1, const MarkedPoint& c0, const MarkedPoint& c1) {
  return in_interval(b0, successor(c0), c1, Bound::Open, Bound::Closed) &&
         in_interval(b1, successor(c1), c0, Bound::Open, Bound::Closed);
}

bool source_rule(const MarkedPoint& c0, const MarkedPoint& c1, const MarkedPoint& d0, const MarkedPoint& d1) {
  return in_interval(d0, c0, predecessor(c1), Bound::Closed, Bound::Open) &&
         in_interval(d1, c1, predecessor(c0), Bound::Closed, Bound::Open);
}

}  // namespace

std::optional<HomLabel> hom_label(const Arc& b, const Arc& c) {
  const std::array<std::pair<MarkedPoint, MarkedPoint>, 2> bl{{{b.first(), b.second()}, {b.second(), b.first()}}};
  const auto& c0 = c.first();
  const auto& c1 = c.second();
  // Swapping the labels of c is the same as swapping those of b.
  for (const auto& [b0, b1] : bl) {
    if (target_rule(b0, b1, c0, c1)) return HomLabel{b0, b1, c0, c1};
  }
  return std::nullopt;
}

int hom_dim(const Arc& b, const Arc& c) { return hom_label(b, c).has_value() ? 1 : 0; }

int hom_dim_from_source(const Arc& c, const Arc& d) {
  const std::array<std::pair<MarkedPoint, MarkedPoint>, 2> dl{{{d.first(), d.second()}, {d.second(), d.first()}}};
  for (const auto& [d0, d1] : dl) {
    if (source_rule(c.first(), c.second(), d0, d1)) return 1;
  }
  return 0;
}

int ext_dim(const Arc& c, const Arc& a) {
  if (crosses_transversely(a, c)) return 1;
  if (a == c) return a.both_accumulation() ? 1 : 0;
  for (const auto& p : {c.first(), c.second()}) {
    if (!p.is_accumulation() || !a.has_endpoint(p)) continue;
    const auto& c0 = c.other(p);
    const auto& a0 = a.other(p);
    // Sweep anticlockwise from c0 to a0 without meeting p.
    return in_open(a0, c0, p) ? 1 : 0;
  }
  return 0;
}

bool factors_through(const Arc& b, const Arc& c, const Arc& s) {
  const auto label = hom_label(b, c);
  if (!label) throw DomainError(ErrorCode::PreconditionViolated, "factors_through needs a nonzero map");
  const auto& [b0, b1, c0, c1] = *label;
  const auto& s0 = s.first();
  const auto& s1 = s.second();
  return (in_closed(s0, b0, c1) && in_closed(s1, b1, c0)) || (in_closed(s1, b0, c1) && in_closed(s0, b1, c0));
}

bool composite_nonzero(const Arc& a, const Arc& b, const Arc& c) {
  if (hom_dim(a, b) == 0 || hom_dim(b, c) == 0)
    throw DomainError(ErrorCode::PreconditionViolated, "composite_nonzero needs nonzero factors");
  return hom_dim(a, c) == 1 && factors_through(a, c, b);
}

bool nonzero_path(const Arc& a, const Arc& b, const Arc& c) {
  if (hom_dim(a, b) == 0 || hom_dim(b, c) == 0 || hom_dim(a, c) == 0) return false;
  return factors_through(a, c, b);
}

bool killed_by_triangulation(const Arc& z_source, const Arc& z_target, const FanTriangulation& x) {
  if (hom_dim(z_source, z_target) == 0) return true;
  const std::array<MarkedPoint, 4> crit{z_source.first(), z_source.second(), z_target.first(), z_target.second()};
  return !x.any_member(crit, [&](const Arc& w) { return nonzero_path(w, z_source, z_target); });
}

bool killed_by_triangulation_window(const Arc& z_source, const Arc& z_target, const FanTriangulation& x,
                                    const Window& window) {
  if (hom_dim(z_source, z_target) == 0) return true;
  for (const auto& w : enumerate_arcs(x.params(), window)) {
    if (x.contains(w) && nonzero_path(w, z_source, z_target)) return false;
  }
  return true;
}

}  // namespace clustercat
