#include "clustercat/triangulation.hpp"

#include <algorithm>
#include <array>

#include "clustercat/format.hpp"
#include "clustercat/homext.hpp"
#include "clustercat/oracle.hpp"

namespace clustercat {

FanTriangulation FanTriangulation::fountain(const ModelParams& params, const MarkedPoint& base) {
  if (!base.valid_for(params)) throw DomainError(ErrorCode::InvalidPoint, "base point " + to_text(base) + " outside the model");
  return FanTriangulation(params, base);
}

FanTriangulation FanTriangulation::from_description(const ModelParams& params, const MarkedPoint& base,
                                                    std::set<Arc> removed, std::set<Arc> added,
                                                    std::vector<FlipRecord> log) {
  if (removed.size() != added.size())
    throw DomainError(ErrorCode::InvalidTriangulation, "removed and added sets differ in size");
  auto x = from_description_unchecked(params, base, std::move(removed), std::move(added));
  x.log_ = std::move(log);
  return x;
}

FanTriangulation FanTriangulation::from_description_unchecked(const ModelParams& params, const MarkedPoint& base,
                                                              std::set<Arc> removed, std::set<Arc> added) {
  auto x = fountain(params, base);
  for (const auto& a : removed) {
    if (!a.valid_for(params) || !x.is_fountain_arc(a))
      throw DomainError(ErrorCode::InvalidTriangulation, "removed arc " + to_text(a) + " is not a fountain arc");
  }
  for (const auto& a : added) {
    if (!a.valid_for(params) || x.is_fountain_arc(a))
      throw DomainError(ErrorCode::InvalidTriangulation, "added arc " + to_text(a) + " is a fountain arc");
  }
  x.removed_ = std::move(removed);
  x.added_ = std::move(added);
  return x;
}

bool FanTriangulation::contains(const Arc& arc) const {
  if (added_.count(arc)) return true;
  return is_fountain_arc(arc) && !removed_.count(arc);
}

std::vector<MarkedPoint> FanTriangulation::description_points() const {
  std::vector<MarkedPoint> pts{base_};
  for (const auto* s : {&removed_, &added_}) {
    for (const auto& a : *s) {
      pts.push_back(a.first());
      pts.push_back(a.second());
    }
  }
  return pts;
}

std::vector<Arc> FanTriangulation::representative_members(std::span<const MarkedPoint> crit) const {
  auto all = description_points();
  all.insert(all.end(), crit.begin(), crit.end());
  std::vector<Arc> out(added_.begin(), added_.end());
  for (const auto& p : local_points(params_, all)) {
    if (!Arc::is_valid(base_, p)) continue;
    const auto arc = Arc::make(base_, p);
    if (!removed_.count(arc)) out.push_back(arc);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool FanTriangulation::any_member(std::span<const MarkedPoint> crit, const std::function<bool(const Arc&)>& pred) const {
  const auto reps = representative_members(crit);
  return std::any_of(reps.begin(), reps.end(), pred);
}

std::vector<MarkedPoint> local_points(const ModelParams& params, std::span<const MarkedPoint> crit, int radius) {
  std::set<MarkedPoint> pts;
  std::vector<bool> touched(static_cast<std::size_t>(params.n), false);
  for (int j = 0; j < params.n; ++j) pts.insert(MarkedPoint::accumulation(j));
  for (const auto& p : crit) {
    if (p.is_accumulation() || !p.valid_for(params)) continue;
    touched[static_cast<std::size_t>(p.interval())] = true;
    for (int d = -radius; d <= radius; ++d) pts.insert(MarkedPoint::regular(p.interval(), p.position() + d));
  }
  for (int j = 0; j < params.n; ++j) {
    if (!touched[static_cast<std::size_t>(j)]) pts.insert(MarkedPoint::regular(j, 0));
  }
  return {pts.begin(), pts.end()};
}

namespace {

std::optional<Arc> side(const MarkedPoint& p, const MarkedPoint& q) {
  if (!Arc::is_valid(p, q)) return std::nullopt;
  return Arc::make(p, q);
}

// An edge of a triangle in X: a member arc or a boundary segment.
bool edge_of(const FanTriangulation& x, const MarkedPoint& p, const MarkedPoint& q) {
  if (are_neighbours(p, q)) return true;
  return Arc::is_valid(p, q) && x.contains(Arc::make(p, q));
}

std::optional<MarkedPoint> apex(const FanTriangulation& x, const MarkedPoint& p, const MarkedPoint& q,
                                std::span<const MarkedPoint> candidates) {
  std::optional<MarkedPoint> found;
  for (const auto& r : candidates) {
    if (!in_open(r, p, q)) continue;
    if (!edge_of(x, p, r) || !edge_of(x, r, q)) continue;
    if (found && *found != r)
      throw DomainError(ErrorCode::InvalidTriangulation, "two triangles on one side of " + to_text(Arc::make(p, q)));
    found = r;
  }
  return found;
}

}  // namespace

Quadrilateral adjacent_triangles(const FanTriangulation& x, const Arc& arc) {
  if (!x.contains(arc)) throw DomainError(ErrorCode::NotInTriangulation, to_text(arc));
  const auto& p = arc.first();
  const auto& q = arc.second();

  std::vector<MarkedPoint> crit{p, q, x.base()};
  for (const auto* s : {&x.removed(), &x.added()}) {
    for (const auto& a : *s) {
      crit.push_back(a.first());
      crit.push_back(a.second());
    }
  }
  const auto candidates = local_points(x.params(), crit);
  const auto left = apex(x, p, q, candidates);
  const auto right = apex(x, q, p, candidates);
  if (!left || !right) throw DomainError(ErrorCode::NoFlipAvailable, "no finite quadrilateral around " + to_text(arc));

  Quadrilateral quad{arc, Arc::make(*left, *right), p, *left, q, *right, {}, {}, {}, {}};
  quad.s1 = side(quad.y0, quad.x1);
  quad.s2 = side(quad.x0, quad.y1);
  quad.t1 = side(quad.x1, quad.y1);
  quad.t2 = side(quad.y0, quad.x0);
  return quad;
}

std::pair<FanTriangulation, Quadrilateral> flip(const FanTriangulation& x, const Arc& arc) {
  auto quad = adjacent_triangles(x, arc);
  FanTriangulation y = x;
  if (y.added_.erase(quad.x) == 0) y.removed_.insert(quad.x);
  if (y.removed_.erase(quad.y) == 0) y.added_.insert(quad.y);
  y.log_.push_back(FlipRecord{quad.x, quad.y});
  return {std::move(y), std::move(quad)};
}

std::pair<Triangle, Triangle> exchange_triangles(const Quadrilateral& q) {
  auto middle = [](const std::optional<Arc>& u, const std::optional<Arc>& v) {
    Obj m;
    if (u) m.add(*u);
    if (v) m.add(*v);
    return m;
  };
  auto x_to_y = detail::make_triangle({TriangleBlock{Obj{q.x}, middle(q.s1, q.s2), q.y, {suspend(q.x)}}},
                                      TriangleKind::Transverse);
  auto y_to_x = detail::make_triangle({TriangleBlock{Obj{q.y}, middle(q.t1, q.t2), q.x, {suspend(q.y)}}},
                                      TriangleKind::Transverse);
  return {std::move(x_to_y), std::move(y_to_x)};
}

bool is_rigid(const FanTriangulation& x) {
  // Infinitely many pairs of fountain arcs meet at an accumulation base, and
  // finitely many removals cannot kill all their extensions.
  if (x.base().is_accumulation()) return false;
  // Fountain arcs at a regular base only meet at that base, so every
  // nonzero extension involves an added arc.
  for (const auto& a : x.added()) {
    const std::array<MarkedPoint, 2> crit{a.first(), a.second()};
    if (x.any_member(crit, [&](const Arc& m) { return ext_dim(a, m) == 1 || ext_dim(m, a) == 1; })) return false;
  }
  return true;
}

TriangulationReport validate_window(const FanTriangulation& x, const Window& window) {
  TriangulationReport report;
  const auto arcs = enumerate_arcs(x.params(), window);
  std::vector<Arc> members;
  std::vector<Arc> others;
  for (const auto& a : arcs) (x.contains(a) ? members : others).push_back(a);

  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (crosses_transversely(members[i], members[j]))
        report.violations.push_back("crossing members " + to_text(members[i]) + " " + to_text(members[j]));
    }
  }

  std::vector<Arc> wide;
  for (const auto& a : enumerate_arcs(x.params(), Window{window.w + 2})) {
    if (x.contains(a)) wide.push_back(a);
  }
  for (const auto& a : others) {
    const bool crossed = std::any_of(wide.begin(), wide.end(), [&](const Arc& m) { return crosses_transversely(a, m); });
    if (!crossed) report.violations.push_back("not maximal: " + to_text(a) + " crosses no member");
  }
  report.pass = report.violations.empty();
  return report;
}

}  // namespace clustercat
