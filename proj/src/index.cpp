#include "clustercat/index.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "clustercat/format.hpp"
#include "clustercat/homext.hpp"
#include "clustercat/oracle.hpp"

namespace clustercat {

IndexVector IndexVector::unit(const FanTriangulation& x, const Arc& arc) {
  IndexVector v(x);
  v.add(arc, 1);
  return v;
}

std::int64_t IndexVector::coefficient(const Arc& arc) const {
  auto it = coeffs_.find(arc);
  return it == coeffs_.end() ? 0 : it->second;
}

IndexVector& IndexVector::add(const Arc& arc, std::int64_t k) {
  if (k == 0) return *this;
  if (!x_.contains(arc)) throw DomainError(ErrorCode::NotInTriangulation, to_text(arc) + " is not a basis arc");
  auto& slot = coeffs_[arc];
  slot += k;
  if (slot == 0) coeffs_.erase(arc);
  return *this;
}

void IndexVector::require_same(const IndexVector& o) const {
  if (!(x_ == o.x_)) throw DomainError(ErrorCode::MixedTriangulations, "index vectors of different triangulations");
}

IndexVector& IndexVector::operator+=(const IndexVector& o) {
  require_same(o);
  for (const auto& [arc, k] : o.coeffs_) add(arc, k);
  return *this;
}

IndexVector& IndexVector::operator-=(const IndexVector& o) {
  require_same(o);
  for (const auto& [arc, k] : o.coeffs_) add(arc, -k);
  return *this;
}

IndexVector operator*(std::int64_t k, IndexVector a) {
  if (k == 0) a.coeffs_.clear();
  for (auto& [arc, c] : a.coeffs_) c *= k;
  return a;
}

namespace {

// A maximal member B -> C. `u` is the endpoint of B in (c0+, c1], `v` the
// one in (c1+, c0], with c0, c1 the canonical endpoints of C.
struct Step {
  Arc arc;
  MarkedPoint u;
  MarkedPoint v;
};

// Best fountain arc {base, x} mapping to C, scanning x clockwise from the
// closed end of the interval the free endpoint has to lie in.
std::optional<Arc> best_fountain_arc(const FanTriangulation& x, const MarkedPoint& open_start,
                                     const MarkedPoint& closed_end) {
  const auto& base = x.base();
  auto inside = [&](const MarkedPoint& p) { return in_interval(p, open_start, closed_end, Bound::Open, Bound::Closed); };
  const std::size_t budget = x.removed().size() + 8;
  MarkedPoint p = closed_end;
  for (std::size_t step = 0; step < budget; ++step) {
    if (!inside(p)) return std::nullopt;
    if (Arc::is_valid(base, p)) {
      const auto arc = Arc::make(base, p);
      if (x.contains(arc)) return arc;
    }
    const auto next = predecessor(p);
    if (next == p) {
      // Members approach an accumulation point without reaching it.
      throw DomainError(ErrorCode::ApproximationFailure,
                        "no maximal fountain arc towards " + to_text(p) + ": description is not contravariantly finite");
    }
    p = next;
  }
  throw DomainError(ErrorCode::InvalidTriangulation, "fountain scan exceeded its budget");
}

std::vector<Step> staircase(const FanTriangulation& x, const Arc& c) {
  const auto& c0 = c.first();
  const auto& c1 = c.second();
  const auto s0 = successor(c0);
  const auto s1 = successor(c1);
  auto in_first = [&](const MarkedPoint& p) { return in_interval(p, s0, c1, Bound::Open, Bound::Closed); };
  auto in_second = [&](const MarkedPoint& p) { return in_interval(p, s1, c0, Bound::Open, Bound::Closed); };

  std::vector<Arc> candidates;
  if (in_first(x.base())) {
    if (auto b = best_fountain_arc(x, s1, c0)) candidates.push_back(*b);
  } else if (in_second(x.base())) {
    if (auto b = best_fountain_arc(x, s0, c1)) candidates.push_back(*b);
  }
  for (const auto& a : x.added()) {
    if (hom_dim(a, c) == 1) candidates.push_back(a);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<Step> steps;
  for (const auto& b : candidates) {
    const bool dominated = std::any_of(candidates.begin(), candidates.end(),
                                       [&](const Arc& other) { return other != b && factors_through(b, c, other); });
    if (dominated) continue;
    const auto label = hom_label(b, c);
    steps.push_back(Step{b, label->b0, label->b1});
  }
  // Order along (c0+, c1]; along (c1+, c0] the order is then reversed.
  std::sort(steps.begin(), steps.end(), [&](const Step& a, const Step& b) {
    return a.u != b.u && in_interval(b.u, a.u, c1, Bound::Open, Bound::Closed);
  });
  return steps;
}

std::int64_t reach(const MarkedPoint& p) { return p.is_accumulation() ? 0 : std::llabs(p.position()); }

std::int64_t reach(const Obj& m) {
  std::int64_t r = 0;
  for (const auto& a : m.summands()) r = std::max({r, reach(a.first()), reach(a.second())});
  return r;
}

}  // namespace

Obj min_right_approximation(const FanTriangulation& x, const Arc& c) {
  if (x.contains(c)) return Obj{c};
  std::vector<Arc> arcs;
  for (const auto& s : staircase(x, c)) arcs.push_back(s.arc);
  return Obj(std::move(arcs));
}

Triangle approximation_triangle(const FanTriangulation& x, const Arc& c, const ApproximationOptions& opts) {
  const auto steps = staircase(x, c);

  Obj x0;
  for (const auto& s : steps) x0.add(s.arc);

  // Corners of the staircase inside the hammock of C.
  Obj x1;
  auto corner = [&](const MarkedPoint& p, const MarkedPoint& q) {
    if (Arc::is_valid(p, q)) x1.add(Arc::make(p, q));
  };
  if (steps.empty()) {
    // Nothing in X maps to C, so C is the suspension of a member.
    corner(successor(c.first()), successor(c.second()));
  } else {
    corner(successor(c.first()), steps.front().v);
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) corner(steps[i].u, steps[i + 1].v);
    corner(steps.back().u, successor(c.second()));
  }

  std::vector<Arc> connecting;
  for (const auto& a : x1.summands()) {
    if (!x.contains(a))
      throw DomainError(ErrorCode::ApproximationFailure, "cocone summand " + to_text(a) + " is not in the triangulation");
    if (ext_dim(c, a) == 0)
      throw DomainError(ErrorCode::ApproximationFailure, "cocone summand " + to_text(a) + " splits off");
    const auto target = suspend(a);
    if (!killed_by_triangulation(c, target, x))
      throw DomainError(ErrorCode::ApproximationFailure, "connecting map " + to_text(c) + " -> " + to_text(target) +
                                                             " is not killed by the triangulation");
    if (std::find(connecting.begin(), connecting.end(), target) == connecting.end()) connecting.push_back(target);
  }

  auto t = detail::make_triangle({TriangleBlock{x1, x0, c, std::move(connecting)}}, TriangleKind::Approximation);
  if (opts.verify_exactness) {
    const auto w = static_cast<int>(std::max({reach(x0), reach(x1), reach(Obj{c})})) + opts.window_slack;
    const auto report = verify_triangle_window(t, x.params(), Window{w});
    if (!report.pass)
      throw DomainError(ErrorCode::ApproximationFailure,
                        "approximation triangle of " + to_text(c) + " is not exact at " +
                            (report.witness ? to_text(*report.witness) : std::string("?")) + ": " + report.reason);
  }
  return t;
}

IndexVector index(const FanTriangulation& x, const Arc& c, const ApproximationOptions& opts) {
  IndexVector v(x);
  if (x.contains(c)) return v.add(c, 1);
  const auto t = approximation_triangle(x, c, opts);
  const auto x0 = t.b();
  const auto x1 = t.a();
  for (const auto& s : x0.summands()) v.add(s, 1);
  for (const auto& s : x1.summands()) v.add(s, -1);
  return v;
}

IndexVector index(const FanTriangulation& x, const Obj& m, const ApproximationOptions& opts) {
  IndexVector v(x);
  for (const auto& c : m.summands()) v += index(x, c, opts);
  return v;
}

bool is_rigid_object(const Obj& m) {
  for (const auto& u : m.summands()) {
    for (const auto& w : m.summands()) {
      if (ext_dim(u, w) == 1) return false;
    }
  }
  return true;
}

namespace {

void require_common(std::span<const IndexVector> vs) {
  for (const auto& v : vs) {
    if (!(v.triangulation() == vs.front().triangulation()))
      throw DomainError(ErrorCode::MixedTriangulations, "index vectors of different triangulations");
  }
}

}  // namespace

bool sign_coherent(std::span<const IndexVector> vs) {
  if (vs.empty()) return true;
  require_common(vs);
  std::map<Arc, int> sign;
  for (const auto& v : vs) {
    for (const auto& [arc, k] : v.coeffs()) {
      const int s = k > 0 ? 1 : -1;
      auto [it, fresh] = sign.emplace(arc, s);
      if (!fresh && it->second != s) return false;
    }
  }
  return true;
}

bool linearly_independent(std::span<const IndexVector> vs) {
  using boost::multiprecision::cpp_rational;
  if (vs.empty()) return true;
  require_common(vs);

  std::map<Arc, std::size_t> column;
  for (const auto& v : vs) {
    for (const auto& [arc, k] : v.coeffs()) column.emplace(arc, column.size());
  }
  if (column.size() < vs.size()) return false;

  std::vector<std::vector<cpp_rational>> rows;
  for (const auto& v : vs) {
    std::vector<cpp_rational> row(column.size());
    for (const auto& [arc, k] : v.coeffs()) row[column.at(arc)] = k;
    rows.push_back(std::move(row));
  }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < column.size() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const cpp_rational f = rows[r][col] / rows[rank][col];
      for (std::size_t k = col; k < column.size(); ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank == vs.size();
}

IndexVector additivity_defect(const FanTriangulation& x, const Triangle& t, const ApproximationOptions& opts) {
  return index(x, t.a(), opts) - index(x, t.b(), opts) + index(x, t.c(), opts);
}

int ImageDimVector::at(const Arc& w) const {
  auto it = dims.find(w);
  return it == dims.end() ? 0 : it->second;
}

ImageDimVector image_dim_vector(const FanTriangulation& x, const Triangle& t, const Window& window) {
  ImageDimVector out{{}, window};
  for (const auto& w : enumerate_arcs(x.params(), window)) {
    if (!x.contains(w)) continue;
    int d = 0;
    for (const auto& blk : t.blocks()) {
      const bool hit = std::any_of(blk.connecting.begin(), blk.connecting.end(),
                                   [&](const Arc& target) { return nonzero_path(w, blk.c, target); });
      d += hit ? 1 : 0;
    }
    if (d != 0) out.dims.emplace(w, d);
  }
  return out;
}

namespace {

IndexVector rebase(const Quadrilateral& q, const IndexVector& v, const std::optional<Arc>& side1,
                   const std::optional<Arc>& side2) {
  const auto& x = v.triangulation();
  if (!x.contains(q.x) || !(adjacent_triangles(x, q.x) == q))
    throw DomainError(ErrorCode::MixedTriangulations, "quadrilateral does not belong to the vector's triangulation");
  IndexVector out(flip(x, q.x).first);
  for (const auto& [arc, k] : v.coeffs()) {
    if (arc != q.x) out.add(arc, k);
  }
  if (const auto k = v.coefficient(q.x); k != 0) {
    if (side1) out.add(*side1, k);
    if (side2) out.add(*side2, k);
    out.add(q.y, -k);
  }
  return out;
}

}  // namespace

IndexVector phi(const Quadrilateral& q, const IndexVector& v) { return rebase(q, v, q.t1, q.t2); }

IndexVector psi(const Quadrilateral& q, const IndexVector& v) { return rebase(q, v, q.s1, q.s2); }

FlipIndex index_after_flip(const FanTriangulation& x, const Arc& arc, const Obj& m, bool check) {
  if (!is_rigid(x)) throw DomainError(ErrorCode::NotRigidTriangulation, "mutation formula needs a rigid triangulation");
  if (!is_rigid_object(m)) throw DomainError(ErrorCode::NotRigidObject, to_text(m));
  auto [y, quad] = flip(x, arc);
  const auto before = index(x, m);
  const auto k = before.coefficient(arc);
  FlipIndex out{k >= 0 ? phi(quad, before) : psi(quad, before), k >= 0 ? MutationBranch::Phi : MutationBranch::Psi, k};
  if (check) {
    const auto direct = index(y, m);
    if (!(direct == out.value))
      throw DomainError(ErrorCode::MutationMismatch, "mutation formula disagrees with the recomputed index of " + to_text(m));
  }
  return out;
}

}  // namespace clustercat
