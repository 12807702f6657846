#include "clustercat/surface.hpp"

#include <algorithm>
#include <string>

namespace clustercat {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EqualEndpoints: return "EqualEndpoints";
    case ErrorCode::NeighbouringEndpoints: return "NeighbouringEndpoints";
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NoExtension: return "NoExtension";
    case ErrorCode::NotInTriangulation: return "NotInTriangulation";
    case ErrorCode::NoFlipAvailable: return "NoFlipAvailable";
    case ErrorCode::InvalidTriangulation: return "InvalidTriangulation";
    case ErrorCode::ApproximationFailure: return "ApproximationFailure";
    case ErrorCode::MixedTriangulations: return "MixedTriangulations";
    case ErrorCode::NotRigidTriangulation: return "NotRigidTriangulation";
    case ErrorCode::NotRigidObject: return "NotRigidObject";
    case ErrorCode::MutationMismatch: return "MutationMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

ModelParams::ModelParams(int count) : n(count) {
  if (count < 1) throw DomainError(ErrorCode::PreconditionViolated, "n must be at least 1");
}

MarkedPoint MarkedPoint::accumulation(int interval) {
  if (interval < 0) throw DomainError(ErrorCode::InvalidPoint, "negative interval index");
  return MarkedPoint(true, interval, 0);
}

MarkedPoint MarkedPoint::regular(int interval, std::int64_t k) {
  if (interval < 0) throw DomainError(ErrorCode::InvalidPoint, "negative interval index");
  return MarkedPoint(false, interval, k);
}

bool MarkedPoint::valid_for(const ModelParams& params) const { return interval_ < params.n; }

std::strong_ordering operator<=>(const MarkedPoint& a, const MarkedPoint& b) {
  if (auto c = a.interval_ <=> b.interval_; c != 0) return c;
  if (a.accumulation_ != b.accumulation_) return a.accumulation_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.k_ <=> b.k_;
}

MarkedPoint successor(const MarkedPoint& p) {
  if (p.is_accumulation()) return p;
  return MarkedPoint::regular(p.interval(), p.position() + 1);
}

MarkedPoint predecessor(const MarkedPoint& p) {
  if (p.is_accumulation()) return p;
  return MarkedPoint::regular(p.interval(), p.position() - 1);
}

bool are_neighbours(const MarkedPoint& p, const MarkedPoint& q) {
  if (p.is_accumulation() || q.is_accumulation()) return false;
  if (p.interval() != q.interval()) return false;
  const auto d = p.position() - q.position();
  return d == 1 || d == -1;
}

namespace {

// Strictly inside the anticlockwise sweep from a to b, for a != b.
bool strictly_between(const MarkedPoint& x, const MarkedPoint& a, const MarkedPoint& b) {
  if (a < b) return a < x && x < b;
  return x > a || x < b;
}

}  // namespace

bool in_interval(const MarkedPoint& x, const MarkedPoint& a, const MarkedPoint& b, Bound left, Bound right) {
  if (a == b) {
    if (left == Bound::Closed && right == Bound::Closed) return x == a;
    if (left == Bound::Open && right == Bound::Open) return x != a;
    return false;
  }
  if (x == a) return left == Bound::Closed;
  if (x == b) return right == Bound::Closed;
  return strictly_between(x, a, b);
}

bool Arc::is_valid(const MarkedPoint& a, const MarkedPoint& b) { return a != b && !are_neighbours(a, b); }

Arc Arc::make(const MarkedPoint& a, const MarkedPoint& b) {
  if (a == b) throw DomainError(ErrorCode::EqualEndpoints, "arc endpoints coincide");
  if (are_neighbours(a, b)) throw DomainError(ErrorCode::NeighbouringEndpoints, "arc endpoints are neighbours");
  return a < b ? Arc(a, b) : Arc(b, a);
}

Arc suspend(const Arc& c, std::int64_t power) {
  auto shift = [power](const MarkedPoint& p) {
    if (p.is_accumulation()) return p;
    return MarkedPoint::regular(p.interval(), p.position() - power);
  };
  return Arc::make(shift(c.first()), shift(c.second()));
}

bool crosses_transversely(const Arc& a, const Arc& c) {
  const auto& a0 = a.first();
  const auto& a1 = a.second();
  const auto& c0 = c.first();
  const auto& c1 = c.second();
  if (a0 == c0 || a0 == c1 || a1 == c0 || a1 == c1) return false;
  return in_open(c0, a0, a1) != in_open(c1, a0, a1);
}

Obj::Obj(std::initializer_list<Arc> arcs) : summands_(arcs) { std::sort(summands_.begin(), summands_.end()); }

Obj::Obj(std::vector<Arc> arcs) : summands_(std::move(arcs)) { std::sort(summands_.begin(), summands_.end()); }

std::size_t Obj::multiplicity(const Arc& a) const {
  auto [lo, hi] = std::equal_range(summands_.begin(), summands_.end(), a);
  return static_cast<std::size_t>(hi - lo);
}

Obj& Obj::add(const Arc& a) {
  summands_.insert(std::upper_bound(summands_.begin(), summands_.end(), a), a);
  return *this;
}

Obj operator+(Obj lhs, const Obj& rhs) {
  for (const auto& a : rhs.summands_) lhs.add(a);
  return lhs;
}

Obj suspend(const Obj& m, std::int64_t power) {
  std::vector<Arc> out;
  out.reserve(m.size());
  for (const auto& a : m.summands()) out.push_back(suspend(a, power));
  return Obj(std::move(out));
}

bool Window::contains(const MarkedPoint& p) const {
  if (p.is_accumulation()) return true;
  const auto k = p.position();
  return k >= -w && k <= w;
}

std::vector<MarkedPoint> window_points(const ModelParams& params, const Window& window) {
  std::vector<MarkedPoint> pts;
  pts.reserve(static_cast<std::size_t>(params.n) * (2 * window.w + 2));
  for (int j = 0; j < params.n; ++j) {
    pts.push_back(MarkedPoint::accumulation(j));
    for (std::int64_t k = -window.w; k <= window.w; ++k) pts.push_back(MarkedPoint::regular(j, k));
  }
  return pts;
}

}  // namespace clustercat
