#pragma once

// Geometric model of the completed discrete cluster category of type A:
// a disc whose boundary carries n accumulation points, with a bi-infinite
// discrete family of marked points in each open boundary interval.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "clustercat/errors.hpp"

namespace clustercat {

struct ModelParams {
  int n = 1;

  explicit ModelParams(int count = 1);
  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// A marked point of the boundary. Interval j runs anticlockwise from
/// Accumulation(j) to Accumulation((j + 1) mod n); inside it Regular(j, k)
/// precedes Regular(j, k + 1).
class MarkedPoint {
 public:
  static MarkedPoint accumulation(int interval);
  static MarkedPoint regular(int interval, std::int64_t k);

  bool is_accumulation() const { return accumulation_; }
  bool is_regular() const { return !accumulation_; }
  int interval() const { return interval_; }
  /// Position inside the interval; 0 for accumulation points.
  std::int64_t position() const { return k_; }

  bool valid_for(const ModelParams& params) const;

  // Canonical total order: interval, then accumulation before regular, then k.
  // Read cyclically it is the anticlockwise order starting at Accumulation(0).
  friend std::strong_ordering operator<=>(const MarkedPoint& a, const MarkedPoint& b);
  friend bool operator==(const MarkedPoint& a, const MarkedPoint& b) = default;

 private:
  MarkedPoint(bool acc, int interval, std::int64_t k) : accumulation_(acc), interval_(interval), k_(k) {}

  bool accumulation_ = true;
  int interval_ = 0;
  std::int64_t k_ = 0;
};

/// Next marked point anticlockwise; accumulation points are fixed.
MarkedPoint successor(const MarkedPoint& p);
/// Next marked point clockwise; accumulation points are fixed.
MarkedPoint predecessor(const MarkedPoint& p);

/// True iff q is the immediate successor or predecessor of p (never for
/// accumulation points).
bool are_neighbours(const MarkedPoint& p, const MarkedPoint& q);

enum class Bound { Open, Closed };

/// Membership of x in the anticlockwise interval from a to b.
///
/// Decided purely by comparisons in the cyclic order. Degenerate intervals
/// with a == b: [a,a] = {a}, (a,a) = every point except a, and the
/// half-open forms [a,a), (a,a] are empty.
bool in_interval(const MarkedPoint& x, const MarkedPoint& a, const MarkedPoint& b, Bound left, Bound right);

inline bool in_open(const MarkedPoint& x, const MarkedPoint& a, const MarkedPoint& b) {
  return in_interval(x, a, b, Bound::Open, Bound::Open);
}
inline bool in_closed(const MarkedPoint& x, const MarkedPoint& a, const MarkedPoint& b) {
  return in_interval(x, a, b, Bound::Closed, Bound::Closed);
}

/// An arc between two distinct non-neighbouring marked points, i.e. an
/// indecomposable object. Endpoints are stored in canonical order.
class Arc {
 public:
  /// Throws DomainError(EqualEndpoints | NeighbouringEndpoints).
  static Arc make(const MarkedPoint& a, const MarkedPoint& b);
  /// Same validity test without throwing.
  static bool is_valid(const MarkedPoint& a, const MarkedPoint& b);

  const MarkedPoint& first() const { return lo_; }
  const MarkedPoint& second() const { return hi_; }
  bool has_endpoint(const MarkedPoint& p) const { return lo_ == p || hi_ == p; }
  /// The endpoint that is not p; p must be an endpoint.
  const MarkedPoint& other(const MarkedPoint& p) const { return lo_ == p ? hi_ : lo_; }
  bool is_limit() const { return lo_.is_accumulation() || hi_.is_accumulation(); }
  bool both_accumulation() const { return lo_.is_accumulation() && hi_.is_accumulation(); }
  bool valid_for(const ModelParams& params) const { return lo_.valid_for(params) && hi_.valid_for(params); }

  friend auto operator<=>(const Arc&, const Arc&) = default;
  friend bool operator==(const Arc&, const Arc&) = default;

 private:
  Arc(MarkedPoint lo, MarkedPoint hi) : lo_(lo), hi_(hi) {}

  MarkedPoint lo_;
  MarkedPoint hi_;
};

/// Suspension applied `power` times: each endpoint moves one step clockwise
/// per unit (anticlockwise for negative powers). Accumulation endpoints stay.
Arc suspend(const Arc& c, std::int64_t power = 1);

/// The endpoints of the two arcs are four distinct points that interleave.
bool crosses_transversely(const Arc& a, const Arc& c);

/// A finite direct sum of indecomposables, kept as a sorted multiset.
class Obj {
 public:
  Obj() = default;
  Obj(std::initializer_list<Arc> arcs);
  explicit Obj(std::vector<Arc> arcs);

  const std::vector<Arc>& summands() const& { return summands_; }
  // By value on temporaries, so `for (auto& a : t.b().summands())` is safe.
  std::vector<Arc> summands() && { return std::move(summands_); }
  std::size_t size() const { return summands_.size(); }
  bool empty() const { return summands_.empty(); }
  std::size_t multiplicity(const Arc& a) const;

  Obj& add(const Arc& a);
  friend Obj operator+(Obj lhs, const Obj& rhs);

  friend auto operator<=>(const Obj&, const Obj&) = default;
  friend bool operator==(const Obj&, const Obj&) = default;

 private:
  std::vector<Arc> summands_;
};

Obj suspend(const Obj& m, std::int64_t power = 1);

/// Finite truncation: every accumulation point plus Regular(j, k) with |k| <= w.
struct Window {
  int w = 0;

  bool contains(const MarkedPoint& p) const;
  bool contains(const Arc& a) const { return contains(a.first()) && contains(a.second()); }
  friend bool operator==(const Window&, const Window&) = default;
};

/// All points of the window in canonical (cyclic from Accumulation(0)) order.
std::vector<MarkedPoint> window_points(const ModelParams& params, const Window& window);

}  // namespace clustercat

template <>
struct std::hash<clustercat::MarkedPoint> {
  std::size_t operator()(const clustercat::MarkedPoint& p) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(p.position());
    h ^= (static_cast<std::size_t>(p.interval()) << 1) ^ (p.is_accumulation() ? 0x9e3779b97f4a7c15ULL : 0);
    return h;
  }
};

template <>
struct std::hash<clustercat::Arc> {
  std::size_t operator()(const clustercat::Arc& a) const noexcept {
    std::hash<clustercat::MarkedPoint> hp;
    return hp(a.first()) * 1000003u ^ hp(a.second());
  }
};
