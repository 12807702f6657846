#pragma once

// Fan triangulations with a finite description: the fountain at a base
// point, minus finitely many removed fountain arcs, plus finitely many added
// arcs. Flips keep the description finite and preserve the fan property.

#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "clustercat/surface.hpp"
#include "clustercat/triangles.hpp"

namespace clustercat {

struct Quadrilateral;

struct FlipRecord {
  Arc removed;
  Arc added;
  friend bool operator==(const FlipRecord&, const FlipRecord&) = default;
};

class FanTriangulation {
 public:
  /// All arcs incident with `base`.
  static FanTriangulation fountain(const ModelParams& params, const MarkedPoint& base);

  /// A hand-authored description. Checks the bookkeeping invariants
  /// (removed arcs are fountain arcs, added arcs are not, equal sizes); the
  /// triangulation property itself is only checkable on windows.
  static FanTriangulation from_description(const ModelParams& params, const MarkedPoint& base, std::set<Arc> removed,
                                           std::set<Arc> added, std::vector<FlipRecord> log = {});

  /// Same, but skips the size check, so damaged arc sets can be built as
  /// negative controls for validate_window.
  static FanTriangulation from_description_unchecked(const ModelParams& params, const MarkedPoint& base,
                                                     std::set<Arc> removed, std::set<Arc> added);

  const ModelParams& params() const { return params_; }
  const MarkedPoint& base() const { return base_; }
  const std::set<Arc>& removed() const { return removed_; }
  const std::set<Arc>& added() const { return added_; }
  const std::vector<FlipRecord>& flip_log() const { return log_; }

  bool is_fountain_arc(const Arc& arc) const { return arc.has_endpoint(base_); }
  bool contains(const Arc& arc) const;

  /// Whether some member satisfies `pred`, decided exactly. `pred` may only
  /// depend on the position of the member's endpoints relative to the
  /// points in `crit` (and their neighbours) in the cyclic order.
  bool any_member(std::span<const MarkedPoint> crit, const std::function<bool(const Arc&)>& pred) const;

  /// Finitely many members, one per order type relative to `crit`; every
  /// member satisfying a `crit`-determined predicate is represented.
  std::vector<Arc> representative_members(std::span<const MarkedPoint> crit) const;

  /// Same arc set (flip history is ignored).
  friend bool operator==(const FanTriangulation& x, const FanTriangulation& y) {
    return x.params_ == y.params_ && x.base_ == y.base_ && x.removed_ == y.removed_ && x.added_ == y.added_;
  }

 private:
  friend std::pair<FanTriangulation, Quadrilateral> flip(const FanTriangulation&, const Arc&);

  FanTriangulation(ModelParams params, MarkedPoint base) : params_(params), base_(base) {}

  // Points the membership predicate depends on.
  std::vector<MarkedPoint> description_points() const;

  ModelParams params_;
  MarkedPoint base_;
  std::set<Arc> removed_;
  std::set<Arc> added_;
  std::vector<FlipRecord> log_;
};

/// Points representing every order type relative to `crit`: the critical
/// points with neighbours up to distance `radius`, every accumulation point,
/// and one point in each interval that holds no critical point.
std::vector<MarkedPoint> local_points(const ModelParams& params, std::span<const MarkedPoint> crit, int radius = 4);

/// The quadrilateral around a flippable arc. Corners read x0, y0, x1, y1
/// anticlockwise; sides are arcs of both triangulations or boundary
/// segments (empty optional).
struct Quadrilateral {
  Arc x;
  Arc y;
  MarkedPoint x0, y0, x1, y1;
  std::optional<Arc> s1;  // {y0, x1}
  std::optional<Arc> s2;  // {x0, y1}
  std::optional<Arc> t1;  // {x1, y1}
  std::optional<Arc> t2;  // {y0, x0}

  friend bool operator==(const Quadrilateral&, const Quadrilateral&) = default;
};

/// Throws NotInTriangulation, or NoFlipAvailable when one side of the arc
/// has no finite flanking triangle (e.g. limit arcs inside a fan).
Quadrilateral adjacent_triangles(const FanTriangulation& x, const Arc& arc);

std::pair<FanTriangulation, Quadrilateral> flip(const FanTriangulation& x, const Arc& arc);

/// X -> S1 (+) S2 -> Y -> Sigma X and Y -> T1 (+) T2 -> X -> Sigma Y.
std::pair<Triangle, Triangle> exchange_triangles(const Quadrilateral& q);

/// No two members (possibly equal) have a nonzero extension.
bool is_rigid(const FanTriangulation& x);

struct TriangulationReport {
  bool pass = true;
  std::vector<std::string> violations;
};

/// Pairwise non-crossing of members inside the window, and maximality: each
/// non-member window arc crosses a member from the window enlarged by 2.
TriangulationReport validate_window(const FanTriangulation& x, const Window& window);

}  // namespace clustercat
