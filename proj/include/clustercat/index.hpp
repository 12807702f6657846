#pragma once

// Right approximations by a fan triangulation X and the index they define:
// ind_X(C) = [X0] - [X1] in the split Grothendieck group of X, read off an
// approximation triangle X1 -> X0 -> C -> Sigma X1 whose connecting map is
// killed by X.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "clustercat/surface.hpp"
#include "clustercat/triangles.hpp"
#include "clustercat/triangulation.hpp"

namespace clustercat {

/// A finitely supported integer combination of arcs of one triangulation.
/// Zero coefficients are never stored.
class IndexVector {
 public:
  explicit IndexVector(FanTriangulation x) : x_(std::move(x)) {}

  /// Throws NotInTriangulation if the arc is not a member.
  static IndexVector unit(const FanTriangulation& x, const Arc& arc);

  const FanTriangulation& triangulation() const { return x_; }
  const std::map<Arc, std::int64_t>& coeffs() const { return coeffs_; }
  /// Coefficient at `arc`; 0 when absent.
  std::int64_t coefficient(const Arc& arc) const;
  bool is_zero() const { return coeffs_.empty(); }

  IndexVector& add(const Arc& arc, std::int64_t k);
  IndexVector& operator+=(const IndexVector& o);
  IndexVector& operator-=(const IndexVector& o);
  friend IndexVector operator+(IndexVector a, const IndexVector& b) { return a += b; }
  friend IndexVector operator-(IndexVector a, const IndexVector& b) { return a -= b; }
  friend IndexVector operator*(std::int64_t k, IndexVector a);

  friend bool operator==(const IndexVector& a, const IndexVector& b) { return a.x_ == b.x_ && a.coeffs_ == b.coeffs_; }

 private:
  void require_same(const IndexVector& o) const;

  FanTriangulation x_;
  std::map<Arc, std::int64_t> coeffs_;
};

/// The minimal right X-approximation X0 of an indecomposable C: the
/// maximal members of X with a nonzero map to C under the factorization
/// preorder. Returns {C} for members.
Obj min_right_approximation(const FanTriangulation& x, const Arc& c);

struct ApproximationOptions {
  /// Check exactness of the constructed triangle on a window reaching this
  /// far beyond every point involved.
  bool verify_exactness = true;
  int window_slack = 4;
};

/// X1 -> X0 -> C -> Sigma X1 with X0 the minimal right approximation and
/// X1 in X. Throws ApproximationFailure if the construction does not pass
/// its own checks: exactness, X1 in X, connecting map killed by X.
Triangle approximation_triangle(const FanTriangulation& x, const Arc& c, const ApproximationOptions& opts = {});

IndexVector index(const FanTriangulation& x, const Arc& c, const ApproximationOptions& opts = {});
IndexVector index(const FanTriangulation& x, const Obj& m, const ApproximationOptions& opts = {});

/// Ext^1 vanishes between all ordered pairs of summands, including u = v.
bool is_rigid_object(const Obj& m);

/// No basis arc carries coefficients of strictly opposite signs.
/// Throws MixedTriangulations.
bool sign_coherent(std::span<const IndexVector> vs);

/// Exact rank over the rationals equals the number of vectors.
/// Throws MixedTriangulations.
bool linearly_independent(std::span<const IndexVector> vs);

/// ind(A) - ind(B) + ind(C).
IndexVector additivity_defect(const FanTriangulation& x, const Triangle& t, const ApproximationOptions& opts = {});

/// For each member W of X inside the window, the dimension of the image of
/// Hom(W, C) -> Hom(W, Sigma A), summed over the blocks of the triangle.
/// Only nonzero entries are stored.
struct ImageDimVector {
  std::map<Arc, int> dims;
  Window window;

  int at(const Arc& w) const;
  bool is_zero() const { return dims.empty(); }
  friend bool operator==(const ImageDimVector&, const ImageDimVector&) = default;
};

ImageDimVector image_dim_vector(const FanTriangulation& x, const Triangle& t, const Window& window);

/// Change of basis along a flip: the generator at q.x goes to
/// [T1] + [T2] - [Y] (phi) or [S1] + [S2] - [Y] (psi); others are kept.
/// The result lives in the flipped triangulation. Throws MixedTriangulations
/// when v is not relative to a triangulation with this quadrilateral.
IndexVector phi(const Quadrilateral& q, const IndexVector& v);
IndexVector psi(const Quadrilateral& q, const IndexVector& v);

enum class MutationBranch { Phi, Psi };

struct FlipIndex {
  IndexVector value;
  MutationBranch branch;
  /// [ind_X(m) : arc]
  std::int64_t coefficient;
};

/// ind_Y(m) for the flip Y of X at `arc`, predicted from ind_X(m) by phi or
/// psi according to the sign of the coefficient at `arc`. When `check` is
/// set it is recomputed directly in Y and a disagreement throws
/// MutationMismatch. Throws NotRigidTriangulation, NotRigidObject,
/// NoFlipAvailable.
FlipIndex index_after_flip(const FanTriangulation& x, const Arc& arc, const Obj& m, bool check = true);

}  // namespace clustercat
