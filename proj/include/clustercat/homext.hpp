#pragma once

// Morphism and extension spaces between indecomposables. Every such space
// has dimension 0 or 1, so everything here is a predicate on arc endpoints.

#include <optional>

#include "clustercat/surface.hpp"

namespace clustercat {

class FanTriangulation;

/// A labelling {b0, b1}, {c0, c1} witnessing a nonzero map B -> C:
/// b0 in (c0+, c1] and b1 in (c1+, c0].
struct HomLabel {
  MarkedPoint b0, b1, c0, c1;
};

std::optional<HomLabel> hom_label(const Arc& b, const Arc& c);

/// dim Hom(B, C), from the target-side hammock rule.
int hom_dim(const Arc& b, const Arc& c);

/// dim Hom(C, D), from the source-side rule: d0 in [c0, c1-), d1 in [c1, c0-).
/// Independent of hom_dim; the two are checked against each other in tests.
int hom_dim_from_source(const Arc& c, const Arc& d);

/// dim Ext^1(C, A) = dim Hom(C, Sigma A).
int ext_dim(const Arc& c, const Arc& a);

/// Whether the nonzero map B -> C factors through S.
/// Throws PreconditionViolated when Hom(B, C) = 0.
bool factors_through(const Arc& b, const Arc& c, const Arc& s);

/// Whether the composite A -> B -> C of nonzero maps is nonzero.
/// Throws PreconditionViolated unless Hom(A, B) and Hom(B, C) are nonzero.
bool composite_nonzero(const Arc& a, const Arc& b, const Arc& c);

/// composite_nonzero, but false whenever either factor space is zero.
bool nonzero_path(const Arc& a, const Arc& b, const Arc& c);

/// True iff no member W of X sends a nonzero map through the map
/// z_source -> z_target, i.e. the restricted Yoneda image of z vanishes on X.
/// Decided exactly from the finite description of X. A zero map is killed.
bool killed_by_triangulation(const Arc& z_source, const Arc& z_target, const FanTriangulation& x);

/// Same test restricted to members of X with both endpoints in the window.
bool killed_by_triangulation_window(const Arc& z_source, const Arc& z_target, const FanTriangulation& x,
                                    const Window& window);

}  // namespace clustercat
