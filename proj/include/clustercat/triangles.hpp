#pragma once

// Distinguished triangles A -> B -> C -> Sigma A with indecomposable third
// term, and their direct sums.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clustercat/homext.hpp"
#include "clustercat/surface.hpp"

namespace clustercat {

enum class TriangleKind {
  Transverse,          // crossing arcs
  SharedAccumulation,  // arcs meeting at one accumulation point
  SelfExtension,       // C -> 0 -> C for a doubly-limit arc
  Approximation,       // X1 -> X0 -> C from a right approximation
  DirectSum,
};

std::string_view kind_tag(TriangleKind kind);

/// One summand triangle A -> B -> C -> Sigma A with C indecomposable.
/// `connecting` lists the summands of Sigma A receiving a nonzero component
/// of the map C -> Sigma A.
struct TriangleBlock {
  Obj a;
  Obj b;
  Arc c;
  std::vector<Arc> connecting;
};

class Triangle;

namespace detail {
Triangle make_triangle(std::vector<TriangleBlock> blocks, TriangleKind kind);
}

/// Only constructible through the builders of this library.
class Triangle {
 public:
  Obj a() const;
  Obj b() const;
  Obj c() const;
  /// (summand of C, summand of Sigma A) pairs carrying a nonzero component.
  std::vector<std::pair<Arc, Arc>> connecting() const;
  const std::vector<TriangleBlock>& blocks() const { return blocks_; }
  TriangleKind kind() const { return kind_; }

  friend bool operator==(const Triangle&, const Triangle&) = default;

 private:
  friend Triangle detail::make_triangle(std::vector<TriangleBlock>, TriangleKind);
  Triangle(std::vector<TriangleBlock> blocks, TriangleKind kind) : blocks_(std::move(blocks)), kind_(kind) {}

  std::vector<TriangleBlock> blocks_;
  TriangleKind kind_;
};

/// The triangle A -> B -> C -> Sigma A realizing the nonzero class in
/// Ext^1(C, A). Throws NoExtension when that space is zero.
Triangle extension_triangle(const Arc& c, const Arc& a);

/// C -> D1 (+) D2 -> A -> Sigma C for crossing arcs. Throws NoExtension
/// otherwise: at a shared accumulation point the reverse class is zero.
Triangle dual_extension_triangle(const Arc& a, const Arc& c);

/// Summand-wise direct sum.
Triangle direct_sum(const Triangle& t, const Triangle& u);

/// The image of a triangle under Sigma^power.
Triangle suspend(const Triangle& t, std::int64_t power);

struct TriangleReport {
  bool pass = true;
  std::optional<Arc> witness;
  std::string reason;
};

/// Checks the long exact Hom(W, -) and Hom(-, W) sequences of every block by
/// dimension counting, for every arc W in the window.
TriangleReport verify_triangle_window(const Triangle& t, const ModelParams& params, const Window& window);

}  // namespace clustercat
