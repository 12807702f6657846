#include "clustercat/triangles.hpp"

#include <sstream>

#include "clustercat/format.hpp"
#include "clustercat/oracle.hpp"

namespace clustercat {

std::string_view kind_tag(TriangleKind kind) {
  switch (kind) {
    case TriangleKind::Transverse: return "transverse";
    case TriangleKind::SharedAccumulation: return "shared-accumulation";
    case TriangleKind::SelfExtension: return "self-extension";
    case TriangleKind::Approximation: return "approximation";
    case TriangleKind::DirectSum: return "sum";
  }
  return "?";
}

namespace detail {
Triangle make_triangle(std::vector<TriangleBlock> blocks, TriangleKind kind) { return Triangle(std::move(blocks), kind); }
}  // namespace detail

Obj Triangle::a() const {
  Obj out;
  for (const auto& blk : blocks_) out = out + blk.a;
  return out;
}

Obj Triangle::b() const {
  Obj out;
  for (const auto& blk : blocks_) out = out + blk.b;
  return out;
}

Obj Triangle::c() const {
  Obj out;
  for (const auto& blk : blocks_) out.add(blk.c);
  return out;
}

std::vector<std::pair<Arc, Arc>> Triangle::connecting() const {
  std::vector<std::pair<Arc, Arc>> out;
  for (const auto& blk : blocks_) {
    for (const auto& t : blk.connecting) out.emplace_back(blk.c, t);
  }
  return out;
}

namespace {

void add_if_arc(Obj& m, const MarkedPoint& p, const MarkedPoint& q) {
  if (Arc::is_valid(p, q)) m.add(Arc::make(p, q));
}

}  // namespace

Triangle extension_triangle(const Arc& c, const Arc& a) {
  if (ext_dim(c, a) == 0) throw DomainError(ErrorCode::NoExtension, "Ext^1(" + to_text(c) + ", " + to_text(a) + ") = 0");

  if (crosses_transversely(a, c)) {
    // Anticlockwise order a0, c0, a1, c1.
    const auto& a0 = a.first();
    const auto& a1 = a.second();
    const auto& c0 = in_open(c.first(), a0, a1) ? c.first() : c.second();
    const auto& c1 = c.other(c0);
    Obj middle;
    add_if_arc(middle, c0, a1);
    add_if_arc(middle, c1, a0);
    return detail::make_triangle({TriangleBlock{Obj{a}, middle, c, {suspend(a)}}}, TriangleKind::Transverse);
  }

  if (a == c) {
    return detail::make_triangle({TriangleBlock{Obj{a}, Obj{}, c, {a}}}, TriangleKind::SelfExtension);
  }

  for (const auto& p : {c.first(), c.second()}) {
    if (!p.is_accumulation() || !a.has_endpoint(p)) continue;
    Obj middle;
    add_if_arc(middle, a.other(p), c.other(p));
    return detail::make_triangle({TriangleBlock{Obj{a}, middle, c, {suspend(a)}}}, TriangleKind::SharedAccumulation);
  }
  throw DomainError(ErrorCode::NoExtension, "unclassified extension");
}

Triangle dual_extension_triangle(const Arc& a, const Arc& c) {
  if (!crosses_transversely(a, c))
    throw DomainError(ErrorCode::NoExtension, to_text(a) + " and " + to_text(c) + " do not cross");
  return extension_triangle(a, c);
}

Triangle direct_sum(const Triangle& t, const Triangle& u) {
  auto blocks = t.blocks();
  blocks.insert(blocks.end(), u.blocks().begin(), u.blocks().end());
  return detail::make_triangle(std::move(blocks), TriangleKind::DirectSum);
}

Triangle suspend(const Triangle& t, std::int64_t power) {
  std::vector<TriangleBlock> blocks;
  for (const auto& blk : t.blocks()) {
    TriangleBlock s{suspend(blk.a, power), suspend(blk.b, power), suspend(blk.c, power), {}};
    for (const auto& x : blk.connecting) s.connecting.push_back(suspend(x, power));
    blocks.push_back(std::move(s));
  }
  return detail::make_triangle(std::move(blocks), t.kind());
}

namespace {

int hom_into(const Arc& w, const Obj& m) {
  int d = 0;
  for (const auto& s : m.summands()) d += hom_dim(w, s);
  return d;
}

int hom_from(const Obj& m, const Arc& w) {
  int d = 0;
  for (const auto& s : m.summands()) d += hom_dim(s, w);
  return d;
}

std::string block_failure(const TriangleBlock& blk, const Arc& w) {
  const Arc desusp_c = suspend(blk.c, -1);

  // Hom(W, -): Hom(W, S^-1 C) -> Hom(W, A) -> Hom(W, B) -> Hom(W, C) -> Hom(W, S A)
  int r_conn = 0;
  int r_desusp = 0;
  for (const auto& t : blk.connecting) {
    if (nonzero_path(w, blk.c, t)) r_conn = 1;
    if (nonzero_path(w, desusp_c, suspend(t, -1))) r_desusp = 1;
  }
  const int lhs = hom_into(w, blk.b);
  const int rhs = hom_into(w, blk.a) + hom_dim(w, blk.c) - r_conn - r_desusp;
  if (lhs != rhs) {
    std::ostringstream os;
    os << "dim Hom(W, B) = " << lhs << " but the sequence forces " << rhs;
    return os.str();
  }

  // Hom(-, W): Hom(S A, W) -> Hom(C, W) -> Hom(B, W) -> Hom(A, W) -> Hom(S^-1 C, W)
  int q_conn = 0;
  int q_desusp = 0;
  for (const auto& t : blk.connecting) {
    if (nonzero_path(blk.c, t, w)) q_conn = 1;
    if (nonzero_path(desusp_c, suspend(t, -1), w)) q_desusp = 1;
  }
  const int lhs2 = hom_from(blk.b, w);
  const int rhs2 = hom_from(blk.a, w) + hom_dim(blk.c, w) - q_conn - q_desusp;
  if (lhs2 != rhs2) {
    std::ostringstream os;
    os << "dim Hom(B, W) = " << lhs2 << " but the sequence forces " << rhs2;
    return os.str();
  }
  return {};
}

}  // namespace

TriangleReport verify_triangle_window(const Triangle& t, const ModelParams& params, const Window& window) {
  for (const auto& blk : t.blocks()) {
    for (const auto& target : blk.connecting) {
      if (hom_dim(blk.c, target) == 0 || blk.a.multiplicity(suspend(target, -1)) == 0)
        return {false, std::nullopt, "connecting component " + to_text(target) + " is not a nonzero map from C"};
    }
  }
  for (const auto& w : enumerate_arcs(params, window)) {
    for (const auto& blk : t.blocks()) {
      if (auto why = block_failure(blk, w); !why.empty()) return {false, w, why};
    }
  }
  return {};
}

}  // namespace clustercat
