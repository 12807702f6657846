#include <gtest/gtest.h>

#include "clustercat/oracle.hpp"
#include "clustercat/triangles.hpp"
#include "clustercat/triangulation.hpp"

using namespace clustercat;

namespace {

MarkedPoint R(int j, std::int64_t k) { return MarkedPoint::regular(j, k); }
MarkedPoint A(int j) { return MarkedPoint::accumulation(j); }
Arc arc(MarkedPoint p, MarkedPoint q) { return Arc::make(p, q); }

}  // namespace

TEST(Triangles, TransverseDropsNeighbouringPair) {
  const auto c = arc(R(0, 1), R(0, 3));
  const auto a = arc(R(0, 0), R(0, 2));
  const auto t = extension_triangle(c, a);
  EXPECT_EQ(t.kind(), TriangleKind::Transverse);
  EXPECT_EQ(t.a(), Obj{a});
  EXPECT_EQ(t.b(), Obj{arc(R(0, 0), R(0, 3))});
  EXPECT_EQ(t.c(), Obj{c});
  ASSERT_EQ(t.connecting().size(), 1u);
  EXPECT_EQ(t.connecting()[0].second, suspend(a));
  EXPECT_TRUE(verify_triangle_window(t, ModelParams(1), Window{6}).pass);
}

TEST(Triangles, SharedAccumulationPoint) {
  // C = {a0, r0:0} and A = its double desuspension.
  const auto c = arc(A(0), R(0, 0));
  const auto a = suspend(c, -2);
  EXPECT_EQ(a, arc(A(0), R(0, 2)));
  const auto t = extension_triangle(c, a);
  EXPECT_EQ(t.kind(), TriangleKind::SharedAccumulation);
  EXPECT_EQ(t.b(), Obj{arc(R(0, 0), R(0, 2))});
  EXPECT_TRUE(verify_triangle_window(t, ModelParams(1), Window{6}).pass);

  // When Sigma A = C the middle term vanishes.
  const auto t1 = extension_triangle(c, suspend(c, -1));
  EXPECT_TRUE(t1.b().empty());
  EXPECT_TRUE(verify_triangle_window(t1, ModelParams(1), Window{6}).pass);

  try {
    dual_extension_triangle(a, c);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoExtension);
  }
}

TEST(Triangles, SelfExtension) {
  const auto c = arc(A(0), A(1));
  const auto t = extension_triangle(c, c);
  EXPECT_EQ(t.kind(), TriangleKind::SelfExtension);
  EXPECT_TRUE(t.b().empty());
  EXPECT_TRUE(verify_triangle_window(t, ModelParams(2), Window{6}).pass);
  EXPECT_THROW(dual_extension_triangle(c, c), DomainError);
}

TEST(Triangles, NoExtension) {
  try {
    extension_triangle(arc(R(0, 0), R(0, 2)), arc(R(0, 4), R(0, 6)));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoExtension);
  }
}

TEST(Triangles, DualTriangleOfCrossingPair) {
  const auto c = arc(R(0, 1), R(0, 3));
  const auto a = arc(R(0, 0), R(0, 2));
  const auto t = dual_extension_triangle(a, c);
  EXPECT_EQ(t.a(), Obj{c});
  EXPECT_EQ(t.c(), Obj{a});
  // Both sides of the quadrilateral are boundary segments; A = Sigma C.
  EXPECT_TRUE(t.b().empty());
  EXPECT_EQ(suspend(c), a);
  EXPECT_TRUE(verify_triangle_window(t, ModelParams(1), Window{6}).pass);
}

TEST(Triangles, EveryConstructedTriangleIsExact) {
  for (int n : {1, 2}) {
    const ModelParams params(n);
    const auto arcs = enumerate_arcs(params, Window{3});
    for (const auto& c : arcs) {
      for (const auto& a : arcs) {
        if (ext_dim(c, a) == 0) continue;
        const auto t = extension_triangle(c, a);
        const auto report = verify_triangle_window(t, params, Window{7});
        ASSERT_TRUE(report.pass) << report.reason;
        if (crosses_transversely(a, c)) {
          const auto d = dual_extension_triangle(a, c);
          ASSERT_TRUE(verify_triangle_window(d, params, Window{7}).pass);
        }
      }
    }
  }
}

TEST(Triangles, CorruptedMiddleTermFails) {
  const auto c = arc(R(0, 1), R(0, 4));
  const auto a = arc(R(0, 0), R(0, 2));
  const auto good = extension_triangle(c, a);
  auto blocks = good.blocks();
  blocks[0].b = suspend(blocks[0].b, 1);
  const auto bad = detail::make_triangle(blocks, good.kind());
  const auto report = verify_triangle_window(bad, ModelParams(1), Window{6});
  EXPECT_FALSE(report.pass);
  EXPECT_TRUE(report.witness.has_value());
}

TEST(Triangles, DirectSumAndSuspension) {
  const auto t = extension_triangle(arc(R(0, 1), R(0, 3)), arc(R(0, 0), R(0, 2)));
  const auto u = extension_triangle(arc(A(0), R(0, 0)), arc(A(0), R(0, 3)));
  const auto s = direct_sum(t, u);
  EXPECT_EQ(s.a(), t.a() + u.a());
  EXPECT_EQ(s.b(), t.b() + u.b());
  EXPECT_EQ(s.c(), t.c() + u.c());
  EXPECT_TRUE(verify_triangle_window(s, ModelParams(1), Window{6}).pass);
  const auto st = suspend(t, 3);
  EXPECT_EQ(st.c(), Obj{suspend(arc(R(0, 1), R(0, 3)), 3)});
  EXPECT_TRUE(verify_triangle_window(st, ModelParams(1), Window{6}).pass);
}
