#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "clustercat/oracle.hpp"
#include "clustercat/triangles.hpp"
#include "clustercat/triangulation.hpp"

using namespace clustercat;

namespace {

MarkedPoint R(int j, std::int64_t k) { return MarkedPoint::regular(j, k); }
MarkedPoint A(int j) { return MarkedPoint::accumulation(j); }
Arc arc(MarkedPoint p, MarkedPoint q) { return Arc::make(p, q); }

}  // namespace

TEST(Triangulation, FountainMembership) {
  const auto x = FanTriangulation::fountain(ModelParams(1), A(0));
  EXPECT_TRUE(x.contains(arc(A(0), R(0, 7))));
  EXPECT_TRUE(x.contains(arc(A(0), R(0, -40))));
  EXPECT_FALSE(x.contains(arc(R(0, 0), R(0, 2))));
  EXPECT_FALSE(x.contains(arc(R(0, 0), R(0, 5))));

  const auto y = FanTriangulation::fountain(ModelParams(1), R(0, 0));
  EXPECT_TRUE(y.contains(arc(R(0, 0), A(0))));
  for (std::int64_t k = -6; k <= 6; ++k) {
    if (std::abs(k) > 1) {
      EXPECT_TRUE(y.contains(arc(R(0, 0), R(0, k))));
    }
  }

  const auto z = FanTriangulation::fountain(ModelParams(2), A(1));
  EXPECT_TRUE(z.contains(arc(A(1), A(0))));
}

TEST(Triangulation, FountainsAreTriangulations) {
  for (int n : {1, 2, 3}) {
    const ModelParams params(n);
    for (const auto& base : {A(0), R(0, 0), A(n - 1)}) {
      const auto report = validate_window(FanTriangulation::fountain(params, base), Window{6});
      EXPECT_TRUE(report.pass) << (report.violations.empty() ? "" : report.violations.front());
    }
  }
}

TEST(Triangulation, MissingArcBreaksMaximality) {
  const ModelParams params(1);
  const auto x = FanTriangulation::from_description_unchecked(params, A(0), {arc(A(0), R(0, 0))}, {});
  const auto report = validate_window(x, Window{6});
  EXPECT_FALSE(report.pass);
  // Both the removed arc and its flip cross no member.
  ASSERT_EQ(report.violations.size(), 2u);
  const auto& v = report.violations;
  EXPECT_TRUE(std::any_of(v.begin(), v.end(), [](const std::string& s) { return s.find("[a0, r0:0]") != std::string::npos; }));
  EXPECT_TRUE(std::any_of(v.begin(), v.end(), [](const std::string& s) { return s.find("[r0:-1, r0:1]") != std::string::npos; }));
}

TEST(Triangulation, DescriptionBookkeeping) {
  const ModelParams params(1);
  try {
    FanTriangulation::from_description(params, A(0), {arc(R(0, 0), R(0, 3))}, {arc(R(0, -1), R(0, 1))});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidTriangulation);
  }
  try {
    FanTriangulation::from_description(params, A(0), {arc(A(0), R(0, 0))}, {});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidTriangulation);
  }
}

TEST(Triangulation, FlipAccumulationFountain) {
  const ModelParams params(1);
  const auto x = FanTriangulation::fountain(params, A(0));
  const auto q = adjacent_triangles(x, arc(A(0), R(0, 0)));
  EXPECT_EQ(q.y, arc(R(0, -1), R(0, 1)));
  EXPECT_EQ(q.x0, A(0));
  EXPECT_EQ(q.x1, R(0, 0));
  const int boundary = !q.s1 + !q.s2 + !q.t1 + !q.t2;
  EXPECT_EQ(boundary, 2);

  const auto [y, quad] = flip(x, arc(A(0), R(0, 0)));
  EXPECT_EQ(quad, q);
  EXPECT_FALSE(y.contains(arc(A(0), R(0, 0))));
  EXPECT_TRUE(y.contains(arc(R(0, -1), R(0, 1))));
  ASSERT_EQ(y.flip_log().size(), 1u);
  EXPECT_TRUE(validate_window(y, Window{6}).pass);

  const auto q2 = adjacent_triangles(y, arc(A(0), R(0, 1)));
  EXPECT_EQ(q2.y, arc(R(0, -1), R(0, 2)));
  const std::vector<std::optional<Arc>> sides{q2.s1, q2.s2, q2.t1, q2.t2};
  EXPECT_EQ(std::count(sides.begin(), sides.end(), std::optional<Arc>(arc(A(0), R(0, 2)))), 1);
  EXPECT_EQ(std::count(sides.begin(), sides.end(), std::optional<Arc>(arc(R(0, -1), R(0, 1)))), 1);
  EXPECT_EQ(std::count(sides.begin(), sides.end(), std::nullopt), 1);

  const auto back = flip(y, q.y).first;
  EXPECT_EQ(back, x);
}

TEST(Triangulation, FlipRegularFountain) {
  const ModelParams params(1);
  const auto x = FanTriangulation::fountain(params, R(0, 0));
  const auto [y, q] = flip(x, arc(R(0, 0), R(0, 3)));
  EXPECT_EQ(q.y, arc(R(0, 2), R(0, 4)));
  EXPECT_TRUE(y.contains(q.y));
  EXPECT_TRUE(validate_window(y, Window{6}).pass);

  // Quadrilateral r0:0, r0:2, r0:4, r0:5 with one boundary side.
  const auto [x2, q2] = flip(y, arc(R(0, 0), R(0, 4)));
  EXPECT_EQ(q2.y, arc(R(0, 2), R(0, 5)));
  const auto [u, v] = exchange_triangles(q2);
  EXPECT_EQ(u.b().size(), 2u);
  EXPECT_EQ(v.b().size(), 1u);
  EXPECT_TRUE(verify_triangle_window(u, params, Window{8}).pass);
  EXPECT_TRUE(verify_triangle_window(v, params, Window{8}).pass);
  EXPECT_TRUE(validate_window(x2, Window{6}).pass);
}

TEST(Triangulation, LimitArcsAreNotFlippable) {
  const auto x = FanTriangulation::fountain(ModelParams(1), R(0, 0));
  try {
    adjacent_triangles(x, arc(R(0, 0), A(0)));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoFlipAvailable);
  }
  try {
    adjacent_triangles(x, arc(R(0, 2), R(0, 5)));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInTriangulation);
  }
}

TEST(Triangulation, ExchangeTrianglesAreExact) {
  const ModelParams params(1);
  const auto x = FanTriangulation::fountain(params, A(0));
  const auto q = adjacent_triangles(x, arc(A(0), R(0, 0)));
  const auto [u, v] = exchange_triangles(q);
  EXPECT_EQ(u.a(), Obj{q.x});
  EXPECT_EQ(u.c(), Obj{q.y});
  EXPECT_EQ(v.a(), Obj{q.y});
  EXPECT_EQ(v.c(), Obj{q.x});
  EXPECT_EQ(u.b().size(), 1u);
  EXPECT_EQ(v.b().size(), 1u);
  EXPECT_TRUE(verify_triangle_window(u, params, Window{8}).pass);
  EXPECT_TRUE(verify_triangle_window(v, params, Window{8}).pass);
}

TEST(Triangulation, Rigidity) {
  EXPECT_FALSE(is_rigid(FanTriangulation::fountain(ModelParams(1), A(0))));
  EXPECT_FALSE(is_rigid(FanTriangulation::fountain(ModelParams(2), A(1))));
  const auto x = FanTriangulation::fountain(ModelParams(1), R(0, 0));
  EXPECT_TRUE(is_rigid(x));
  // Window check of the same claim.
  const auto arcs = enumerate_arcs(ModelParams(1), Window{8});
  for (const auto& u : arcs) {
    if (!x.contains(u)) continue;
    for (const auto& v : arcs) {
      if (x.contains(v)) ASSERT_EQ(ext_dim(u, v), 0);
    }
  }
}

TEST(Triangulation, RandomFlipsPreserveEverything) {
  std::mt19937_64 rng(7);
  for (int n : {1, 2, 3}) {
    const ModelParams params(n);
    for (const auto& base : {A(0), R(0, 0)}) {
      auto x = FanTriangulation::fountain(params, base);
      for (int step = 0; step < 3; ++step) {
        const auto arcs = flippable_arcs(x, Window{4});
        ASSERT_FALSE(arcs.empty());
        const auto a = arcs[rng() % arcs.size()];
        const auto [y, q] = flip(x, a);
        ASSERT_TRUE(validate_window(y, Window{6}).pass);
        ASSERT_EQ(flip(y, q.y).first, x);
        ASSERT_EQ(is_rigid(y), is_rigid(x));
        const auto [u, v] = exchange_triangles(q);
        ASSERT_TRUE(verify_triangle_window(u, params, Window{8}).pass);
        ASSERT_TRUE(verify_triangle_window(v, params, Window{8}).pass);
        x = y;
      }
    }
  }
}
