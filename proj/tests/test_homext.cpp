#include <gtest/gtest.h>

#include "clustercat/homext.hpp"
#include "clustercat/oracle.hpp"
#include "clustercat/triangulation.hpp"

using namespace clustercat;

namespace {

MarkedPoint R(int j, std::int64_t k) { return MarkedPoint::regular(j, k); }
MarkedPoint A(int j) { return MarkedPoint::accumulation(j); }
Arc arc(MarkedPoint p, MarkedPoint q) { return Arc::make(p, q); }

}  // namespace

TEST(HomExt, Examples) {
  const auto c = arc(R(0, 1), R(0, 3));
  EXPECT_EQ(hom_dim(c, c), 1);
  EXPECT_EQ(hom_dim(arc(A(1), R(0, 0)), arc(A(0), R(0, 0))), 1);
  EXPECT_EQ(hom_dim(arc(R(0, 0), R(0, 2)), arc(R(0, 4), R(0, 6))), 0);

  EXPECT_EQ(ext_dim(arc(R(0, 1), R(0, 3)), arc(R(0, 0), R(0, 2))), 1);
  EXPECT_EQ(ext_dim(arc(A(0), A(1)), arc(A(0), A(1))), 1);
  EXPECT_EQ(ext_dim(arc(R(0, 0), A(0)), arc(R(1, 0), A(0))), 1);
  EXPECT_EQ(ext_dim(arc(R(1, 0), A(0)), arc(R(0, 0), A(0))), 0);
  EXPECT_EQ(ext_dim(c, c), 0);
}

TEST(HomExt, Factorization) {
  const auto b = arc(R(0, 0), R(0, 4));
  const auto c = arc(R(0, 2), R(0, 6));
  EXPECT_TRUE(factors_through(b, c, b));
  EXPECT_TRUE(factors_through(b, c, c));
  EXPECT_TRUE(factors_through(b, c, arc(R(0, 1), R(0, 5))));
  EXPECT_FALSE(factors_through(b, c, arc(R(0, 3), R(0, 8))));
  EXPECT_THROW(factors_through(arc(R(0, 0), R(0, 2)), arc(R(0, 4), R(0, 6)), c), DomainError);
}

TEST(HomExt, Composites) {
  const auto c = arc(R(0, 2), R(0, 6));
  EXPECT_TRUE(composite_nonzero(c, c, c));
  EXPECT_TRUE(composite_nonzero(arc(R(0, 0), R(0, 4)), arc(R(0, 1), R(0, 5)), c));
  // Hom({r0:0, r0:4}, {r0:3, r0:5}) is zero, so there is no composite.
  try {
    composite_nonzero(arc(R(0, 0), R(0, 4)), arc(R(0, 3), R(0, 5)), c);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
  }
  EXPECT_FALSE(nonzero_path(arc(R(0, 0), R(0, 4)), arc(R(0, 3), R(0, 5)), c));
}

TEST(HomExt, NonzeroHomCountsOnWindowFive) {
  // Frozen from an independent brute-force enumeration.
  const std::pair<int, int> cases[] = {{1, 1101}, {2, 22270}};
  for (const auto& [n, expected] : cases) {
    const auto arcs = enumerate_arcs(ModelParams(n), Window{5});
    int count = 0;
    for (const auto& b : arcs) {
      for (const auto& c : arcs) count += hom_dim(b, c);
    }
    EXPECT_EQ(count, expected) << "n = " << n;
  }
}

TEST(HomExt, SourceAndTargetRulesAgree) {
  for (int n : {1, 2, 3}) {
    const auto arcs = enumerate_arcs(ModelParams(n), Window{3});
    for (const auto& b : arcs) {
      for (const auto& c : arcs) ASSERT_EQ(hom_dim(b, c), hom_dim_from_source(b, c));
    }
  }
}

TEST(HomExt, ExtIsHomIntoSuspension) {
  for (int n : {1, 2}) {
    const auto arcs = enumerate_arcs(ModelParams(n), Window{4});
    for (const auto& c : arcs) {
      for (const auto& a : arcs) ASSERT_EQ(ext_dim(c, a), hom_dim(c, suspend(a)));
    }
  }
}

TEST(HomExt, FactorizationImpliesBothMaps) {
  const auto arcs = enumerate_arcs(ModelParams(2), Window{2});
  for (const auto& b : arcs) {
    for (const auto& c : arcs) {
      if (hom_dim(b, c) == 0) continue;
      for (const auto& s : arcs) {
        if (!factors_through(b, c, s)) continue;
        ASSERT_EQ(hom_dim(b, s), 1);
        ASSERT_EQ(hom_dim(s, c), 1);
      }
    }
  }
}

TEST(HomExt, FactorizationIsTransitive) {
  const auto arcs = enumerate_arcs(ModelParams(1), Window{5});
  for (const auto& b : arcs) {
    for (const auto& c : arcs) {
      if (hom_dim(b, c) == 0) continue;
      for (const auto& s : arcs) {
        if (s == b || s == c || !factors_through(b, c, s)) continue;
        for (const auto& t : arcs) {
          if (factors_through(s, c, t)) ASSERT_TRUE(factors_through(b, c, t));
        }
      }
    }
  }
}

TEST(HomExt, KilledByTriangulation) {
  const ModelParams params(1);
  const auto x = FanTriangulation::fountain(params, A(0));
  // The zero map is killed.
  EXPECT_TRUE(killed_by_triangulation(arc(R(0, 0), R(0, 2)), arc(R(0, 4), R(0, 6)), x));
  // {a0, r0:3} -> {r0:0, r0:3} -> {r0:1, r0:4} is nonzero.
  const auto c = arc(R(0, 0), R(0, 3));
  const auto target = suspend(arc(R(0, 2), R(0, 5)));
  ASSERT_EQ(hom_dim(c, target), 1);
  EXPECT_FALSE(killed_by_triangulation(c, target, x));
  EXPECT_FALSE(killed_by_triangulation_window(c, target, x, Window{6}));
}

TEST(HomExt, StructuralKillMatchesWindow) {
  const ModelParams params(2);
  const auto x = FanTriangulation::fountain(params, R(0, 0));
  const auto arcs = enumerate_arcs(params, Window{2});
  for (const auto& u : arcs) {
    for (const auto& v : arcs) {
      if (hom_dim(u, v) == 0) continue;
      ASSERT_EQ(killed_by_triangulation(u, v, x), killed_by_triangulation_window(u, v, x, Window{8}));
    }
  }
}
