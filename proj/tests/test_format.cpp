#include <gtest/gtest.h>

#include "clustercat/format.hpp"
#include "clustercat/index.hpp"
#include "clustercat/oracle.hpp"
#include "clustercat/render.hpp"

using namespace clustercat;

namespace {

MarkedPoint R(int j, std::int64_t k) { return MarkedPoint::regular(j, k); }
MarkedPoint A(int j) { return MarkedPoint::accumulation(j); }
Arc arc(MarkedPoint p, MarkedPoint q) { return Arc::make(p, q); }

}  // namespace

TEST(Format, Text) {
  EXPECT_EQ(to_text(A(1)), "a1");
  EXPECT_EQ(to_text(R(0, -3)), "r0:-3");
  EXPECT_EQ(to_text(arc(R(0, 3), A(1))), "[r0:3, a1]");
  EXPECT_EQ(to_text(Obj{}), "[]");
  EXPECT_EQ(parse_point(" r2:-17 "), R(2, -17));
  EXPECT_EQ(parse_arc("[a1,r0:3]"), arc(A(1), R(0, 3)));
  EXPECT_EQ(parse_obj("[[a0,r1:0];[a0,r0:0]]"), (Obj{arc(A(0), R(1, 0)), arc(A(0), R(0, 0))}));
  EXPECT_EQ(parse_obj("[a0, r0:0]"), Obj{arc(A(0), R(0, 0))});
  EXPECT_EQ(parse_obj("[]"), Obj{});
}

TEST(Format, ParseErrors) {
  for (const char* bad : {"", "x0", "r0", "r0:", "r:1", "a", "[a0]", "[a0, r0:1, r0:3]", "a0, r0:1", "[a0; r0:1]"}) {
    try {
      parse_obj(bad);
      ADD_FAILURE() << bad;
    } catch (const DomainError& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
  try {
    parse_arc("[r0:0, r0:1]");
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NeighbouringEndpoints);
  }
}

TEST(Format, TextRoundTrip) {
  for (const auto& a : enumerate_arcs(ModelParams(3), Window{2})) {
    ASSERT_EQ(parse_arc(to_text(a)), a);
    ASSERT_EQ(parse_point(to_text(a.first())), a.first());
  }
  const Obj m{arc(A(0), A(1)), arc(R(1, -4), R(0, 7)), arc(A(0), A(1))};
  EXPECT_EQ(parse_obj(to_text(m)), m);
}

TEST(Format, JsonRoundTrip) {
  const ModelParams params(2);
  EXPECT_EQ(to_json(A(1)).dump(), R"({"acc":1})");
  EXPECT_EQ(to_json(R(0, -2)).dump(), R"({"reg":[0,-2]})");
  const Obj m{arc(A(0), R(1, 0)), arc(R(0, 0), R(1, 0))};
  EXPECT_EQ(obj_from_json(to_json(m)), m);

  const auto x = FanTriangulation::fountain(params, A(1));
  const auto [y, q] = flip(x, arc(A(1), R(0, 2)));
  const auto back = triangulation_from_json(to_json(y));
  EXPECT_EQ(back, y);
  EXPECT_EQ(back.flip_log(), y.flip_log());

  const auto v = index(y, Obj{arc(A(0), R(0, 0))});
  EXPECT_EQ(index_vector_from_json(to_json(v)), v);
}

TEST(Format, JsonErrors) {
  using nlohmann::json;
  EXPECT_THROW(point_from_json(json::parse(R"({"acc":"x"})")), DomainError);
  EXPECT_THROW(point_from_json(json::parse(R"({"reg":[1]})")), DomainError);
  EXPECT_THROW(arc_from_json(json::parse(R"([{"acc":0}])")), DomainError);
  EXPECT_THROW(triangulation_from_json(json::parse(R"({"base":{"acc":0}})")), DomainError);
  EXPECT_THROW(triangulation_from_json(json::parse(R"({"n":1,"base":{"acc":3}})")), DomainError);
}

TEST(Render, DeterministicSvg) {
  const ModelParams params(1);
  const auto x = FanTriangulation::fountain(params, A(0));
  const auto svg = render_svg(x, {}, RenderSpec{});
  EXPECT_EQ(svg, render_svg(x, {}, RenderSpec{}));
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
  EXPECT_NE(svg.find("fill=\"black\""), std::string::npos);
  // 13 fountain chords inside window 6.
  std::size_t lines = 0;
  for (auto pos = svg.find("<line"); pos != std::string::npos; pos = svg.find("<line", pos + 1)) ++lines;
  EXPECT_EQ(lines, 13u);

  const auto empty = render_svg(params, std::span<const Arc>{}, RenderSpec{});
  EXPECT_EQ(empty.find("<line"), std::string::npos);
  EXPECT_NE(empty.find("<circle"), std::string::npos);
}

TEST(Render, AnglesAreMonotone) {
  const ModelParams params(3);
  const auto pts = window_points(params, Window{8});
  for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_LT(point_angle(params, pts[i - 1]), point_angle(params, pts[i]));
  EXPECT_DOUBLE_EQ(point_angle(params, A(0)), 0.0);
}
