#pragma once

// Text and JSON forms shared by the library and the command line.
//
//   point   a<j> | r<j>:<k>             {"acc": j} | {"reg": [j, k]}
//   arc     [a1, r0:3]                  [point, point]
//   object  [arc; arc; ...]             [arc, ...]

#include <string>
#include <string_view>

#include <json.hpp>

#include "clustercat/surface.hpp"

namespace clustercat {

class FanTriangulation;
class IndexVector;

std::string to_text(const MarkedPoint& p);
std::string to_text(const Arc& a);
std::string to_text(const Obj& m);

/// Throws DomainError(ParseError) on malformed input, and the arc errors for
/// invalid endpoint pairs.
MarkedPoint parse_point(std::string_view text);
Arc parse_arc(std::string_view text);
Obj parse_obj(std::string_view text);

nlohmann::json to_json(const MarkedPoint& p);
nlohmann::json to_json(const Arc& a);
nlohmann::json to_json(const Obj& m);
nlohmann::json to_json(const FanTriangulation& x);
nlohmann::json to_json(const IndexVector& v);

MarkedPoint point_from_json(const nlohmann::json& j);
Arc arc_from_json(const nlohmann::json& j);
Obj obj_from_json(const nlohmann::json& j);
FanTriangulation triangulation_from_json(const nlohmann::json& j);
IndexVector index_vector_from_json(const nlohmann::json& j);

}  // namespace clustercat
