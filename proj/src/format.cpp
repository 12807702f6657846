#include "clustercat/format.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "clustercat/index.hpp"
#include "clustercat/triangulation.hpp"

namespace clustercat {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(std::string_view what, std::string_view text) {
  throw DomainError(ErrorCode::ParseError, std::string(what) + ": '" + std::string(text) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  T v{};
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size()) parse_error("bad integer", whole);
  return v;
}

// Contents of a bracketed list, or nullopt-like empty view on mismatch.
std::string_view unbracket(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') parse_error("expected [...]", whole);
  return s.substr(1, s.size() - 2);
}

// Splits at top-level separators, ignoring those inside brackets.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']') --depth;
    if (s[i] == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

}  // namespace

std::string to_text(const MarkedPoint& p) {
  if (p.is_accumulation()) return "a" + std::to_string(p.interval());
  return "r" + std::to_string(p.interval()) + ":" + std::to_string(p.position());
}

std::string to_text(const Arc& a) { return "[" + to_text(a.first()) + ", " + to_text(a.second()) + "]"; }

std::string to_text(const Obj& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += "; ";
    out += to_text(m.summands()[i]);
  }
  return out + "]";
}

MarkedPoint parse_point(std::string_view text) {
  const auto s = trim(text);
  if (s.size() < 2) parse_error("bad point", text);
  if (s.front() == 'a') return MarkedPoint::accumulation(parse_int<int>(s.substr(1), text));
  if (s.front() == 'r') {
    const auto colon = s.find(':');
    if (colon == std::string_view::npos) parse_error("bad point", text);
    return MarkedPoint::regular(parse_int<int>(s.substr(1, colon - 1), text),
                                parse_int<std::int64_t>(s.substr(colon + 1), text));
  }
  parse_error("bad point", text);
}

Arc parse_arc(std::string_view text) {
  const auto parts = split_top(unbracket(text, text), ',');
  if (parts.size() != 2) parse_error("an arc has two endpoints", text);
  return Arc::make(parse_point(parts[0]), parse_point(parts[1]));
}

Obj parse_obj(std::string_view text) {
  const auto inner = trim(unbracket(text, text));
  if (inner.empty()) return Obj{};
  // A bare arc is accepted as a one-summand object.
  if (inner.front() != '[') return Obj{parse_arc(text)};
  std::vector<Arc> arcs;
  for (const auto& part : split_top(inner, ';')) arcs.push_back(parse_arc(part));
  return Obj(std::move(arcs));
}

json to_json(const MarkedPoint& p) {
  if (p.is_accumulation()) return json{{"acc", p.interval()}};
  return json{{"reg", {p.interval(), p.position()}}};
}

json to_json(const Arc& a) { return json::array({to_json(a.first()), to_json(a.second())}); }

json to_json(const Obj& m) {
  auto out = json::array();
  for (const auto& a : m.summands()) out.push_back(to_json(a));
  return out;
}

json to_json(const FanTriangulation& x) {
  json out{{"n", x.params().n}, {"base", to_json(x.base())}};
  out["removed"] = json::array();
  out["added"] = json::array();
  for (const auto& a : x.removed()) out["removed"].push_back(to_json(a));
  for (const auto& a : x.added()) out["added"].push_back(to_json(a));
  if (!x.flip_log().empty()) {
    out["flips"] = json::array();
    for (const auto& f : x.flip_log()) out["flips"].push_back(json::array({to_json(f.removed), to_json(f.added)}));
  }
  return out;
}

json to_json(const IndexVector& v) {
  auto coeffs = json::array();
  for (const auto& [arc, k] : v.coeffs()) coeffs.push_back(json::array({to_json(arc), k}));
  return json{{"triangulation", to_json(v.triangulation())}, {"coeffs", coeffs}};
}

MarkedPoint point_from_json(const json& j) {
  try {
    if (j.is_object() && j.size() == 1 && j.contains("acc")) return MarkedPoint::accumulation(j.at("acc").get<int>());
    if (j.is_object() && j.size() == 1 && j.contains("reg")) {
      const auto& r = j.at("reg");
      if (r.is_array() && r.size() == 2) return MarkedPoint::regular(r[0].get<int>(), r[1].get<std::int64_t>());
    }
  } catch (const json::exception&) {
  }
  parse_error("bad point", j.dump());
}

Arc arc_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) parse_error("bad arc", j.dump());
  return Arc::make(point_from_json(j[0]), point_from_json(j[1]));
}

Obj obj_from_json(const json& j) {
  if (!j.is_array()) parse_error("bad object", j.dump());
  std::vector<Arc> arcs;
  for (const auto& a : j) arcs.push_back(arc_from_json(a));
  return Obj(std::move(arcs));
}

namespace {

std::set<Arc> arc_set(const json& j, const char* key) {
  std::set<Arc> out;
  if (!j.contains(key)) return out;
  if (!j.at(key).is_array()) parse_error(std::string(key) + " must be a list", j.dump());
  for (const auto& a : j.at(key)) out.insert(arc_from_json(a));
  return out;
}

}  // namespace

FanTriangulation triangulation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("base") || !j.at("n").is_number_integer())
    parse_error("triangulation needs n and base", j.dump());
  const ModelParams params(j.at("n").get<int>());
  std::vector<FlipRecord> log;
  if (j.contains("flips")) {
    for (const auto& f : j.at("flips")) {
      if (!f.is_array() || f.size() != 2) parse_error("bad flip record", f.dump());
      log.push_back(FlipRecord{arc_from_json(f[0]), arc_from_json(f[1])});
    }
  }
  return FanTriangulation::from_description(params, point_from_json(j.at("base")), arc_set(j, "removed"),
                                            arc_set(j, "added"), std::move(log));
}

IndexVector index_vector_from_json(const json& j) {
  if (!j.is_object() || !j.contains("triangulation") || !j.contains("coeffs")) parse_error("bad index vector", j.dump());
  IndexVector v(triangulation_from_json(j.at("triangulation")));
  for (const auto& entry : j.at("coeffs")) {
    if (!entry.is_array() || entry.size() != 2 || !entry[1].is_number_integer()) parse_error("bad coefficient", entry.dump());
    v.add(arc_from_json(entry[0]), entry[1].get<std::int64_t>());
  }
  return v;
}

}  // namespace clustercat
