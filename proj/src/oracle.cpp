#include "clustercat/oracle.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "clustercat/format.hpp"
#include "clustercat/homext.hpp"
#include "clustercat/index.hpp"
#include "clustercat/triangles.hpp"
#include "clustercat/triangulation.hpp"

namespace clustercat {

std::vector<Arc> enumerate_arcs(const ModelParams& params, const Window& window) {
  const auto pts = window_points(params, window);
  std::vector<Arc> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (Arc::is_valid(pts[i], pts[j])) out.push_back(Arc::make(pts[i], pts[j]));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool OracleReport::pass() const { return failures() == 0 && !alarm; }

std::size_t OracleReport::failures() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.pass; }));
}

void OracleReport::record(std::string check, bool ok, std::string detail) {
  records.push_back(OracleRecord{std::move(check), ok, std::move(detail)});
}

void OracleReport::merge(const OracleReport& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
  for (const auto& [k, v] : other.counters) counters[k] += v;
  alarm = alarm || other.alarm;
}

std::string OracleReport::json_lines() const {
  std::ostringstream out;
  for (const auto& r : records) {
    nlohmann::json j{{"suite", name}, {"check", r.check}, {"pass", r.pass}, {"window", window.w}, {"seed", seed}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    out << j.dump() << '\n';
  }
  return out.str();
}

std::string OracleReport::summary() const {
  std::ostringstream out;
  out << name << ": " << records.size() << " checks, " << failures() << " failed, window " << window.w << ", seed "
      << seed;
  for (const auto& [k, v] : counters) out << ", " << k << '=' << v;
  if (alarm) out << " (window alarm)";
  return out.str();
}

namespace {

// Window members of X with a nonzero map to C that do not factor through
// any of `summands`.
std::vector<Arc> unfactored(const std::vector<Arc>& members, const Arc& c, std::span<const Arc> summands) {
  std::vector<Arc> out;
  for (const auto& w : members) {
    if (hom_dim(w, c) == 0) continue;
    const bool ok = std::any_of(summands.begin(), summands.end(),
                                [&](const Arc& s) { return hom_dim(s, c) == 1 && factors_through(w, c, s); });
    if (!ok) out.push_back(w);
  }
  return out;
}

std::vector<Arc> window_members(const FanTriangulation& x, const Window& window) {
  std::vector<Arc> out;
  for (const auto& a : enumerate_arcs(x.params(), window)) {
    if (x.contains(a)) out.push_back(a);
  }
  return out;
}

// Returns a failure description, empty on success.
std::string check_approximation(const std::vector<Arc>& members, const FanTriangulation& x, const Arc& c,
                                const Obj& x0) {
  for (const auto& s : x0.summands()) {
    if (!x.contains(s)) return "summand " + to_text(s) + " is not in X";
  }
  if (auto bad = unfactored(members, c, x0.summands()); !bad.empty())
    return "map from " + to_text(bad.front()) + " does not factor";
  std::vector<Arc> distinct(x0.summands().begin(), x0.summands().end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() != x0.size()) return "repeated summand";
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    auto rest = distinct;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (unfactored(members, c, rest).empty()) return "summand " + to_text(distinct[i]) + " is redundant";
  }
  return {};
}

}  // namespace

OracleReport verify_approximation(const FanTriangulation& x, const Arc& c, const Obj& x0, const Window& window) {
  OracleReport report;
  report.name = "approximation";
  report.window = window;
  const auto small = check_approximation(window_members(x, window), x, c, x0);
  const auto large = check_approximation(window_members(x, Window{window.w + 2}), x, c, x0);
  report.record("approximation " + to_text(c), small.empty(), small);
  if (small.empty() && !large.empty()) {
    report.alarm = true;
    report.record("window " + std::to_string(window.w + 2), false, large);
  }
  return report;
}

Arc random_arc(const ModelParams& params, const Window& window, std::mt19937_64& rng) {
  const auto pts = window_points(params, window);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  for (;;) {
    const auto& a = pts[pick(rng)];
    const auto& b = pts[pick(rng)];
    if (Arc::is_valid(a, b)) return Arc::make(a, b);
  }
}

std::vector<Arc> flippable_arcs(const FanTriangulation& x, const Window& window) {
  std::vector<Arc> out;
  for (const auto& a : window_members(x, window)) {
    try {
      adjacent_triangles(x, a);
      out.push_back(a);
    } catch (const DomainError& e) {
      if (e.code() != ErrorCode::NoFlipAvailable) throw;
    }
  }
  return out;
}

FanTriangulation random_flips(const FanTriangulation& x, int count, const Window& window, std::mt19937_64& rng) {
  auto y = x;
  for (int i = 0; i < count; ++i) {
    const auto arcs = flippable_arcs(y, window);
    if (arcs.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, arcs.size() - 1);
    y = flip(y, arcs[pick(rng)]).first;
  }
  return y;
}

namespace {

bool compatible(const Obj& m, const Arc& a) {
  if (m.multiplicity(a) > 0 || ext_dim(a, a) == 1) return false;
  return std::none_of(m.summands().begin(), m.summands().end(),
                      [&](const Arc& s) { return ext_dim(a, s) == 1 || ext_dim(s, a) == 1; });
}

Obj grow_rigid(Obj m, const ModelParams& params, const Window& window, int target, std::mt19937_64& rng) {
  for (int tries = 0; tries < 64 && static_cast<int>(m.size()) < target; ++tries) {
    const auto a = random_arc(params, window, rng);
    if (compatible(m, a)) m.add(a);
  }
  return m;
}

}  // namespace

Obj random_rigid_object(const ModelParams& params, const Window& window, int max_summands, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(1, max_summands);
  return grow_rigid(Obj{}, params, window, size(rng), rng);
}

namespace {

struct Defect {
  IndexVector value;
  ImageDimVector small;
  ImageDimVector large;
};

Defect defect_of(const FanTriangulation& x, const Triangle& t, const Window& window) {
  return Defect{additivity_defect(x, t), image_dim_vector(x, t, window), image_dim_vector(x, t, Window{window.w + 2})};
}

std::string describe(const Triangle& t) {
  return to_text(t.a()) + " -> " + to_text(t.b()) + " -> " + to_text(t.c()) + " (" + std::string(kind_tag(t.kind())) +
         ")";
}

}  // namespace

OracleReport verify_defect_invariance(const FanTriangulation& x, int sample_size, const Window& window,
                                      std::uint64_t seed) {
  OracleReport report;
  report.name = "defect";
  report.seed = seed;
  report.window = window;
  std::mt19937_64 rng(seed);
  const Window sample{std::min(window.w, 4)};
  const auto& params = x.params();

  std::vector<Triangle> pool;
  while (static_cast<int>(pool.size()) < sample_size) {
    const auto c = random_arc(params, sample, rng);
    const auto a = random_arc(params, sample, rng);
    if (ext_dim(c, a) == 1) pool.push_back(extension_triangle(c, a));
    if (!x.contains(c)) pool.push_back(approximation_triangle(x, c));
  }

  auto zero_rule = [&](const Triangle& t, const Defect& d) {
    if (!d.small.is_zero()) return;
    ++report.counters["zero_image"];
    if (d.value.is_zero()) {
      report.record("zero image " + describe(t), true);
    } else if (!d.large.is_zero()) {
      report.alarm = true;
      report.record("zero image " + describe(t), false, "image appears on the enlarged window");
    } else {
      report.record("zero image " + describe(t), false, "defect " + to_json(d.value).dump());
    }
  };

  std::vector<Defect> defects;
  for (const auto& t : pool) {
    defects.push_back(defect_of(x, t, window));
    zero_rule(t, defects.back());
  }

  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < sample_size; ++i) {
    const auto p = pick(rng);
    const auto q = pick(rng);
    const auto sum = direct_sum(pool[p], pool[q]);
    const auto d = additivity_defect(x, sum);
    ++report.counters["sum_pairs"];
    report.record("direct sum " + describe(sum), d == defects[p].value + defects[q].value);
  }

  for (std::size_t p = 0; p < pool.size(); ++p) {
    for (const std::int64_t k : {-2, -1, 1, 2}) {
      const auto u = suspend(pool[p], k);
      const auto d = defect_of(x, u, window);
      if (!(d.small == defects[p].small) || !(d.large == defects[p].large)) continue;
      ++report.counters["translated_pairs"];
      report.record("translated " + describe(pool[p]) + " by " + std::to_string(k), d.value == defects[p].value);
    }
  }
  return report;
}

OracleReport verify_mutation(const FanTriangulation& x, int flips, int sample_size, const Window& window,
                             std::uint64_t seed) {
  if (!is_rigid(x)) throw DomainError(ErrorCode::NotRigidTriangulation, "mutation check needs a rigid triangulation");
  OracleReport report;
  report.name = "mutation";
  report.seed = seed;
  report.window = window;
  std::mt19937_64 rng(seed);
  const auto& params = x.params();
  const Window sample{std::min(window.w, 5)};

  auto arcs = flippable_arcs(x, sample);
  if (arcs.empty()) {
    report.record("flippable arcs", false, "none inside the window");
    return report;
  }
  std::shuffle(arcs.begin(), arcs.end(), rng);
  if (flips > 0 && static_cast<int>(arcs.size()) > flips) arcs.erase(arcs.begin() + flips, arcs.end());

  std::uniform_int_distribution<std::size_t> pick(0, arcs.size() - 1);
  std::bernoulli_distribution seeded(0.5);
  std::uniform_int_distribution<int> size(1, 3);
  for (int i = 0; i < sample_size; ++i) {
    const auto& arc = arcs[pick(rng)];
    const auto [y, quad] = flip(x, arc);
    // Half of the objects start from the new diagonal, whose index has a
    // negative coefficient at the flipped arc.
    Obj m = seeded(rng) ? Obj{quad.y} : Obj{};
    m = grow_rigid(std::move(m), params, sample, size(rng), rng);
    if (m.empty()) continue;

    const auto predicted = index_after_flip(x, arc, m, false);
    const auto direct = index(y, m);
    const bool ok = predicted.value == direct;
    if (predicted.coefficient > 0) ++report.counters["phi"];
    if (predicted.coefficient < 0) ++report.counters["psi"];
    if (predicted.coefficient == 0) ++report.counters["zero"];
    report.record("flip " + to_text(arc) + " object " + to_text(m), ok,
                  ok ? std::string{} : "predicted " + to_json(predicted.value).dump() + " direct " + to_json(direct).dump());
  }
  return report;
}

}  // namespace clustercat
