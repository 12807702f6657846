#include "clustercat/cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "clustercat/format.hpp"
#include "clustercat/homext.hpp"
#include "clustercat/index.hpp"
#include "clustercat/oracle.hpp"
#include "clustercat/render.hpp"
#include "clustercat/triangles.hpp"
#include "clustercat/triangulation.hpp"

namespace clustercat::cli {

namespace {

using nlohmann::json;

struct Common {
  std::optional<int> n;
  bool json = false;
  std::string triangulation;
};

bool use_color() {
  if (std::getenv("NO_COLOR") != nullptr) return false;
  return isatty(STDOUT_FILENO) != 0;
}

std::string paint(const std::string& text, bool ok) {
  if (!use_color()) return text;
  return (ok ? "\033[32m" : "\033[31m") + text + "\033[0m";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError(ErrorCode::IoError, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw DomainError(ErrorCode::IoError, "cannot write " + path);
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(ErrorCode::ParseError, origin + ": " + e.what());
  }
}

// One top-level key per line, values compact.
std::string document(const json& j) {
  if (!j.is_object()) return j.dump() + "\n";
  std::string out = "{\n";
  std::size_t i = 0;
  for (const auto& [key, value] : j.items()) {
    out += "  " + json(key).dump() + ": " + value.dump();
    out += ++i < j.size() ? ",\n" : "\n";
  }
  return out + "}\n";
}

ModelParams params_of(const Common& c) { return ModelParams(c.n.value_or(1)); }

FanTriangulation load_triangulation(const Common& c) {
  auto x = triangulation_from_json(parse_json(read_file(c.triangulation), c.triangulation));
  if (c.n && *c.n != x.params().n)
    throw DomainError(ErrorCode::MixedTriangulations, "-n " + std::to_string(*c.n) + " disagrees with the triangulation");
  return x;
}

void require_valid(const ModelParams& params, const Arc& a) {
  if (!a.valid_for(params))
    throw DomainError(ErrorCode::InvalidPoint, to_text(a) + " has a point outside the model with n = " +
                                                   std::to_string(params.n));
}

void require_valid(const ModelParams& params, const Obj& m) {
  for (const auto& a : m.summands()) require_valid(params, a);
}

json triangle_json(const Triangle& t) {
  auto connecting = json::array();
  for (const auto& [u, v] : t.connecting()) connecting.push_back(json::array({to_json(u), to_json(v)}));
  return json{{"kind", kind_tag(t.kind())},
              {"a", to_json(t.a())},
              {"b", to_json(t.b())},
              {"c", to_json(t.c())},
              {"connecting", connecting}};
}

std::string triangle_text(const Triangle& t) {
  std::string out = "kind: " + std::string(kind_tag(t.kind())) + "\n";
  out += "A: " + to_text(t.a()) + "\n";
  out += "B: " + to_text(t.b()) + "\n";
  out += "C: " + to_text(t.c()) + "\n";
  out += "connecting:";
  for (const auto& [u, v] : t.connecting()) out += " " + to_text(u) + " -> " + to_text(v) + ";";
  return out + "\n";
}

std::string vector_text(const IndexVector& v) {
  if (v.is_zero()) return "0\n";
  std::string out;
  for (const auto& [arc, k] : v.coeffs()) out += to_text(arc) + ": " + std::to_string(k) + "\n";
  return out;
}

void add_common(CLI::App* sub, Common& c, bool needs_triangulation) {
  sub->add_option("-n", c.n, "number of accumulation points")->check(CLI::PositiveNumber);
  sub->add_flag("--json", c.json, "print JSON");
  if (needs_triangulation) sub->add_option("-t,--triangulation", c.triangulation, "triangulation JSON file")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arc combinatorics of the completed discrete cluster category of type A"};
  app.name("clustercat");
  app.require_subcommand(1);

  Common common;
  std::string first, second, object_text, arcs_file, output, kind = "ext";
  int window = 8;
  std::uint64_t seed = 1;
  int samples = 50;
  bool no_labels = false;

  auto* hom = app.add_subcommand("hom", "dim Hom(A, B)");
  add_common(hom, common, false);
  hom->add_option("A", first)->required();
  hom->add_option("B", second)->required();

  auto* ext = app.add_subcommand("ext", "dim Ext^1(C, A)");
  add_common(ext, common, false);
  ext->add_option("C", first)->required();
  ext->add_option("A", second)->required();

  auto* tri = app.add_subcommand("triangle", "triangle A -> B -> C -> Sigma A for a nonzero extension");
  add_common(tri, common, false);
  tri->add_option("C", first)->required();
  tri->add_option("A", second)->required();

  auto* idx = app.add_subcommand("index", "index of an object");
  add_common(idx, common, true);
  idx->add_option("OBJ", object_text)->required();

  auto* flp = app.add_subcommand("flip", "flip a triangulation at an arc");
  add_common(flp, common, true);
  flp->add_option("ARC", first)->required();
  flp->add_option("-o,--output", output, "write the triangulation here");

  auto* dft = app.add_subcommand("defect", "additivity defect of a triangle");
  add_common(dft, common, true);
  dft->add_option("C", first)->required();
  dft->add_option("A", second, "not used with --kind approx");
  dft->add_option("--kind", kind, "ext, dual or approx")->check(CLI::IsMember({"ext", "dual", "approx"}));
  dft->add_option("--window", window, "window for the image vector")->check(CLI::NonNegativeNumber);

  auto* ver = app.add_subcommand("verify", "run the windowed oracles against a triangulation");
  add_common(ver, common, true);
  ver->add_option("--window", window)->check(CLI::NonNegativeNumber);
  ver->add_option("--seed", seed);
  ver->add_option("--samples", samples)->check(CLI::PositiveNumber);

  auto* ren = app.add_subcommand("render", "draw a triangulation or arc list as SVG");
  add_common(ren, common, false);
  ren->add_option("-t,--triangulation", common.triangulation, "triangulation JSON file");
  ren->add_option("--arcs", arcs_file, "extra arcs, as JSON or text object");
  ren->add_option("-o,--output", output)->required();
  ren->add_option("--window", window)->check(CLI::NonNegativeNumber);
  ren->add_flag("--no-labels", no_labels);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (hom->parsed() || ext->parsed() || tri->parsed()) {
      const auto params = params_of(common);
      const auto u = parse_arc(first);
      const auto v = parse_arc(second);
      require_valid(params, u);
      require_valid(params, v);
      if (tri->parsed()) {
        const auto t = extension_triangle(u, v);
        out << (common.json ? document(triangle_json(t)) : triangle_text(t));
      } else {
        const int d = hom->parsed() ? hom_dim(u, v) : ext_dim(u, v);
        out << (common.json ? json{{"dim", d}}.dump() : std::to_string(d)) << "\n";
      }
      return 0;
    }

    if (idx->parsed()) {
      const auto x = load_triangulation(common);
      const auto m = parse_obj(object_text);
      require_valid(x.params(), m);
      const auto v = index(x, m);
      out << (common.json ? document(to_json(v)) : vector_text(v));
      return 0;
    }

    if (flp->parsed()) {
      const auto x = load_triangulation(common);
      const auto a = parse_arc(first);
      require_valid(x.params(), a);
      const auto [y, quad] = flip(x, a);
      const auto text = document(to_json(y));
      if (output.empty()) {
        out << text;
      } else {
        write_file(output, text);
        out << "removed " << to_text(quad.x) << ", added " << to_text(quad.y) << "\n";
      }
      return 0;
    }

    if (dft->parsed()) {
      const auto x = load_triangulation(common);
      const auto c = parse_arc(first);
      require_valid(x.params(), c);
      std::optional<Triangle> t;
      if (kind == "approx") {
        t = approximation_triangle(x, c);
      } else {
        if (second.empty()) throw DomainError(ErrorCode::ParseError, "defect --kind " + kind + " needs C and A");
        const auto a = parse_arc(second);
        require_valid(x.params(), a);
        t = kind == "ext" ? extension_triangle(c, a) : dual_extension_triangle(a, c);
      }
      const auto d = additivity_defect(x, *t);
      const auto image = image_dim_vector(x, *t, Window{window});
      if (common.json) {
        auto dims = json::array();
        for (const auto& [w, k] : image.dims) dims.push_back(json::array({to_json(w), k}));
        out << document(json{{"triangle", triangle_json(*t)}, {"defect", to_json(d)}, {"image", dims}, {"window", window}});
      } else {
        out << triangle_text(*t) << "defect:\n" << vector_text(d) << "image on window " << window << ":";
        for (const auto& [w, k] : image.dims) out << " " << to_text(w) << "=" << k;
        out << "\n";
      }
      return 0;
    }

    if (ver->parsed()) {
      const auto x = load_triangulation(common);
      const Window win{window};
      OracleReport total;
      total.name = "verify";
      total.seed = seed;
      total.window = win;

      const auto tri_report = validate_window(x, win);
      total.record("triangulation", tri_report.pass,
                   tri_report.violations.empty() ? std::string{} : tri_report.violations.front());

      std::mt19937_64 rng(seed);
      const Window sample{std::min(window, 4)};
      for (int i = 0; i < samples; ++i) {
        const auto c = random_arc(x.params(), sample, rng);
        if (x.contains(c)) continue;
        const auto t = approximation_triangle(x, c);
        total.merge(verify_approximation(x, c, t.b(), win));
        for (const auto& [u, target] : t.connecting())
          total.record("killed " + to_text(u) + " -> " + to_text(target),
                       killed_by_triangulation_window(u, target, x, Window{window + 2}));
      }
      total.merge(verify_defect_invariance(x, samples, win, seed));
      if (is_rigid(x)) total.merge(verify_mutation(x, 0, samples, win, seed));

      if (common.json) {
        out << total.json_lines();
      } else {
        out << total.summary() << "\n";
        for (const auto& r : total.records) {
          if (!r.pass) out << paint("FAIL", false) << " " << r.check << ": " << r.detail << "\n";
        }
        out << paint(total.pass() ? "PASS" : "FAIL", total.pass()) << "\n";
      }
      return total.pass() ? 0 : 1;
    }

    if (ren->parsed()) {
      RenderSpec spec;
      spec.window = Window{window};
      spec.labels = !no_labels;
      std::vector<Arc> extra;
      std::optional<FanTriangulation> x;
      if (!common.triangulation.empty()) x = load_triangulation(common);
      const auto params = x ? x->params() : params_of(common);
      if (!arcs_file.empty()) {
        const auto text = read_file(arcs_file);
        const Obj m = json::accept(text) ? obj_from_json(json::parse(text)) : parse_obj(text);
        require_valid(params, m);
        extra.assign(m.summands().begin(), m.summands().end());
      }
      const auto svg = x ? render_svg(*x, extra, spec) : render_svg(params, extra, spec);
      write_file(output, svg);
      return 0;
    }
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  }
  return 2;
}

}  // namespace clustercat::cli
