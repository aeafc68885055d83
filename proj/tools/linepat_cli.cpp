// Command line front end for the line-pattern library: generate coefficient
// point sets, census their patterns, verify structural claims, walk single
// cells, describe the origin cell, and render SVG pictures.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linepat/cell_walk.hpp"
#include "linepat/lattice.hpp"
#include "linepat/point_set.hpp"
#include "linepat/subdivision.hpp"
#include "linepat/svg.hpp"
#include "linepat/verify.hpp"

namespace {

using namespace linepat;

PointSet read_input(const std::string& path) {
  if (path == "-") {
    return read_point_set(std::cin, "stdin");
  }
  return read_point_set_file(path);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write '" + path + "'");
  }
  out << content;
}

std::vector<Rational> parse_rational_list(const std::string& text,
                                          size_t expected,
                                          const std::string& what) {
  std::vector<Rational> values;
  std::string field;
  std::istringstream in(text);
  while (std::getline(in, field, ',')) {
    values.push_back(parse_rational(field));
  }
  if (values.size() != expected) {
    throw std::invalid_argument(what + ": expected " +
                                std::to_string(expected) +
                                " comma-separated values in '" + text + "'");
  }
  return values;
}

CoeffPoint parse_coeff_point(const std::string& text) {
  auto values = parse_rational_list(text, 2, "point");
  CoeffPoint p{values[0], values[1]};
  if (!is_valid(p)) {
    throw std::invalid_argument("point (0,0) does not name a line");
  }
  return p;
}

std::vector<EuclidPoint> parse_vertex_list(const std::string& text) {
  std::vector<EuclidPoint> vertices;
  std::string chunk;
  std::istringstream in(text);
  while (std::getline(in, chunk, ';')) {
    if (chunk.empty()) {
      continue;
    }
    auto values = parse_rational_list(chunk, 2, "vertex");
    vertices.push_back({values[0], values[1]});
  }
  if (vertices.empty()) {
    throw std::invalid_argument("polygon: no vertices given");
  }
  return vertices;
}

DSide parse_side(std::string text) {
  if (text == "R" || text == "r" || text == "right") {
    return DSide::right;
  }
  if (text == "L" || text == "l" || text == "left") {
    return DSide::left;
  }
  throw std::invalid_argument("side label must be R or L, got '" + text +
                              "'");
}

std::string census_text(const PointSet& s, const Subdivision& sub) {
  std::ostringstream out;
  if (!s.label.empty()) {
    out << "label: " << s.label << "\n";
  }
  out << "lines: " << sub.lines.size() << "\n";
  out << "vertices: " << sub.vertex_count() << "\n";
  out << "edges: " << sub.edge_count() << "\n";
  out << "faces: " << sub.face_count() << "\n";
  out << "bounded faces: " << bounded_faces(sub).size() << "\n";
  out << "census:";
  for (const auto& [sides, count] : census(sub)) {
    out << " " << sides << ":" << count;
  }
  out << "\n";
  out << "two-sided unbounded: " << two_sided_unbounded_count(sub) << "\n";
  out << "euler: " << (euler_relation_holds(sub) ? "ok" : "VIOLATED") << "\n";
  return out.str();
}

std::string census_json(const PointSet& s, const Subdivision& sub) {
  nlohmann::json doc;
  doc["label"] = s.label;
  doc["lines"] = sub.lines.size();
  doc["vertices"] = sub.vertex_count();
  doc["edges"] = sub.edge_count();
  doc["faces"] = sub.face_count();
  doc["bounded_faces"] = bounded_faces(sub).size();
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [sides, count] : census(sub)) {
    hist[std::to_string(sides)] = count;
  }
  doc["census"] = hist;
  doc["two_sided_unbounded"] = two_sided_unbounded_count(sub);
  doc["euler_ok"] = euler_relation_holds(sub);
  return doc.dump(2) + "\n";
}

int cmd_census(const std::string& input, bool json) {
  PointSet s = read_input(input);
  Subdivision sub = build(s);
  std::cout << (json ? census_json(s, sub) : census_text(s, sub));
  return 0;
}

int cmd_verify_input(const std::string& input, const VerifyOptions& options,
                     bool json) {
  PointSet s = read_input(input);
  auto wants = [&](const std::string& kind) {
    return options.claims.empty() ||
           std::find(options.claims.begin(), options.claims.end(), kind) !=
               options.claims.end();
  };
  std::vector<VerificationReport> reports;
  if (wants("no5gon")) {
    reports.push_back(check_no_5gon(s, "no5gon/input"));
  }
  if (wants("rrl")) {
    reports.push_back(check_rrl(s, "rrl/input"));
  }
  if (wants("engines")) {
    reports.push_back(compare_engines(s, "engines/input"));
  }
  if (reports.empty()) {
    throw std::invalid_argument(
        "with --input, claims must be among: no5gon rrl engines");
  }
  std::cout << (json ? reports_to_json(reports, options)
                     : reports_to_text(reports, options));
  return all_passed(reports) ? 0 : 1;
}

int cmd_walk(const std::string& input, const std::string& from_text,
             const std::string& to_text, const std::string& side_text) {
  PointSet s = read_input(input);
  CoeffPoint from = parse_coeff_point(from_text);
  CoeffPoint to = parse_coeff_point(to_text);
  DSide d = parse_side(side_text);
  if (!s.contains(from)) {
    throw std::invalid_argument("--from point " + to_string(from) +
                                " is not in the set");
  }
  if (!s.contains(to)) {
    throw std::invalid_argument("--to point " + to_string(to) +
                                " is not in the set");
  }
  if (from == to) {
    throw std::invalid_argument("--from and --to must differ");
  }
  if (cross(from, to) == 0) {
    std::cout << "UNBOUNDED\n";  // parallel lines never bound a cell together
    return 0;
  }
  std::optional<FaceWalk> walk = walk_face(s, from, to, d);
  if (!walk) {
    std::cout << "UNBOUNDED\n";
    return 0;
  }
  for (size_t k = 0; k < walk->sides.size(); ++k) {
    std::cout << "side " << k + 1 << ": P=" << to_string(walk->sides[k].line)
              << " D=" << to_char(walk->sides[k].origin_side) << "\n";
  }
  for (size_t k = 0; k < walk->vertices.size(); ++k) {
    std::cout << "vertex " << k + 1 << ": " << to_string(walk->vertices[k])
              << "\n";
  }
  std::cout << "contains origin: " << (walk->contains_origin ? "yes" : "no")
            << "\n";
  return 0;
}

int cmd_origin(const std::string& input) {
  PointSet s = read_input(input);
  OriginRegion region = origin_region(s);
  std::cout << "case: " << to_string(region.hull_case) << "\n";
  std::cout << "bounded: " << (region.bounded ? "yes" : "no") << "\n";
  std::cout << "sides: " << region.sides.size() << "\n";
  for (size_t k = 0; k < region.sides.size(); ++k) {
    std::cout << "side " << k + 1 << ": " << to_string(region.sides[k])
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact-arithmetic patterns of lines Ax+By=1 indexed by coefficient "
      "points (A,B)"};
  app.require_subcommand(1);

  // ---- gen ----------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Generate a coefficient point set");
  gen->require_subcommand(1);
  std::string gen_out;
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

  auto* gen_lattice =
      gen->add_subcommand("lattice", "Rectangular lattice a,b,dx,dy,n,m");
  std::string lattice_text;
  gen_lattice->add_option("--spec", lattice_text, "a,b,dx,dy,n,m")
      ->required();

  auto* gen_grid =
      gen->add_subcommand("grid", "Square lattice {-n..n}^2 minus origin");
  int grid_n = 1;
  gen_grid->add_option("n", grid_n, "half-width")->required();

  gen->add_subcommand("pentagon",
                      "Unequally spaced 3x3 set with a pentagonal cell");

  auto* gen_fib = gen->add_subcommand(
      "fibtriangle", "Triangle lattice containing an (n+2)-gon");
  int fib_n = 2;
  gen_fib->add_option("n", fib_n, "family index, n >= 2")->required();

  auto* gen_polygon =
      gen->add_subcommand("polygon", "Integer points in a convex polygon");
  std::string polygon_text;
  gen_polygon
      ->add_option("--vertices", polygon_text, "semicolon-separated x,y list")
      ->required();

  auto* gen_random = gen->add_subcommand("random", "Seeded random point set");
  int random_count = 5;
  std::uint64_t random_seed = kDefaultSeed;
  int random_max_abs = 3;
  int random_max_den = 3;
  gen_random->add_option("--count", random_count, "maximum number of points");
  gen_random->add_option("--seed", random_seed, "random seed");
  gen_random->add_option("--max-abs", random_max_abs,
                         "coefficient magnitude bound");
  gen_random->add_option("--max-den", random_max_den,
                         "coefficient denominator bound");
  for (CLI::App* sub : gen->get_subcommands(nullptr)) {
    sub->fallthrough();  // lets -o appear after the generator subcommand
  }

  // ---- census -------------------------------------------------------
  auto* census_cmd =
      app.add_subcommand("census", "Count the cells of a pattern");
  std::string census_input;
  bool census_as_json = false;
  census_cmd->add_option("input", census_input, "point set file or -")
      ->required();
  census_cmd->add_flag("--json", census_as_json, "JSON output");

  // ---- verify -------------------------------------------------------
  auto* verify_cmd =
      app.add_subcommand("verify", "Check structural claims about patterns");
  VerifyOptions options;
  std::string verify_input;
  bool verify_as_json = false;
  verify_cmd->add_option("claims", options.claims,
                         "claim kinds: no5gon rrl coprime counterexamples "
                         "transform engines (default all)");
  verify_cmd->add_option("--input", verify_input,
                         "check one point set file instead of the built-in "
                         "instance list");
  verify_cmd->add_option("--grid-max", options.grid_max,
                         "largest square grid half-width");
  verify_cmd->add_option("--lattices", options.random_lattices,
                         "number of random lattices");
  verify_cmd->add_option("--engine-trials", options.engine_trials,
                         "number of random sets for the engine cross-check");
  verify_cmd->add_option("--transform-trials", options.transform_trials,
                         "number of random invertible maps");
  verify_cmd->add_option("--seed", options.seed, "random seed");
  verify_cmd->add_flag("--json", verify_as_json, "JSON output");
  verify_cmd->add_flag("--timing", options.timing,
                       "include per-claim wall time in the output");

  // ---- walk ---------------------------------------------------------
  auto* walk_cmd = app.add_subcommand(
      "walk", "Walk one cell clockwise from a seed side pair");
  std::string walk_input, walk_from, walk_to, walk_side;
  walk_cmd->add_option("input", walk_input, "point set file or -")
      ->required();
  walk_cmd->add_option("--from", walk_from, "first side, as A,B")->required();
  walk_cmd->add_option("--to", walk_to, "second side, as A,B")->required();
  walk_cmd->add_option("--d", walk_side, "origin side of --from: R or L")
      ->required();

  // ---- origin -------------------------------------------------------
  auto* origin_cmd =
      app.add_subcommand("origin", "Describe the cell containing the origin");
  std::string origin_input;
  origin_cmd->add_option("input", origin_input, "point set file or -")
      ->required();

  // ---- render -------------------------------------------------------
  auto* render_cmd = app.add_subcommand("render", "Render a pattern as SVG");
  std::string render_input, render_out, viewbox_text;
  std::vector<std::string> shade_specs;
  RenderConfig config;
  bool no_highlight = false;
  render_cmd->add_option("input", render_input, "point set file or -")
      ->required();
  render_cmd->add_option("-o,--output", render_out,
                         "output file (default stdout)");
  render_cmd->add_option("--width", config.width_px, "image width in pixels");
  render_cmd->add_option("--viewbox", viewbox_text,
                         "window as xmin,ymin,xmax,ymax");
  render_cmd->add_option("--shade", shade_specs,
                         "fill cells with K sides: K or K:color");
  render_cmd->add_flag("--labels", config.labels,
                       "annotate lines with their coefficient points");
  render_cmd->add_flag("--no-highlight", no_highlight,
                       "do not highlight cells with five or more sides");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      PointSet s;
      if (gen_lattice->parsed()) {
        s = generate(parse_lattice_spec(lattice_text));
      } else if (gen_grid->parsed()) {
        s = generate(grid_spec(grid_n));
      } else if (gen->get_subcommand("pentagon")->parsed()) {
        s = pentagon_counterexample();
      } else if (gen_fib->parsed()) {
        s = fibonacci_triangle(fib_n);
      } else if (gen_polygon->parsed()) {
        s = lattice_in_polygon(parse_vertex_list(polygon_text));
      } else {
        std::mt19937_64 rng(random_seed);
        s = random_point_set(rng, random_count, random_max_abs,
                             random_max_den);
        s.label = "random(seed=" + std::to_string(random_seed) + ")";
      }
      std::ostringstream out;
      write_point_set(out, s);
      write_output(gen_out, out.str());
      return 0;
    }
    if (census_cmd->parsed()) {
      return cmd_census(census_input, census_as_json);
    }
    if (verify_cmd->parsed()) {
      if (!verify_input.empty()) {
        return cmd_verify_input(verify_input, options, verify_as_json);
      }
      std::vector<VerificationReport> reports = run_claims(options);
      std::cout << (verify_as_json ? reports_to_json(reports, options)
                                   : reports_to_text(reports, options));
      return all_passed(reports) ? 0 : 1;
    }
    if (walk_cmd->parsed()) {
      return cmd_walk(walk_input, walk_from, walk_to, walk_side);
    }
    if (origin_cmd->parsed()) {
      return cmd_origin(origin_input);
    }
    if (render_cmd->parsed()) {
      PointSet s = read_input(render_input);
      config.shade_5plus = !no_highlight;
      if (!viewbox_text.empty()) {
        auto values = parse_rational_list(viewbox_text, 4, "viewbox");
        config.viewbox = ViewBox{values[0], values[1], values[2], values[3]};
      }
      static const char* kPalette[] = {"#cfe8ff", "#d8f0d0", "#fff3bf",
                                       "#f4a6a6", "#e5d0ff"};
      for (const std::string& spec : shade_specs) {
        size_t colon = spec.find(':');
        int sides = std::stoi(spec.substr(0, colon));
        std::string color = colon == std::string::npos
                                ? kPalette[sides % 5]
                                : spec.substr(colon + 1);
        config.shade[sides] = color;
      }
      write_output(render_out, render_svg(build(s), config));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
