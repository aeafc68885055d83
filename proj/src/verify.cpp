#include "linepat/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace linepat {

namespace {

std::string histogram_to_string(const std::map<int, int>& hist) {
  std::string out = "{";
  bool first = true;
  for (const auto& [sides, count] : hist) {
    if (!first) {
      out += ", ";
    }
    first = false;
    out += std::to_string(sides) + ":" + std::to_string(count);
  }
  return out + "}";
}

std::string polygon_key(const std::vector<EuclidPoint>& polygon) {
  size_t best = 0;
  for (size_t k = 1; k < polygon.size(); ++k) {
    if (polygon[k] < polygon[best]) {
      best = k;
    }
  }
  std::string key;
  for (size_t k = 0; k < polygon.size(); ++k) {
    key += to_string(polygon[(best + k) % polygon.size()]);
  }
  return key;
}

std::string labels_of(const FaceWalk& walk) {
  std::string labels;
  for (const WalkSide& side : walk.sides) {
    labels += to_char(side.origin_side);
  }
  return labels;
}

std::vector<CoeffPoint> sorted_walk_lines(const FaceWalk& walk) {
  std::vector<CoeffPoint> lines;
  lines.reserve(walk.sides.size());
  for (const WalkSide& side : walk.sides) {
    lines.push_back(side.line);
  }
  std::sort(lines.begin(), lines.end());
  return lines;
}

std::string lines_to_string(const std::vector<CoeffPoint>& lines) {
  std::string out;
  for (const CoeffPoint& p : lines) {
    out += to_string(p);
  }
  return out;
}

// Shared per-set data for the lattice claims, so a runner can evaluate
// several claims over one enumeration.
struct CellData {
  PointSet s;
  std::vector<FaceWalk> faces;
  bool has_region = false;
  OriginRegion region;
};

CellData make_cell_data(PointSet s) {
  CellData data;
  data.s = std::move(s);
  data.faces = enumerate_faces(data.s);
  if (!data.s.empty()) {
    data.region = origin_region(data.s);
    data.has_region = true;
  }
  return data;
}

std::map<int, int> walk_histogram(const std::vector<FaceWalk>& faces) {
  std::map<int, int> hist;
  for (const FaceWalk& walk : faces) {
    ++hist[static_cast<int>(walk.sides.size())];
  }
  return hist;
}

VerificationReport no5gon_report(const CellData& data, std::string id) {
  VerificationReport report;
  report.claim_id = std::move(id);
  report.histogram = walk_histogram(data.faces);
  report.passed = true;
  for (const FaceWalk& walk : data.faces) {
    size_t count = walk.sides.size();
    if (count != 3 && count != 4) {
      report.passed = false;
      report.witness = std::to_string(count) + "-sided cell with sides " +
                       lines_to_string(sorted_walk_lines(walk));
      return report;
    }
  }
  if (data.has_region && data.region.sides.size() > 4) {
    report.passed = false;
    report.witness = "origin cell has " +
                     std::to_string(data.region.sides.size()) + " sides";
  }
  return report;
}

VerificationReport rrl_report(const CellData& data, std::string id) {
  VerificationReport report;
  report.claim_id = std::move(id);
  report.histogram = walk_histogram(data.faces);
  report.passed = true;
  for (const FaceWalk& walk : data.faces) {
    if (walk.contains_origin) {
      continue;  // the origin cell is labelled right all around
    }
    const size_t count = walk.sides.size();
    for (size_t k = 0; k < count; ++k) {
      DSide a = walk.sides[k].origin_side;
      DSide b = walk.sides[(k + 1) % count].origin_side;
      DSide c = walk.sides[(k + 2) % count].origin_side;
      if (a == b && b == c) {
        report.passed = false;
        report.witness = "labels " + labels_of(walk) +
                         " repeat three times from position " +
                         std::to_string(k) + " on cell with sides " +
                         lines_to_string(sorted_walk_lines(walk));
        return report;
      }
    }
  }
  return report;
}

}  // namespace

VerificationReport check_no_5gon(const LatticeSpec& spec) {
  return no5gon_report(make_cell_data(generate(spec)),
                       "no5gon/" + to_string(spec));
}

VerificationReport check_no_5gon(const PointSet& s, const std::string& id) {
  return no5gon_report(make_cell_data(s), id);
}

VerificationReport check_rrl(const LatticeSpec& spec) {
  return rrl_report(make_cell_data(generate(spec)), "rrl/" + to_string(spec));
}

VerificationReport check_rrl(const PointSet& s, const std::string& id) {
  return rrl_report(make_cell_data(s), id);
}

VerificationReport check_counterexamples() {
  VerificationReport report;
  report.claim_id = "counterexamples";
  report.passed = true;
  std::string witness;

  Subdivision pentagon = build(pentagon_counterexample());
  report.histogram = census(pentagon);
  if (report.histogram.find(5) == report.histogram.end()) {
    report.passed = false;
    witness += "pentagon set: no 5-sided cell, census " +
               histogram_to_string(report.histogram) + "; ";
  }

  for (int n = 2; n <= 4; ++n) {
    std::map<int, int> hist = census(build(fibonacci_triangle(n)));
    int max_sides = hist.empty() ? 0 : hist.rbegin()->first;
    if (max_sides != n + 2) {
      report.passed = false;
      witness += "fibtriangle(" + std::to_string(n) + "): max side count " +
                 std::to_string(max_sides) + ", expected " +
                 std::to_string(n + 2) + "; ";
    }
  }
  report.witness = witness;
  return report;
}

VerificationReport check_coprime(int n) {
  if (n < 1 || n > 4) {
    throw std::invalid_argument("check_coprime: n must be in 1..4");
  }
  VerificationReport report;
  report.claim_id = "coprime/n-" + std::to_string(n);
  Subdivision sub = build(generate(grid_spec(n)));
  int from_faces = two_sided_unbounded_count(sub);
  std::int64_t from_gcd = coprime_count(n);
  report.passed = from_faces == from_gcd;
  if (!report.passed) {
    report.witness = "two-sided unbounded cells " +
                     std::to_string(from_faces) + " != gcd count " +
                     std::to_string(from_gcd);
  }
  return report;
}

VerificationReport check_transform_invariance(const LatticeSpec& spec,
                                              const Transform2& m) {
  VerificationReport report;
  report.claim_id = "transform/" + to_string(spec);
  PointSet base = generate(spec);
  std::map<int, int> before = census(build(base));
  std::map<int, int> after = census(build(apply(m, base)));
  report.histogram = before;
  report.passed = before == after;
  if (!report.passed) {
    report.witness = "census changed from " + histogram_to_string(before) +
                     " to " + histogram_to_string(after);
  }
  return report;
}

VerificationReport compare_engines(const PointSet& s, const std::string& id) {
  VerificationReport report;
  report.claim_id = id;
  report.passed = true;

  struct FaceData {
    std::vector<CoeffPoint> lines;
    bool origin = false;
  };
  std::map<std::string, FaceData> walked;
  std::vector<FaceWalk> faces = enumerate_faces(s);
  for (const FaceWalk& walk : faces) {
    walked.emplace(polygon_key(walk.vertices),
                   FaceData{sorted_walk_lines(walk), walk.contains_origin});
  }

  Subdivision sub = build(s);
  report.histogram = census(sub);
  std::map<std::string, FaceData> oracle;
  for (const Face& face : sub.faces) {
    if (!face.bounded) {
      continue;
    }
    FaceData data;
    for (int line : face.side_lines) {
      data.lines.push_back(sub.lines[line]);
    }
    std::sort(data.lines.begin(), data.lines.end());
    data.origin = face.contains_origin;
    oracle.emplace(polygon_key(face_polygon(sub, face)), std::move(data));
  }

  auto fail = [&](const std::string& witness) {
    report.passed = false;
    report.witness = witness;
  };
  for (const auto& [key, data] : walked) {
    auto it = oracle.find(key);
    if (it == oracle.end()) {
      fail("cell only found by the walk engine: " + key);
      return report;
    }
    if (it->second.lines != data.lines) {
      fail("side lines disagree on cell " + key + ": subdivision " +
           lines_to_string(it->second.lines) + ", walk " +
           lines_to_string(data.lines));
      return report;
    }
    if (it->second.origin != data.origin) {
      fail("origin flag disagrees on cell " + key);
      return report;
    }
  }
  for (const auto& [key, data] : oracle) {
    if (walked.find(key) == walked.end()) {
      fail("cell only found by the subdivision: " + key);
      return report;
    }
  }
  if (walk_histogram(faces) != report.histogram) {
    fail("census disagrees: subdivision " +
         histogram_to_string(report.histogram) + ", walk " +
         histogram_to_string(walk_histogram(faces)));
    return report;
  }

  if (!s.empty()) {
    OriginRegion region = origin_region(s);
    const Face& home = face_containing(sub, {Rational(0), Rational(0)});
    std::vector<CoeffPoint> from_region = region.sides;
    std::sort(from_region.begin(), from_region.end());
    from_region.erase(std::unique(from_region.begin(), from_region.end()),
                      from_region.end());
    std::vector<CoeffPoint> from_face;
    for (int line : home.side_lines) {
      from_face.push_back(sub.lines[line]);
    }
    std::sort(from_face.begin(), from_face.end());
    from_face.erase(std::unique(from_face.begin(), from_face.end()),
                    from_face.end());
    if (from_region != from_face) {
      fail("origin cell sides disagree: region " +
           lines_to_string(from_region) + ", subdivision " +
           lines_to_string(from_face));
      return report;
    }
    if (region.bounded != home.bounded) {
      fail("origin cell boundedness disagrees");
      return report;
    }
  }
  return report;
}

std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

Rational random_rational(std::mt19937_64& rng, int max_abs, int max_den) {
  std::int64_t den = static_cast<std::int64_t>(
      1 + bounded_random(rng, static_cast<std::uint64_t>(max_den)));
  std::int64_t num_bound = 2 * max_abs * den + 1;
  std::int64_t num = static_cast<std::int64_t>(bounded_random(
                         rng, static_cast<std::uint64_t>(num_bound))) -
                     max_abs * den;
  return Rational(num, den);
}

PointSet random_point_set(std::mt19937_64& rng, int max_points, int max_abs,
                          int max_den) {
  while (true) {
    int target =
        2 + static_cast<int>(bounded_random(
                rng, static_cast<std::uint64_t>(max_points - 1)));
    std::vector<CoeffPoint> points;
    for (int k = 0; k < target; ++k) {
      CoeffPoint p{random_rational(rng, max_abs, max_den),
                   random_rational(rng, max_abs, max_den)};
      if (!is_valid(p)) {
        continue;
      }
      points.push_back(p);
    }
    PointSet s = PointSet::from_points(std::move(points), "random");
    if (s.size() >= 2) {
      return s;
    }
  }
}

LatticeSpec random_lattice_spec(std::mt19937_64& rng) {
  while (true) {
    LatticeSpec spec;
    std::uint64_t kind = bounded_random(rng, 6);
    spec.n = static_cast<int>(bounded_random(rng, 7));
    spec.m = static_cast<int>(bounded_random(rng, 7));
    if (kind == 0) {
      spec.n = 0;  // single column
    } else if (kind == 1) {
      spec.m = 0;  // single row
    }
    if (kind == 2) {
      // integer grid guaranteed to cover the origin strictly inside
      spec.n = 2 + static_cast<int>(bounded_random(rng, 3));
      spec.m = 2 + static_cast<int>(bounded_random(rng, 3));
      spec.dx = 1;
      spec.dy = 1;
      spec.a = Rational(-1 - static_cast<std::int64_t>(bounded_random(
                                 rng, static_cast<std::uint64_t>(spec.n - 1))));
      spec.b = Rational(-1 - static_cast<std::int64_t>(bounded_random(
                                 rng, static_cast<std::uint64_t>(spec.m - 1))));
    } else {
      spec.a = random_rational(rng, 3, 2);
      spec.b = random_rational(rng, 3, 2);
      std::int64_t qx = 1 + static_cast<std::int64_t>(bounded_random(rng, 2));
      std::int64_t qy = 1 + static_cast<std::int64_t>(bounded_random(rng, 2));
      spec.dx = Rational(1 + static_cast<std::int64_t>(
                                 bounded_random(rng, 2 * qx)),
                         qx);
      spec.dy = Rational(1 + static_cast<std::int64_t>(
                                 bounded_random(rng, 2 * qy)),
                         qy);
    }
    try {
      validate(spec);
    } catch (const std::invalid_argument&) {
      continue;  // a corner hit the origin; redraw
    }
    if (generate(spec).empty()) {
      continue;
    }
    return spec;
  }
}

Transform2 random_invertible_transform(std::mt19937_64& rng) {
  while (true) {
    Transform2 m{random_rational(rng, 2, 2), random_rational(rng, 2, 2),
                 random_rational(rng, 2, 2), random_rational(rng, 2, 2)};
    if (det(m) != 0) {
      return m;
    }
  }
}

namespace {

std::string pad3(int k) {
  std::string s = std::to_string(k);
  return std::string(3 - std::min<size_t>(3, s.size()), '0') + s;
}

}  // namespace

std::vector<VerificationReport> run_claims(const VerifyOptions& options) {
  static const std::vector<std::string> kKinds = {
      "coprime", "counterexamples", "engines", "no5gon", "rrl", "transform"};
  std::vector<std::string> selected = options.claims;
  if (selected.empty()) {
    selected = kKinds;
  }
  for (const std::string& kind : selected) {
    if (kind == "all") {
      selected = kKinds;
      break;
    }
  }
  auto wants = [&](const std::string& kind) {
    return std::find(selected.begin(), selected.end(), kind) != selected.end();
  };
  for (const std::string& kind : selected) {
    if (std::find(kKinds.begin(), kKinds.end(), kind) == kKinds.end()) {
      throw std::invalid_argument("unknown claim kind: '" + kind + "'");
    }
  }

  std::vector<VerificationReport> reports;
  auto timed = [&](const std::function<VerificationReport()>& run) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report = run();
    if (options.timing) {
      report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    }
    reports.push_back(std::move(report));
  };

  std::mt19937_64 rng(options.seed);

  if (wants("no5gon") || wants("rrl")) {
    std::vector<std::pair<std::string, LatticeSpec>> lattices;
    for (int n = 1; n <= options.grid_max; ++n) {
      lattices.emplace_back("grid-" + std::to_string(n), grid_spec(n));
    }
    for (int k = 1; k <= options.random_lattices; ++k) {
      lattices.emplace_back("random-" + pad3(k), random_lattice_spec(rng));
    }
    for (const auto& [name, spec] : lattices) {
      CellData data = make_cell_data(generate(spec));
      if (wants("no5gon")) {
        timed([&] { return no5gon_report(data, "no5gon/" + name); });
      }
      if (wants("rrl")) {
        timed([&] { return rrl_report(data, "rrl/" + name); });
      }
    }
  }
  if (wants("coprime")) {
    for (int n = 1; n <= std::min(options.grid_max, 4); ++n) {
      timed([&] { return check_coprime(n); });
    }
  }
  if (wants("counterexamples")) {
    timed([] { return check_counterexamples(); });
  }
  if (wants("transform")) {
    timed([&] {
      LatticeSpec spec{Rational(1), Rational(1), Rational(1), Rational(1), 2,
                       2};
      VerificationReport report;
      report.claim_id = "transform/lattice-3x3";
      report.passed = true;
      for (int t = 1; t <= options.transform_trials; ++t) {
        Transform2 m = random_invertible_transform(rng);
        VerificationReport one = check_transform_invariance(spec, m);
        if (report.histogram.empty()) {
          report.histogram = one.histogram;
        }
        if (!one.passed) {
          report.passed = false;
          report.witness = "trial " + std::to_string(t) + ": " + one.witness;
          break;
        }
      }
      return report;
    });
  }
  if (wants("engines")) {
    timed([&] {
      VerificationReport report;
      report.claim_id = "engines/random-sets";
      report.passed = true;
      for (int t = 1; t <= options.engine_trials; ++t) {
        PointSet s = random_point_set(rng, 7, 3, 3);
        VerificationReport one = compare_engines(s, report.claim_id);
        if (!one.passed) {
          report.passed = false;
          std::ostringstream points;
          write_point_set(points, s);
          report.witness = "trial " + std::to_string(t) + ": " + one.witness +
                           "\nset:\n" + points.str();
          break;
        }
      }
      return report;
    });
  }

  std::sort(reports.begin(), reports.end(),
            [](const VerificationReport& lhs, const VerificationReport& rhs) {
              return lhs.claim_id < rhs.claim_id;
            });
  return reports;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(
      reports.begin(), reports.end(),
      [](const VerificationReport& report) { return report.passed; });
}

std::string reports_to_text(const std::vector<VerificationReport>& reports,
                            const VerifyOptions& options) {
  std::ostringstream out;
  out << "seed: " << options.seed << "\n";
  int passed = 0;
  for (const VerificationReport& report : reports) {
    out << "\nclaim: " << report.claim_id << "\n";
    out << "status: " << (report.passed ? "PASS" : "FAIL") << "\n";
    if (!report.histogram.empty()) {
      out << "census: " << histogram_to_string(report.histogram) << "\n";
    }
    if (!report.witness.empty()) {
      out << "witness: " << report.witness << "\n";
    }
    if (options.timing && report.elapsed_ms >= 0) {
      out << "elapsed_ms: " << report.elapsed_ms << "\n";
    }
    passed += report.passed ? 1 : 0;
  }
  out << "\noverall: " << (passed == static_cast<int>(reports.size())
                               ? "PASS"
                               : "FAIL")
      << " (" << passed << "/" << reports.size() << " claims)\n";
  return out.str();
}

std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            const VerifyOptions& options) {
  nlohmann::json doc;
  doc["seed"] = options.seed;
  doc["all_passed"] = all_passed(reports);
  doc["claims"] = nlohmann::json::array();
  for (const VerificationReport& report : reports) {
    nlohmann::json claim;
    claim["id"] = report.claim_id;
    claim["passed"] = report.passed;
    claim["witness"] = report.witness;
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [sides, count] : report.histogram) {
      hist[std::to_string(sides)] = count;
    }
    claim["histogram"] = hist;
    if (options.timing && report.elapsed_ms >= 0) {
      claim["elapsed_ms"] = report.elapsed_ms;
    }
    doc["claims"].push_back(claim);
  }
  return doc.dump(2) + "\n";
}

}  // namespace linepat
