// Acceptance checks for the line-pattern engine. Each criterion prints one
// [PASS]/[FAIL] line; the process exits nonzero when any criterion fails.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "linepat/cell_walk.hpp"
#include "linepat/lattice.hpp"
#include "linepat/subdivision.hpp"
#include "linepat/verify.hpp"

using namespace linepat;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

Outcome pass() { return {true, ""}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

std::string histogram_text(const std::map<int, int>& hist) {
  std::string out = "{";
  for (const auto& [k, v] : hist) {
    out += std::to_string(k) + ":" + std::to_string(v) + " ";
  }
  return out + "}";
}

// ---- C1: censuses of the centered square grids ------------------------

Outcome c1_grid_censuses() {
  const std::map<int, std::map<int, int>> expected = {
      {1, {{3, 12}, {4, 1}}},
      {2, {{3, 92}, {4, 61}}},
      {3, {{3, 364}, {4, 289}}},
      {4, {{3, 988}, {4, 893}}},
  };
  for (const auto& [n, want] : expected) {
    std::map<int, int> got = census(build(generate(grid_spec(n))));
    if (got != want) {
      return fail("grid " + std::to_string(n) + " census " +
                  histogram_text(got) + " != " + histogram_text(want));
    }
    for (const auto& [sides, count] : got) {
      if (sides != 3 && sides != 4) {
        return fail("grid " + std::to_string(n) + " has a " +
                    std::to_string(sides) + "-sided cell");
      }
    }
  }
  return pass();
}

// ---- C2: fifty rectangular lattices ------------------------------------

Outcome c2_fifty_lattices() {
  std::vector<LatticeSpec> specs = {
      {Rational(1), Rational(2), Rational(1), Rational(1), 4, 0},
      {Rational(2), Rational(-1), Rational(1), Rational(1), 0, 3},
      {Rational(1), Rational(1), Rational(1), Rational(1), 0, 0},
      {Rational(-2), Rational(-2), Rational(1), Rational(1), 4, 4},
      {Rational(-1, 2), Rational(-1), Rational(1, 2), Rational(1, 2), 3, 4},
  };
  std::mt19937_64 rng(kDefaultSeed);
  while (specs.size() < 50) {
    specs.push_back(random_lattice_spec(rng));
  }
  for (const LatticeSpec& spec : specs) {
    VerificationReport no5 = check_no_5gon(spec);
    if (!no5.passed) {
      return fail(to_string(spec) + ": " + no5.witness);
    }
    VerificationReport rrl = check_rrl(spec);
    if (!rrl.passed) {
      return fail(to_string(spec) + ": " + rrl.witness);
    }
  }
  return pass();
}

// ---- C3: the pentagon counterexample -----------------------------------

Outcome c3_pentagon() {
  std::map<int, int> want = {{3, 12}, {4, 5}, {5, 1}};
  std::map<int, int> oracle = census(build(pentagon_counterexample()));
  if (oracle != want) {
    return fail("subdivision census " + histogram_text(oracle));
  }
  std::map<int, int> walked;
  for (const FaceWalk& walk : enumerate_faces(pentagon_counterexample())) {
    ++walked[static_cast<int>(walk.sides.size())];
  }
  if (walked != want) {
    return fail("walk census " + histogram_text(walked));
  }
  return pass();
}

// ---- C4: the triangle family climbs one side per step ------------------

Outcome c4_triangle_family() {
  PointSet f2 = fibonacci_triangle(2);
  if (f2.size() != 4 || !f2.contains({Rational(2), Rational(2)})) {
    return fail("triangle lattice n=2 is not the expected four points");
  }
  std::map<int, int> h2 = census(build(f2));
  if (h2 != std::map<int, int>{{3, 2}, {4, 1}}) {
    return fail("n=2 census " + histogram_text(h2));
  }
  for (int n : {3, 4}) {
    std::map<int, int> hist = census(build(fibonacci_triangle(n)));
    int max_sides = hist.empty() ? 0 : hist.rbegin()->first;
    if (max_sides != n + 2) {
      return fail("n=" + std::to_string(n) + " peaks at " +
                  std::to_string(max_sides) + " sides");
    }
  }
  // The pentagonal cell of n=3 must show a triple run of equal labels.
  if (check_rrl(fibonacci_triangle(3), "fib3").passed) {
    return fail("no cell of the n=3 triangle has three equal labels in a row");
  }
  return pass();
}

// ---- C5: two-sided unbounded cells vs primitive directions -------------

Outcome c5_coprime() {
  const std::map<int, std::int64_t> expected = {
      {1, 8}, {2, 16}, {3, 32}, {4, 48}};
  for (const auto& [n, want] : expected) {
    std::int64_t from_gcd = coprime_count(n);
    int from_faces = two_sided_unbounded_count(build(generate(grid_spec(n))));
    if (from_gcd != want || from_faces != want) {
      return fail("grid " + std::to_string(n) + ": faces " +
                  std::to_string(from_faces) + ", gcd " +
                  std::to_string(from_gcd) + ", expected " +
                  std::to_string(want));
    }
  }
  return pass();
}

// ---- C6: the two engines agree ------------------------------------------

Outcome c6_engines() {
  std::set<OriginRegionCase> seen;
  std::vector<PointSet> crafted = {
      PointSet::from_points({{Rational(2), Rational(3)}}),
      PointSet::from_points(
          {{Rational(1), Rational(1)}, {Rational(-2), Rational(-2)}}),
      PointSet::from_points(
          {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}),
      generate(grid_spec(1)),
      PointSet::from_points({{Rational(1), Rational(1)},
                             {Rational(1), Rational(2)},
                             {Rational(2), Rational(1)},
                             {Rational(2), Rational(2)}}),
      PointSet::from_points({{Rational(-1), Rational(0)},
                             {Rational(1), Rational(0)},
                             {Rational(0), Rational(1)}}),
  };
  for (size_t k = 0; k < crafted.size(); ++k) {
    seen.insert(origin_region(crafted[k]).hull_case);
    VerificationReport report =
        compare_engines(crafted[k], "crafted-" + std::to_string(k));
    if (!report.passed) {
      return fail(report.claim_id + ": " + report.witness);
    }
  }
  if (seen.size() != 6) {
    return fail("only " + std::to_string(seen.size()) +
                " of the six origin shapes were exercised");
  }
  std::mt19937_64 rng(kDefaultSeed);
  for (int trial = 0; trial < 200; ++trial) {
    PointSet s = random_point_set(rng, 7, 3, 3);
    VerificationReport report =
        compare_engines(s, "random-" + std::to_string(trial));
    if (!report.passed) {
      std::ostringstream points;
      write_point_set(points, s);
      return fail(report.claim_id + ": " + report.witness + " on\n" +
                  points.str());
    }
  }
  return pass();
}

// ---- C7: structural invariants ------------------------------------------

Outcome c7_invariants() {
  std::mt19937_64 rng(kDefaultSeed);

  // Every bounded cell carries zero (origin cell) or two label changes.
  for (int trial = 0; trial < 25; ++trial) {
    PointSet s = random_point_set(rng, 6, 3, 2);
    int origin_cells = 0;
    for (const FaceWalk& walk : enumerate_faces(s)) {
      int changes = d_sign_changes(walk);
      if (walk.contains_origin) {
        ++origin_cells;
        if (changes != 0) {
          return fail("origin cell with " + std::to_string(changes) +
                      " label changes");
        }
      } else if (changes != 2) {
        return fail("cell with " + std::to_string(changes) +
                    " label changes");
      }
    }
    if (origin_cells > 1) {
      return fail("several cells claim the origin");
    }
  }

  // Distance duality: |P|^2 * dist(O, line(P))^2 == 1.
  for (int trial = 0; trial < 100; ++trial) {
    Rational a = random_rational(rng, 4, 3);
    Rational b = random_rational(rng, 4, 3);
    if (a == 0 && b == 0) {
      continue;
    }
    if (dist_product({a, b}) != 1) {
      return fail("distance product off 1 at (" + to_string(a) + "," +
                  to_string(b) + ")");
    }
  }

  // A pattern vertex satisfies the incidence equation of both its lines.
  for (int trial = 0; trial < 100; ++trial) {
    PointSet s = random_point_set(rng, 2, 3, 3);
    const CoeffPoint& p = s.points[0];
    const CoeffPoint& q = s.points[1];
    if (cross(p, q) == 0) {
      continue;
    }
    EuclidPoint x = *intersect(p, q);
    if (p.a * x.x + p.b * x.y != 1 || q.a * x.x + q.b * x.y != 1) {
      return fail("vertex misses its defining lines");
    }
  }

  // The census of a lattice pattern is invariant under invertible maps.
  LatticeSpec spec{Rational(1), Rational(1), Rational(1), Rational(1), 2, 2};
  for (int trial = 0; trial < 20; ++trial) {
    VerificationReport report =
        check_transform_invariance(spec, random_invertible_transform(rng));
    if (!report.passed) {
      return fail(report.witness);
    }
  }

  // No lattice cell, origin cell aside, has three equal labels in a row.
  for (const FaceWalk& walk : enumerate_faces(generate(grid_spec(2)))) {
    if (walk.contains_origin) {
      continue;
    }
    size_t count = walk.sides.size();
    for (size_t k = 0; k < count; ++k) {
      if (walk.sides[k].origin_side == walk.sides[(k + 1) % count].origin_side &&
          walk.sides[k].origin_side == walk.sides[(k + 2) % count].origin_side) {
        return fail("triple label run on a grid cell");
      }
    }
  }
  return pass();
}

// ---- C8: byte-deterministic output --------------------------------------

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

int run_cli(const std::string& args, const std::filesystem::path& stdout_to) {
  std::string cmd = std::string(LINEPAT_CLI_PATH) + " " + args + " > " +
                    stdout_to.string() + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome c8_determinism() {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "linepat_acceptance";
  fs::create_directories(dir);
  fs::path input = dir / "grid1.txt";
  {
    std::ofstream out(input);
    write_point_set(out, generate(grid_spec(1)));
  }
  struct Run {
    std::string name;
    std::string args;
  };
  const std::vector<Run> runs = {
      {"render", "render " + input.string() + " --shade 3 --labels"},
      {"verify",
       "verify --grid-max 1 --lattices 2 --engine-trials 5 "
       "--transform-trials 3 --json"},
      {"census", "census " + input.string() + " --json"},
      {"gen", "gen random --count 6 --seed 99"},
  };
  for (const Run& run : runs) {
    fs::path first = dir / (run.name + ".1");
    fs::path second = dir / (run.name + ".2");
    int rc1 = run_cli(run.args, first);
    int rc2 = run_cli(run.args, second);
    if (rc1 != 0 || rc2 != 0) {
      return fail(run.name + " exited with " + std::to_string(rc1) + "/" +
                  std::to_string(rc2));
    }
    std::string a = slurp(first);
    if (a.empty() || a != slurp(second)) {
      return fail(run.name + " output differs between identical runs");
    }
  }
  return pass();
}

}  // namespace

int main() {
  struct Criterion {
    std::string id;
    std::string title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"C1", "square grid censuses match the frozen 3/4-sided counts",
       c1_grid_censuses},
      {"C2", "fifty lattice instances stay within the 3/4-gon and label rules",
       c2_fifty_lattices},
      {"C3", "the unequally spaced 3x3 set yields exactly one pentagonal cell",
       c3_pentagon},
      {"C4", "the triangle family peaks at an (n+2)-sided cell for n=2,3,4",
       c4_triangle_family},
      {"C5", "two-sided unbounded cells count the coprime directions",
       c5_coprime},
      {"C6", "walk engine and subdivision agree on crafted and random sets",
       c6_engines},
      {"C7", "label, duality and transform invariants hold",
       c7_invariants},
      {"C8", "CLI output is byte identical across repeated runs",
       c8_determinism},
  };
  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = fail(std::string("exception: ") + e.what());
    }
    if (outcome.passed) {
      std::cout << "[PASS] " << criterion.id << " " << criterion.title
                << "\n";
    } else {
      ++failures;
      std::cout << "[FAIL] " << criterion.id << " " << criterion.title
                << ": " << outcome.detail << "\n";
    }
  }
  std::cout << "acceptance: " << (criteria.size() - failures) << "/"
            << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
