#pragma once

#include "linepat/cell_walk.hpp"
#include "linepat/lattice.hpp"
#include "linepat/subdivision.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace linepat {

struct VerificationReport {
  std::string claim_id;
  bool passed = false;
  std::string witness;          // failure evidence, empty when passed
  std::map<int, int> histogram;  // bounded-cell census when applicable
  std::int64_t elapsed_ms = -1;  // set by the runner when timing is on
};

// Rectangular lattice patterns have only 3- and 4-sided bounded cells, and
// the cell containing the origin has at most four sides.
VerificationReport check_no_5gon(const LatticeSpec& spec);
VerificationReport check_no_5gon(const PointSet& s, const std::string& id);

// No bounded cell other than the origin cell carries three cyclically
// consecutive equal side labels (rectangular lattices).
VerificationReport check_rrl(const LatticeSpec& spec);
VerificationReport check_rrl(const PointSet& s, const std::string& id);

// The unequal-spacing 3x3 set has a pentagonal cell, and the triangle family
// produces (n+2)-gons for n = 2, 3, 4: the lattice hypotheses are sharp.
VerificationReport check_counterexamples();

// Two independent counts of the two-sided unbounded cells of the grid
// pattern: the subdivision and the gcd enumeration. 1 <= n <= 4.
VerificationReport check_coprime(int n);

// The census of a lattice pattern is unchanged by an invertible linear map
// of the coefficient plane.
VerificationReport check_transform_invariance(const LatticeSpec& spec,
                                              const Transform2& m);

// Full cross-check of the walk engine against the subdivision on one set:
// identical bounded cells (corner cycles, side lines, origin flags),
// identical census, and origin_region matching the subdivision's origin
// face.
VerificationReport compare_engines(const PointSet& s, const std::string& id);

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  int grid_max = 4;
  int random_lattices = 10;
  int engine_trials = 50;
  int transform_trials = 20;
  bool timing = false;
  std::vector<std::string> claims;  // kinds to run; empty means all
};

// Runs the selected claim kinds ("no5gon", "rrl", "coprime",
// "counterexamples", "transform", "engines") and returns reports sorted by
// claim id.
std::vector<VerificationReport> run_claims(const VerifyOptions& options);
bool all_passed(const std::vector<VerificationReport>& reports);

std::string reports_to_text(const std::vector<VerificationReport>& reports,
                            const VerifyOptions& options);
std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            const VerifyOptions& options);

// Deterministic, platform-independent helpers for seeded randomness (the
// distributions in <random> are implementation-defined, the raw engine is
// not).
std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t bound);
Rational random_rational(std::mt19937_64& rng, int max_abs, int max_den);
PointSet random_point_set(std::mt19937_64& rng, int max_points, int max_abs,
                          int max_den);
// Mixes in degenerate rows/columns and origin-covering grids.
LatticeSpec random_lattice_spec(std::mt19937_64& rng);
Transform2 random_invertible_transform(std::mt19937_64& rng);

}  // namespace linepat
