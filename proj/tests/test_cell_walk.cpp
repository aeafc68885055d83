#include <doctest.h>

#include <random>
#include <set>

#include "linepat/cell_walk.hpp"
#include "linepat/lattice.hpp"
#include "linepat/verify.hpp"

using namespace linepat;

namespace {

PointSet make_set(std::vector<CoeffPoint> points) {
  return PointSet::from_points(std::move(points));
}

const CoeffPoint e1{Rational(1), Rational(0)};
const CoeffPoint e2{Rational(0), Rational(1)};
const CoeffPoint diag{Rational(1), Rational(1)};

}  // namespace

TEST_CASE("d_step keeps the label right of the ray and flips left of it") {
  // (0,1) is left of the ray through (1,0), so the label flips.
  CHECK(d_step(e1, e2, DSide::right) == DSide::left);
  CHECK(d_step(e1, e2, DSide::left) == DSide::right);
  // (1,0) is right of the ray through (0,1), so the label is kept.
  CHECK(d_step(e2, e1, DSide::right) == DSide::right);
  CHECK_THROWS_AS(
      d_step(e1, {Rational(2), Rational(0)}, DSide::right),
      std::invalid_argument);
}

TEST_CASE("d_step symmetry identities") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    PointSet s = random_point_set(rng, 4, 3, 2);
    for (const CoeffPoint& p : s.points) {
      for (const CoeffPoint& q : s.points) {
        if (p == q || cross(p, q) == 0) {
          continue;
        }
        for (DSide d : {DSide::left, DSide::right}) {
          CHECK(d_step(p, q, flip(d)) == flip(d_step(p, q, d)));
          CHECK(d_step(q, p, d) == flip(d_step(p, q, d)));
        }
      }
    }
  }
}

TEST_CASE("initial_d reads the origin side of a directed segment") {
  // Walking x = 1 downward from (1,1) to (1,0) has the origin on the right.
  CHECK(initial_d(e1, {Rational(1), Rational(1)}, {Rational(1), Rational(0)}) ==
        DSide::right);
  CHECK(initial_d(e1, {Rational(1), Rational(0)}, {Rational(1), Rational(1)}) ==
        DSide::left);
  CHECK_THROWS_AS(
      initial_d(e1, {Rational(1), Rational(1)}, {Rational(1), Rational(1)}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      initial_d(e1, {Rational(0), Rational(0)}, {Rational(1), Rational(1)}),
      std::invalid_argument);
}

TEST_CASE("next_side walks the three line triangle") {
  PointSet s = make_set({e1, e2, diag});
  auto step = next_side(s, e1, diag, DSide::right);
  REQUIRE(step.has_value());
  CHECK(step->line == e2);
  CHECK(step->origin_side == DSide::left);

  auto closing = next_side(s, diag, e2, DSide::left);
  REQUIRE(closing.has_value());
  CHECK(closing->line == e1);
  CHECK(closing->origin_side == DSide::right);
}

TEST_CASE("next_side validates its seed pair") {
  PointSet s = make_set({e1, e2, diag});
  CHECK_THROWS_AS(
      next_side(s, e1, {Rational(5), Rational(5)}, DSide::right),
      std::invalid_argument);
  PointSet parallels =
      make_set({e1, {Rational(2), Rational(0)}, e2});
  CHECK_THROWS_AS(
      next_side(parallels, e1, {Rational(2), Rational(0)}, DSide::right),
      std::invalid_argument);
}

TEST_CASE("next_side reports escape to infinity as empty") {
  // Rotating from the line pair ((0,1),(1,0)) the only remaining point
  // (2,0) sits exactly on the stopping ray, so nothing is reached.
  PointSet s = make_set({e1, {Rational(2), Rational(0)}, e2});
  CHECK_FALSE(next_side(s, e2, e1, DSide::right).has_value());
  CHECK_FALSE(next_side(s, e2, e1, DSide::left).has_value());
}

TEST_CASE("walk_face closes the triangle with transported labels") {
  PointSet s = make_set({e1, e2, diag});
  auto walk = walk_face(s, e1, diag, DSide::right);
  REQUIRE(walk.has_value());
  REQUIRE(walk->sides.size() == 3);
  CHECK(walk->sides[0] == WalkSide{e1, DSide::right});
  CHECK(walk->sides[1] == WalkSide{diag, DSide::left});
  CHECK(walk->sides[2] == WalkSide{e2, DSide::right});
  REQUIRE(walk->vertices.size() == 3);
  CHECK(walk->vertices[0] == EuclidPoint{Rational(1), Rational(0)});
  CHECK(walk->vertices[1] == EuclidPoint{Rational(0), Rational(1)});
  CHECK(walk->vertices[2] == EuclidPoint{Rational(1), Rational(1)});
  CHECK_FALSE(walk->contains_origin);
  CHECK(d_sign_changes(*walk) == 2);
}

TEST_CASE("walk_face finds the origin square of the unit grid") {
  PointSet s = generate(grid_spec(1));
  auto walk = walk_face(s, {Rational(1), Rational(1)},
                        {Rational(1), Rational(-1)}, DSide::right);
  REQUIRE(walk.has_value());
  CHECK(walk->sides.size() == 4);
  CHECK(walk->contains_origin);
  CHECK(d_sign_changes(*walk) == 0);
  for (const WalkSide& side : walk->sides) {
    CHECK(side.origin_side == DSide::right);
  }
}

TEST_CASE("walk_face returns empty for seeds of unbounded cells") {
  PointSet s = make_set({e1, {Rational(2), Rational(0)}, e2});
  CHECK_FALSE(walk_face(s, e2, e1, DSide::left).has_value());
}

TEST_CASE("enumerate_faces matches the known censuses") {
  CHECK(enumerate_faces(make_set({e1, e2, diag})).size() == 1);

  std::map<int, int> hist;
  for (const FaceWalk& walk : enumerate_faces(generate(grid_spec(1)))) {
    ++hist[static_cast<int>(walk.sides.size())];
  }
  CHECK(hist == std::map<int, int>{{3, 12}, {4, 1}});

  CHECK(enumerate_faces(make_set({e1, {Rational(2), Rational(0)}})).empty());
  CHECK(enumerate_faces(make_set({e1})).empty());
}

TEST_CASE("every enumerated cell has zero or two label changes") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    PointSet s = random_point_set(rng, 6, 3, 2);
    int origin_cells = 0;
    for (const FaceWalk& walk : enumerate_faces(s)) {
      int changes = d_sign_changes(walk);
      if (walk.contains_origin) {
        CHECK(changes == 0);
        ++origin_cells;
      } else {
        CHECK(changes == 2);
      }
    }
    CHECK(origin_cells <= 1);
  }
}

TEST_CASE("convex_hull is clockwise from the smallest vertex") {
  ConvexHull hull = convex_hull(generate(grid_spec(1)));
  REQUIRE(hull.vertices.size() == 4);
  CHECK(hull.vertices[0] == CoeffPoint{Rational(-1), Rational(-1)});
  CHECK(hull.vertices[1] == CoeffPoint{Rational(-1), Rational(1)});
  CHECK(hull.vertices[2] == CoeffPoint{Rational(1), Rational(1)});
  CHECK(hull.vertices[3] == CoeffPoint{Rational(1), Rational(-1)});

  ConvexHull single = convex_hull(make_set({{Rational(2), Rational(3)}}));
  CHECK(single.vertices.size() == 1);

  ConvexHull collinear = convex_hull(make_set({{Rational(1), Rational(1)},
                                               {Rational(2), Rational(2)},
                                               {Rational(3), Rational(3)}}));
  REQUIRE(collinear.vertices.size() == 2);
  CHECK(collinear.vertices[0] == CoeffPoint{Rational(1), Rational(1)});
  CHECK(collinear.vertices[1] == CoeffPoint{Rational(3), Rational(3)});
}

TEST_CASE("hull_containment classifies interior, boundary and outside") {
  ConvexHull hull = convex_hull(generate(grid_spec(1)));
  CHECK(hull_containment(hull, {Rational(1, 2), Rational(0)}) ==
        Containment::inside);
  CHECK(hull_containment(hull, {Rational(1), Rational(0)}) ==
        Containment::boundary);
  CHECK(hull_containment(hull, {Rational(1), Rational(1)}) ==
        Containment::boundary);
  CHECK(hull_containment(hull, {Rational(2), Rational(0)}) ==
        Containment::outside);
}

TEST_CASE("origin_region covers all six hull shapes") {
  SUBCASE("single point") {
    OriginRegion r = origin_region(make_set({{Rational(2), Rational(3)}}));
    CHECK(r.hull_case == OriginRegionCase::single_point);
    CHECK_FALSE(r.bounded);
    CHECK(r.sides ==
          std::vector<CoeffPoint>{{Rational(2), Rational(3)}});
  }
  SUBCASE("segment through the origin, origin between the endpoints") {
    OriginRegion r = origin_region(
        make_set({{Rational(1), Rational(1)}, {Rational(-2), Rational(-2)}}));
    CHECK(r.hull_case == OriginRegionCase::segment_through_origin);
    CHECK_FALSE(r.bounded);
    CHECK(r.sides == std::vector<CoeffPoint>{{Rational(-2), Rational(-2)},
                                             {Rational(1), Rational(1)}});
  }
  SUBCASE("segment through the origin, origin outside the segment") {
    OriginRegion r = origin_region(
        make_set({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}}));
    CHECK(r.hull_case == OriginRegionCase::segment_through_origin);
    // Only the closer line (the farther coefficient point) is a side.
    CHECK(r.sides ==
          std::vector<CoeffPoint>{{Rational(2), Rational(2)}});
  }
  SUBCASE("segment missing the origin") {
    OriginRegion r = origin_region(make_set({e1, e2}));
    CHECK(r.hull_case == OriginRegionCase::segment_off_origin);
    CHECK_FALSE(r.bounded);
    CHECK(r.sides == std::vector<CoeffPoint>{e2, e1});
  }
  SUBCASE("origin interior to the hull gives a bounded cell") {
    OriginRegion r = origin_region(generate(grid_spec(1)));
    CHECK(r.hull_case == OriginRegionCase::origin_inside_hull);
    CHECK(r.bounded);
    CHECK(r.sides == std::vector<CoeffPoint>{{Rational(-1), Rational(-1)},
                                             {Rational(-1), Rational(1)},
                                             {Rational(1), Rational(1)},
                                             {Rational(1), Rational(-1)}});
  }
  SUBCASE("origin outside the hull uses the tangent arc") {
    OriginRegion r = origin_region(make_set({{Rational(1), Rational(1)},
                                             {Rational(1), Rational(2)},
                                             {Rational(2), Rational(1)},
                                             {Rational(2), Rational(2)}}));
    CHECK(r.hull_case == OriginRegionCase::origin_outside_hull);
    CHECK_FALSE(r.bounded);
    CHECK(r.sides == std::vector<CoeffPoint>{{Rational(1), Rational(2)},
                                             {Rational(2), Rational(2)},
                                             {Rational(2), Rational(1)}});
  }
  SUBCASE("tangent ray holding a full hull edge") {
    OriginRegion r = origin_region(make_set({{Rational(1), Rational(1)},
                                             {Rational(2), Rational(2)},
                                             {Rational(1), Rational(2)}}));
    CHECK(r.hull_case == OriginRegionCase::origin_outside_hull);
    CHECK(r.sides == std::vector<CoeffPoint>{{Rational(1), Rational(2)},
                                             {Rational(2), Rational(2)}});
  }
  SUBCASE("origin on the hull boundary") {
    OriginRegion r = origin_region(
        make_set({{Rational(-1), Rational(0)}, e1, e2}));
    CHECK(r.hull_case == OriginRegionCase::origin_on_hull);
    CHECK_FALSE(r.bounded);
    CHECK(r.sides == std::vector<CoeffPoint>{{Rational(-1), Rational(0)},
                                             {Rational(0), Rational(1)},
                                             {Rational(1), Rational(0)}});
  }
  SUBCASE("empty set is rejected") {
    PointSet empty;
    CHECK_THROWS_AS(origin_region(empty), std::invalid_argument);
  }
}

TEST_CASE("origin_region names the same lines as the enumerated origin cell") {
  std::mt19937_64 rng(37);
  int bounded_seen = 0;
  for (int trial = 0; trial < 30; ++trial) {
    PointSet s = random_point_set(rng, 7, 3, 2);
    OriginRegion region = origin_region(s);
    if (!region.bounded) {
      continue;
    }
    ++bounded_seen;
    std::set<CoeffPoint> expected;
    bool found = false;
    for (const FaceWalk& walk : enumerate_faces(s)) {
      if (!walk.contains_origin) {
        continue;
      }
      found = true;
      for (const WalkSide& side : walk.sides) {
        expected.insert(side.line);
      }
    }
    REQUIRE(found);
    std::set<CoeffPoint> got(region.sides.begin(), region.sides.end());
    CHECK(got == expected);
  }
  CHECK(bounded_seen > 0);
}
