#pragma once

#include "linepat/point_set.hpp"

#include <optional>
#include <vector>

namespace linepat {

// Which side of a line the origin lies on, as recorded while walking a cell
// clockwise. For a bounded cell every side carries such a label; the cell
// containing the origin is exactly the one labelled right all the way round.
enum class DSide { left, right };

DSide flip(DSide d);
char to_char(DSide d);  // 'L' / 'R'

// One side of a walked cell: the coefficient point naming the line, and the
// origin side label.
struct WalkSide {
  CoeffPoint line;
  DSide origin_side;

  friend bool operator==(const WalkSide&, const WalkSide&) = default;
};

// A bounded cell recovered by walking: sides in clockwise order, and the
// corner cycle with vertices[k] = line(sides[k]) ^ line(sides[k+1]), so the
// side on line(sides[k]) runs from vertices[k-1] to vertices[k].
struct FaceWalk {
  std::vector<WalkSide> sides;
  std::vector<EuclidPoint> vertices;
  bool contains_origin = false;
};

// Label transport along the walk: the next side keeps the label iff its
// coefficient point lies right of the current one as seen from the origin.
// Throws std::invalid_argument when prev and next are collinear with the
// origin (parallel lines never bound consecutive sides of a cell).
DSide d_step(const CoeffPoint& prev, const CoeffPoint& next, DSide d);

// Label of the side on line(p) traversed from `from` to `to` (both on the
// line): whether the origin is left or right of the direction of travel.
// Throws std::invalid_argument when from == to or either is off the line.
DSide initial_d(const CoeffPoint& p, const EuclidPoint& from,
                const EuclidPoint& to);

struct NextSide {
  CoeffPoint line;   // the side after next_of
  DSide origin_side;  // the label of next_of, transported from cur
};

// One step of the clockwise cell walk. Given consecutive sides cur and
// next_of (non-parallel, both in s) with cur labelled d, finds the side
// following next_of: among the lines through points of s not on
// line(cur, next_of) in the coefficient plane, take the first one reached by
// rotating line(cur, next_of) about next_of -- clockwise when next_of's
// label is right, counterclockwise when left -- stopping strictly before the
// direction of the ray from the origin through next_of. Returns nullopt when
// no line is reached (the walk escapes to infinity: unbounded cell). When
// several points of s are reached at once they are ordered along the new
// line moving away from its intersection with the rotation track and
// wrapping; the step takes the last of them when the labels of cur and
// next_of agree and the first otherwise.
std::optional<NextSide> next_side(const PointSet& s, const CoeffPoint& cur,
                                  const CoeffPoint& next_of, DSide d);

// Repeats next_side from the seed state (p1, p2, d1) until the seed state
// recurs, producing the full clockwise side cycle, or returns nullopt when
// the walk escapes to infinity or exceeds a step bound of 2*|s| without
// closing (possible for seed pairs that are not consecutive sides of any
// cell).
std::optional<FaceWalk> walk_face(const PointSet& s, const CoeffPoint& p1,
                                  const CoeffPoint& p2, DSide d1);

// All bounded cells of the pattern of s, walked via next_side from every
// ordered pair of lines through every arrangement vertex, deduplicated, and
// returned with canonically rotated cycles (lexicographically smallest
// vertex cycle first) in a deterministic order.
std::vector<FaceWalk> enumerate_faces(const PointSet& s);

// Number of cyclic sign changes in the side labels of a walk. Always 2 for
// a bounded cell not containing the origin; 0 (all right) for the cell
// containing it.
int d_sign_changes(const FaceWalk& walk);

// Convex hull of the point set in the coefficient plane, clockwise, corner
// vertices only. Degenerate hulls keep 1 (single point) or 2 (segment
// endpoints) entries.
struct ConvexHull {
  std::vector<CoeffPoint> vertices;  // clockwise
};

ConvexHull convex_hull(const PointSet& s);

enum class Containment { inside, boundary, outside };
Containment hull_containment(const ConvexHull& hull, const CoeffPoint& q);

// Which of the six shapes the hull/origin configuration takes; determines
// how the boundary of the cell containing the origin is produced.
enum class OriginRegionCase {
  single_point,           // S is one point
  segment_through_origin,  // degenerate hull collinear with O
  segment_off_origin,      // degenerate hull, O off its line
  origin_inside_hull,
  origin_outside_hull,
  origin_on_hull,  // O on the hull boundary (never a hull vertex)
};

std::string to_string(OriginRegionCase c);

// The cell of the pattern containing the origin, described by the
// coefficient points of its sides in clockwise order around the cell. For
// the bounded case the cycle wraps; otherwise the first and last sides are
// the unbounded ones.
struct OriginRegion {
  std::vector<CoeffPoint> sides;
  bool bounded = false;
  OriginRegionCase hull_case = OriginRegionCase::single_point;
};

OriginRegion origin_region(const PointSet& s);

}  // namespace linepat
