#include "linepat/cell_walk.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace linepat {

DSide flip(DSide d) { return d == DSide::left ? DSide::right : DSide::left; }

char to_char(DSide d) { return d == DSide::left ? 'L' : 'R'; }

DSide d_step(const CoeffPoint& prev, const CoeffPoint& next, DSide d) {
  switch (orientation(prev, next)) {
    case Orientation::right:
      return d;
    case Orientation::left:
      return flip(d);
    case Orientation::on:
      break;
  }
  throw std::invalid_argument(
      "d_step: points collinear with the origin (parallel lines)");
}

DSide initial_d(const CoeffPoint& p, const EuclidPoint& from,
                const EuclidPoint& to) {
  if (from == to) {
    throw std::invalid_argument("initial_d: from == to");
  }
  if (!on_line(p, from) || !on_line(p, to)) {
    throw std::invalid_argument("initial_d: endpoint off the line");
  }
  const EuclidPoint origin{Rational(0), Rational(0)};
  Rational c = cross(to - from, origin - from);
  if (c > 0) {
    return DSide::left;
  }
  if (c < 0) {
    return DSide::right;
  }
  // the line would pass through the origin, which Ax + By = 1 cannot
  throw std::logic_error("initial_d: origin on the line");
}

namespace {

// Rotation rank of a direction u about the pivot, measured from the base
// direction u0 in the given sense: the pivoted line reaches u (mod pi) at
// angle t in (0, pi), and cot(t) = num/den with den > 0 falls strictly as t
// grows. Requires u not parallel to u0.
struct RotationRank {
  Rational num;
  Rational den;
};

RotationRank rotation_rank(const Vec2& u0, const Vec2& u, bool clockwise) {
  Rational s = cross(u0, u);
  Rational c = dot(u0, u);
  assert(s != 0);
  bool wrong_side = clockwise ? s > 0 : s < 0;
  if (wrong_side) {
    s = -s;
    c = -c;
  }
  return {c, clockwise ? Rational(-s) : s};
}

// rank(a) > rank(b), i.e. direction a is reached strictly earlier.
bool reached_earlier(const RotationRank& a, const RotationRank& b) {
  return a.num * b.den > b.num * a.den;
}

bool reached_together(const RotationRank& a, const RotationRank& b) {
  return a.num * b.den == b.num * a.den;
}

}  // namespace

std::optional<NextSide> next_side(const PointSet& s, const CoeffPoint& cur,
                                  const CoeffPoint& next_of, DSide d) {
  if (!s.contains(cur) || !s.contains(next_of)) {
    throw std::invalid_argument("next_side: seed points must lie in the set");
  }
  Orientation orient = orientation(cur, next_of);
  if (orient == Orientation::on) {
    throw std::invalid_argument("next_side: seed lines are parallel");
  }
  DSide d_next = orient == Orientation::right ? d : flip(d);
  const bool clockwise = d_next == DSide::right;

  const Vec2 u0 = next_of - cur;
  // The rotation never reaches the direction of the ray through next_of:
  // that line would pass through the origin of the coefficient plane.
  const Vec2 u_stop = as_vec(next_of);
  const RotationRank stop = rotation_rank(u0, u_stop, clockwise);

  bool have_best = false;
  RotationRank best{Rational(0), Rational(1)};
  std::vector<CoeffPoint> winners;
  for (const CoeffPoint& z : s.points) {
    if (z == next_of) {
      continue;
    }
    Vec2 uz = z - next_of;
    if (cross(u0, uz) == 0) {
      continue;  // on the pivot line through cur and next_of (includes cur)
    }
    RotationRank rank = rotation_rank(u0, uz, clockwise);
    if (!reached_earlier(rank, stop)) {
      continue;  // at or past the stop direction
    }
    if (!have_best || reached_earlier(rank, best)) {
      have_best = true;
      best = rank;
      winners.assign(1, z);
    } else if (reached_together(rank, best)) {
      winners.push_back(z);
    }
  }
  if (!have_best) {
    return std::nullopt;
  }

  CoeffPoint pick = winners.front();
  if (winners.size() > 1) {
    // Several points hit at once: they are collinear on the new line m
    // through next_of. Order them along m starting at next_of and moving
    // away from m's intersection with the track M (the line through cur
    // parallel to u_stop), wrapping around to the far side. The step takes
    // the last when the labels of cur and next_of agree, else the first.
    Vec2 um = winners.front() - next_of;
    Rational denom = cross(u_stop, um);
    assert(denom != 0);
    Rational a = cross(u0, um) / denom;
    Vec2 track_hit{cur.a + a * u_stop.x, cur.b + a * u_stop.y};
    Vec2 away{next_of.a - track_hit.x, next_of.b - track_hit.y};
    std::vector<std::pair<Rational, const CoeffPoint*>> order;
    order.reserve(winners.size());
    for (const CoeffPoint& w : winners) {
      order.emplace_back(dot(w - next_of, away), &w);
    }
    std::sort(order.begin(), order.end(),
              [](const auto& lhs, const auto& rhs) {
                bool lpos = lhs.first > 0;
                bool rpos = rhs.first > 0;
                if (lpos != rpos) {
                  return lpos;  // away side first
                }
                return lhs.first < rhs.first;
              });
    pick = d == d_next ? *order.back().second : *order.front().second;
  }
  return NextSide{pick, d_next};
}

std::optional<FaceWalk> walk_face(const PointSet& s, const CoeffPoint& p1,
                                  const CoeffPoint& p2, DSide d1) {
  FaceWalk walk;
  walk.sides.push_back({p1, d1});
  CoeffPoint prev = p1;
  CoeffPoint cur = p2;
  DSide d = d1;
  const size_t step_bound = 2 * s.size();
  while (true) {
    auto ns = next_side(s, prev, cur, d);
    if (!ns) {
      return std::nullopt;  // escaped to infinity: unbounded cell
    }
    if (cur == p1 && ns->line == p2 && ns->origin_side == d1) {
      break;  // seed state recurred: cycle closed
    }
    walk.sides.push_back({cur, ns->origin_side});
    if (walk.sides.size() > step_bound) {
      return std::nullopt;  // seed pair is not a side pair of any cell
    }
    prev = cur;
    cur = ns->line;
    d = ns->origin_side;
  }
  const size_t count = walk.sides.size();
  if (count < 3) {
    return std::nullopt;
  }
  walk.vertices.reserve(count);
  for (size_t k = 0; k < count; ++k) {
    auto v = intersect(walk.sides[k].line, walk.sides[(k + 1) % count].line);
    assert(v);
    walk.vertices.push_back(*v);
  }
  const EuclidPoint origin{Rational(0), Rational(0)};
  walk.contains_origin = true;
  for (size_t k = 0; k < count; ++k) {
    const EuclidPoint& a = walk.vertices[k];
    const EuclidPoint& b = walk.vertices[(k + 1) % count];
    if (a == b || !(cross(b - a, origin - a) < 0)) {
      walk.contains_origin = false;
      break;
    }
  }
  return walk;
}

namespace {

// A closed side cycle is kept only if it bounds an actual cell: pairwise
// distinct corners forming a strictly convex clockwise polygon, labels
// matching the geometry, and no line of the set separating the corners.
bool validate_and_finish(const PointSet& s, FaceWalk& walk) {
  const size_t count = walk.sides.size();
  if (count < 3) {
    return false;
  }
  walk.vertices.clear();
  walk.vertices.reserve(count);
  for (size_t k = 0; k < count; ++k) {
    auto v = intersect(walk.sides[k].line, walk.sides[(k + 1) % count].line);
    if (!v) {
      return false;
    }
    walk.vertices.push_back(*v);
  }
  for (size_t k = 0; k < count; ++k) {
    if (walk.vertices[k] == walk.vertices[(k + 1) % count]) {
      return false;
    }
  }
  for (size_t k = 0; k < count; ++k) {
    Vec2 e1 = walk.vertices[(k + 1) % count] - walk.vertices[k];
    Vec2 e2 = walk.vertices[(k + 2) % count] - walk.vertices[(k + 1) % count];
    if (!(cross(e1, e2) < 0)) {
      return false;  // not strictly convex clockwise
    }
  }
  for (size_t k = 0; k < count; ++k) {
    const EuclidPoint& from = walk.vertices[(k + count - 1) % count];
    const EuclidPoint& to = walk.vertices[k];
    if (!on_line(walk.sides[k].line, from) ||
        !on_line(walk.sides[k].line, to)) {
      return false;
    }
    if (initial_d(walk.sides[k].line, from, to) != walk.sides[k].origin_side) {
      return false;
    }
  }
  for (const CoeffPoint& z : s.points) {
    bool pos = false;
    bool neg = false;
    for (const EuclidPoint& v : walk.vertices) {
      Rational value = line_value(z, v);
      pos = pos || value > 0;
      neg = neg || value < 0;
    }
    if (pos && neg) {
      return false;  // a line of the pattern crosses the interior
    }
  }
  const EuclidPoint origin{Rational(0), Rational(0)};
  walk.contains_origin = true;
  for (size_t k = 0; k < count; ++k) {
    const EuclidPoint& a = walk.vertices[k];
    const EuclidPoint& b = walk.vertices[(k + 1) % count];
    if (!(cross(b - a, origin - a) < 0)) {
      walk.contains_origin = false;
      break;
    }
  }
  return true;
}

void rotate_to_canonical(FaceWalk& walk) {
  size_t best = 0;
  for (size_t k = 1; k < walk.vertices.size(); ++k) {
    if (walk.vertices[k] < walk.vertices[best]) {
      best = k;
    }
  }
  std::rotate(walk.sides.begin(), walk.sides.begin() + best,
              walk.sides.end());
  std::rotate(walk.vertices.begin(), walk.vertices.begin() + best,
              walk.vertices.end());
}

std::string cycle_key(const FaceWalk& walk) {
  std::string key;
  for (const EuclidPoint& v : walk.vertices) {
    key += to_string(v);
    key += ';';
  }
  return key;
}

}  // namespace

std::vector<FaceWalk> enumerate_faces(const PointSet& s) {
  const int n = static_cast<int>(s.size());
  if (n < 2) {
    return {};
  }

  std::map<EuclidPoint, std::vector<int>> vertex_lines;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (auto x = intersect(s.points[i], s.points[j])) {
        auto& incident = vertex_lines[*x];
        incident.push_back(i);
        incident.push_back(j);
      }
    }
  }
  for (auto& [vertex, incident] : vertex_lines) {
    std::sort(incident.begin(), incident.end());
    incident.erase(std::unique(incident.begin(), incident.end()),
                   incident.end());
  }

  // A walk state is (previous line, current line, current label). Every
  // state's successor is computed at most once: orbits of a deterministic
  // map are disjoint cycles with trees hanging off them, so after a trail is
  // processed (its cycle, if any, extracted) all its states can be retired.
  auto state_key = [n](int prev, int cur, DSide d) {
    return (static_cast<size_t>(prev) * n + cur) * 2 +
           (d == DSide::right ? 1 : 0);
  };
  std::vector<char> visited(static_cast<size_t>(n) * n * 2, 0);
  // A trail longer than the whole state space must have repeated; the bound
  // exists only to keep a logic bug from spinning forever.
  const size_t trail_bound = visited.size() + 1;

  std::map<std::string, FaceWalk> found;
  struct State {
    int prev;
    int cur;
    DSide d;
  };
  for (const auto& [vertex, incident] : vertex_lines) {
    for (int a : incident) {
      for (int b : incident) {
        if (a == b) {
          continue;
        }
        for (DSide d0 : {DSide::right, DSide::left}) {
          if (visited[state_key(a, b, d0)]) {
            continue;
          }
          std::vector<State> trail;
          std::map<size_t, size_t> trail_pos;  // state key -> trail index
          State cur{a, b, d0};
          trail.push_back(cur);
          trail_pos[state_key(a, b, d0)] = 0;
          long cycle_start = -1;
          while (true) {
            auto ns =
                next_side(s, s.points[cur.prev], s.points[cur.cur], cur.d);
            if (!ns) {
              break;  // escaped to infinity
            }
            State nxt{cur.cur, s.index_of(ns->line), ns->origin_side};
            assert(nxt.cur >= 0);
            size_t key = state_key(nxt.prev, nxt.cur, nxt.d);
            if (auto it = trail_pos.find(key); it != trail_pos.end()) {
              cycle_start = static_cast<long>(it->second);
              break;  // closed a cycle inside this trail
            }
            if (visited[key] || trail.size() > trail_bound) {
              break;  // merged into already retired states
            }
            trail.push_back(nxt);
            trail_pos[key] = trail.size() - 1;
            cur = nxt;
          }
          for (const State& st : trail) {
            visited[state_key(st.prev, st.cur, st.d)] = 1;
          }
          if (cycle_start < 0) {
            continue;
          }
          FaceWalk walk;
          for (size_t k = static_cast<size_t>(cycle_start); k < trail.size();
               ++k) {
            walk.sides.push_back({s.points[trail[k].prev], trail[k].d});
          }
          if (!validate_and_finish(s, walk)) {
            continue;
          }
          rotate_to_canonical(walk);
          found.emplace(cycle_key(walk), std::move(walk));
        }
      }
    }
  }

  std::vector<FaceWalk> faces;
  faces.reserve(found.size());
  for (auto& [key, walk] : found) {
    faces.push_back(std::move(walk));
  }
  return faces;
}

int d_sign_changes(const FaceWalk& walk) {
  const size_t count = walk.sides.size();
  int changes = 0;
  for (size_t k = 0; k < count; ++k) {
    if (walk.sides[k].origin_side !=
        walk.sides[(k + 1) % count].origin_side) {
      ++changes;
    }
  }
  return changes;
}

ConvexHull convex_hull(const PointSet& s) {
  if (s.empty()) {
    throw std::invalid_argument("convex_hull: empty set");
  }
  const std::vector<CoeffPoint>& pts = s.points;  // sorted, unique
  ConvexHull hull;
  if (pts.size() <= 2) {
    hull.vertices = pts;
    return hull;
  }
  auto turn = [](const CoeffPoint& o, const CoeffPoint& a,
                 const CoeffPoint& b) { return cross(a - o, b - o); };
  std::vector<CoeffPoint> lower;
  for (const CoeffPoint& p : pts) {
    while (lower.size() >= 2 &&
           turn(lower[lower.size() - 2], lower.back(), p) <= 0) {
      lower.pop_back();
    }
    lower.push_back(p);
  }
  std::vector<CoeffPoint> upper;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (upper.size() >= 2 &&
           turn(upper[upper.size() - 2], upper.back(), *it) <= 0) {
      upper.pop_back();
    }
    upper.push_back(*it);
  }
  // counterclockwise cycle starting at the lexicographic minimum
  std::vector<CoeffPoint> ccw(lower.begin(), lower.end() - 1);
  ccw.insert(ccw.end(), upper.begin(), upper.end() - 1);
  if (ccw.size() <= 2) {
    hull.vertices = {pts.front(), pts.back()};
    return hull;
  }
  // clockwise, still starting at the lexicographic minimum
  hull.vertices.push_back(ccw.front());
  hull.vertices.insert(hull.vertices.end(), ccw.rbegin(), ccw.rend() - 1);
  return hull;
}

Containment hull_containment(const ConvexHull& hull, const CoeffPoint& q) {
  const std::vector<CoeffPoint>& hv = hull.vertices;
  if (hv.size() == 1) {
    return q == hv[0] ? Containment::boundary : Containment::outside;
  }
  if (hv.size() == 2) {
    Vec2 d = hv[1] - hv[0];
    if (cross(d, q - hv[0]) != 0) {
      return Containment::outside;
    }
    Rational t = dot(q - hv[0], d);
    return t >= 0 && t <= dot(d, d) ? Containment::boundary
                                    : Containment::outside;
  }
  bool on_edge = false;
  for (size_t k = 0; k < hv.size(); ++k) {
    const CoeffPoint& u = hv[k];
    const CoeffPoint& w = hv[(k + 1) % hv.size()];
    Rational c = cross(w - u, q - u);
    if (c > 0) {
      return Containment::outside;  // left of a clockwise edge
    }
    if (c == 0) {
      Rational t = dot(q - u, w - u);
      if (t >= 0 && t <= dot(w - u, w - u)) {
        on_edge = true;
      }
    }
  }
  return on_edge ? Containment::boundary : Containment::inside;
}

std::string to_string(OriginRegionCase c) {
  switch (c) {
    case OriginRegionCase::single_point:
      return "single-point";
    case OriginRegionCase::segment_through_origin:
      return "segment-through-origin";
    case OriginRegionCase::segment_off_origin:
      return "segment-off-origin";
    case OriginRegionCase::origin_inside_hull:
      return "origin-inside-hull";
    case OriginRegionCase::origin_outside_hull:
      return "origin-outside-hull";
    case OriginRegionCase::origin_on_hull:
      return "origin-on-hull";
  }
  return "?";
}

OriginRegion origin_region(const PointSet& s) {
  if (s.empty()) {
    throw std::invalid_argument("origin_region: empty set");
  }
  OriginRegion region;
  if (s.size() == 1) {
    region.hull_case = OriginRegionCase::single_point;
    region.sides = {s.points[0]};
    region.bounded = false;
    return region;
  }

  ConvexHull hull = convex_hull(s);
  const CoeffPoint origin{Rational(0), Rational(0)};

  if (hull.vertices.size() == 2) {
    const CoeffPoint& e1 = hull.vertices[0];  // lexicographic min
    const CoeffPoint& e2 = hull.vertices[1];
    if (cross(e1, e2) == 0) {
      // all points collinear with O: all lines parallel
      region.hull_case = OriginRegionCase::segment_through_origin;
      region.bounded = false;
      Rational t = dot(origin - e1, e2 - e1);
      if (t > 0 && t < dot(e2 - e1, e2 - e1)) {
        // O interior: the cell is the strip between the two extreme lines
        region.sides = {e1, e2};
      } else {
        // O beyond an end: only the farther extreme line bounds the cell
        Rational n1 = dot(as_vec(e1), as_vec(e1));
        Rational n2 = dot(as_vec(e2), as_vec(e2));
        region.sides = {n1 > n2 ? e1 : e2};
      }
      return region;
    }
    region.hull_case = OriginRegionCase::segment_off_origin;
    region.bounded = false;
    // clockwise around the cell: the second side sits right of the first
    if (cross(e1, e2) < 0) {
      region.sides = {e1, e2};
    } else {
      region.sides = {e2, e1};
    }
    return region;
  }

  Containment where = hull_containment(hull, origin);
  if (where == Containment::inside) {
    region.hull_case = OriginRegionCase::origin_inside_hull;
    region.bounded = true;
    region.sides = hull.vertices;  // clockwise from the lexicographic min
    return region;
  }

  if (where == Containment::boundary) {
    // O interior to a hull edge (it is never a vertex: vertices lie in S).
    region.hull_case = OriginRegionCase::origin_on_hull;
    region.bounded = false;
    const size_t count = hull.vertices.size();
    size_t edge = count;
    for (size_t k = 0; k < count; ++k) {
      const CoeffPoint& u = hull.vertices[k];
      const CoeffPoint& w = hull.vertices[(k + 1) % count];
      if (cross(w - u, origin - u) != 0) {
        continue;
      }
      Rational t = dot(origin - u, w - u);
      if (t > 0 && t < dot(w - u, w - u)) {
        edge = k;
        break;
      }
    }
    if (edge == count) {
      throw std::logic_error("origin_region: boundary edge not found");
    }
    // full clockwise fan starting just past O's edge
    for (size_t k = 1; k <= count; ++k) {
      region.sides.push_back(hull.vertices[(edge + k) % count]);
    }
    return region;
  }

  region.hull_case = OriginRegionCase::origin_outside_hull;
  region.bounded = false;
  // The two rays from O tangent to the hull: a hull vertex lies on one iff
  // every other hull vertex sits on one closed side of its origin ray.
  std::vector<std::vector<CoeffPoint>> ray_groups;
  for (const CoeffPoint& v : hull.vertices) {
    bool pos = false;
    bool neg = false;
    for (const CoeffPoint& w : hull.vertices) {
      if (w == v) {
        continue;
      }
      Rational c = cross(v, w);
      pos = pos || c > 0;
      neg = neg || c < 0;
    }
    if (pos && neg) {
      continue;
    }
    bool grouped = false;
    for (auto& group : ray_groups) {
      if (cross(group.front(), v) == 0) {
        group.push_back(v);
        grouped = true;
        break;
      }
    }
    if (!grouped) {
      ray_groups.push_back({v});
    }
  }
  if (ray_groups.size() != 2) {
    throw std::logic_error("origin_region: expected two tangent rays");
  }
  CoeffPoint r1 = ray_groups[0].front();
  CoeffPoint r2 = ray_groups[1].front();
  if (cross(r1, r2) > 0) {
    std::swap(r1, r2);  // now r2 is right of r1 seen from O
  }
  auto farthest_on_ray = [&](const CoeffPoint& ray) {
    const CoeffPoint* far = nullptr;
    Rational best;
    for (const CoeffPoint& z : s.points) {
      if (cross(z, ray) != 0 || dot(as_vec(z), as_vec(ray)) <= 0) {
        continue;
      }
      Rational along = dot(as_vec(z), as_vec(ray));
      if (!far || along > best) {
        far = &z;
        best = along;
      }
    }
    if (!far) {
      throw std::logic_error("origin_region: empty tangent ray");
    }
    return *far;
  };
  CoeffPoint first = farthest_on_ray(r1);
  CoeffPoint last = farthest_on_ray(r2);
  auto hull_index = [&](const CoeffPoint& p) {
    for (size_t k = 0; k < hull.vertices.size(); ++k) {
      if (hull.vertices[k] == p) {
        return k;
      }
    }
    throw std::logic_error("origin_region: tangent point not a hull vertex");
  };
  size_t i1 = hull_index(first);
  size_t i2 = hull_index(last);
  const size_t count = hull.vertices.size();
  for (size_t k = i1;; k = (k + 1) % count) {
    region.sides.push_back(hull.vertices[k]);
    if (k == i2) {
      break;
    }
  }
  return region;
}

}  // namespace linepat
