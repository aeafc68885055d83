#include "linepat/subdivision.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace linepat {

namespace {

// Counterclockwise angle class of a direction: 0 = +x axis, 1 = open upper
// half-plane, 2 = -x axis, 3 = open lower half-plane.
int angle_class(const Vec2& d) {
  if (d.y == 0) {
    return d.x > 0 ? 0 : 2;
  }
  return d.y > 0 ? 1 : 3;
}

// Strict "angle(a) < angle(b)" with angles measured counterclockwise from
// the +x axis in [0, 2*pi). Equal directions compare false both ways.
bool ccw_angle_less(const Vec2& a, const Vec2& b) {
  int ca = angle_class(a);
  int cb = angle_class(b);
  if (ca != cb) {
    return ca < cb;
  }
  if (ca == 0 || ca == 2) {
    return false;
  }
  return cross(a, b) > 0;
}

// Turn rank when arriving with direction d_in and leaving along g:
// 0 = strict clockwise (right) turn, 1 = reversal, 2 = strict
// counterclockwise turn, 3 = straight on. The face-on-the-right successor is
// the most clockwise departure, i.e. the minimum under (class, then falling
// clockwise order within the class).
int turn_class(const Vec2& d_in, const Vec2& g) {
  Rational c = cross(d_in, g);
  if (c < 0) {
    return 0;
  }
  if (c > 0) {
    return 2;
  }
  return dot(d_in, g) < 0 ? 1 : 3;
}

bool turn_before(const Vec2& d_in, const Vec2& g1, const Vec2& g2) {
  int c1 = turn_class(d_in, g1);
  int c2 = turn_class(d_in, g2);
  if (c1 != c2) {
    return c1 < c2;
  }
  // Within a strict side of d_in, clockwise-most first: g1 leads when g2
  // is counterclockwise of it inside that half-plane.
  return cross(g1, g2) > 0;
}

struct InfinityEvent {
  Vec2 dir;
  int line = -1;
  int exit_half_edge = -1;
};

// Signed offset comparison for parallel co-oriented events. Writing the line
// of P with unit left-normal n relative to `dir` as { x : <x, n> = c }, the
// offset is c = -1/|P| when dir agrees with the canonical direction (-B, A)
// and +1/|P| otherwise. Returns true when line pi has strictly greater
// offset than line pj; exact despite the square roots because only
// reciprocals of norms of a fixed sign are compared.
bool offset_greater(const CoeffPoint& pi, const CoeffPoint& pj,
                    const Vec2& dir) {
  bool neg_i = dot(line_direction(pi), dir) > 0;
  bool neg_j = dot(line_direction(pj), dir) > 0;
  if (neg_i != neg_j) {
    return neg_j;  // the positive offset is the greater one
  }
  Rational ni = pi.a * pi.a + pi.b * pi.b;
  Rational nj = pj.a * pj.a + pj.b * pj.b;
  return neg_i ? ni > nj : ni < nj;
}

}  // namespace

Subdivision build(const PointSet& s) {
  Subdivision sub;
  sub.lines = s.points;
  const int n = static_cast<int>(sub.lines.size());
  if (n == 0) {
    return sub;
  }

  // Vertices: pairwise intersections, coincident ones merged by exact
  // coordinate comparison.
  std::map<EuclidPoint, int> vertex_ids;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (auto x = intersect(sub.lines[i], sub.lines[j])) {
        vertex_ids.emplace(*x, 0);
      }
    }
  }
  sub.vertices.reserve(vertex_ids.size());
  for (auto& [point, id] : vertex_ids) {
    id = static_cast<int>(sub.vertices.size());
    sub.vertices.push_back(point);
  }

  // Incidence recomputed per vertex so that concurrences are exact.
  sub.lines_through.assign(sub.vertices.size(), {});
  for (size_t v = 0; v < sub.vertices.size(); ++v) {
    for (int i = 0; i < n; ++i) {
      if (on_line(sub.lines[i], sub.vertices[v])) {
        sub.lines_through[v].push_back(i);
      }
    }
    assert(sub.lines_through[v].size() >= 2);
  }

  // Half-edges per line, in parameter order along the line direction.
  auto add_pair = [&](int line, int from, int to, const Vec2& dir) {
    int a = static_cast<int>(sub.half_edges.size());
    sub.half_edges.push_back({line, from, to, dir, a + 1, -1, -1});
    sub.half_edges.push_back({line, to, from, -dir, a, -1, -1});
  };
  std::vector<std::vector<int>> on_this_line(n);
  for (size_t v = 0; v < sub.vertices.size(); ++v) {
    for (int i : sub.lines_through[v]) {
      on_this_line[i].push_back(static_cast<int>(v));
    }
  }
  for (int i = 0; i < n; ++i) {
    Vec2 d = line_direction(sub.lines[i]);
    auto param = [&](int v) {
      return sub.vertices[v].x * d.x + sub.vertices[v].y * d.y;
    };
    std::vector<int>& vs = on_this_line[i];
    std::sort(vs.begin(), vs.end(),
              [&](int lhs, int rhs) { return param(lhs) < param(rhs); });
    if (vs.empty()) {
      add_pair(i, -1, -1, d);
      continue;
    }
    add_pair(i, -1, vs.front(), d);  // ray in from the -d side
    for (size_t k = 0; k + 1 < vs.size(); ++k) {
      add_pair(i, vs[k], vs[k + 1], d);
    }
    add_pair(i, vs.back(), -1, d);  // ray out toward +d
  }

  // Successors at affine vertices: most clockwise departure.
  std::vector<std::vector<int>> outgoing(sub.vertices.size());
  for (size_t h = 0; h < sub.half_edges.size(); ++h) {
    if (sub.half_edges[h].from >= 0) {
      outgoing[sub.half_edges[h].from].push_back(static_cast<int>(h));
    }
  }
  std::vector<InfinityEvent> events;
  for (size_t h = 0; h < sub.half_edges.size(); ++h) {
    HalfEdge& he = sub.half_edges[h];
    if (he.to >= 0) {
      int best = -1;
      for (int g : outgoing[he.to]) {
        if (best < 0 ||
            turn_before(he.dir, sub.half_edges[g].dir,
                        sub.half_edges[best].dir)) {
          best = g;
        }
      }
      assert(best >= 0 &&
             turn_class(he.dir, sub.half_edges[best].dir) == 0);
      he.next = best;
    } else {
      events.push_back({he.dir, he.line, static_cast<int>(h)});
    }
  }

  // Successors at infinity: sort exit events clockwise (falling
  // counterclockwise angle; parallel exits by falling offset) and wrap each
  // exit to the entering twin of the next exit.
  std::sort(events.begin(), events.end(),
            [&](const InfinityEvent& a, const InfinityEvent& b) {
              if (ccw_angle_less(b.dir, a.dir)) {
                return true;
              }
              if (ccw_angle_less(a.dir, b.dir)) {
                return false;
              }
              return offset_greater(sub.lines[a.line], sub.lines[b.line],
                                    a.dir);
            });
  for (size_t e = 0; e < events.size(); ++e) {
    const InfinityEvent& cur = events[e];
    const InfinityEvent& nxt = events[(e + 1) % events.size()];
    sub.half_edges[cur.exit_half_edge].next =
        sub.half_edges[nxt.exit_half_edge].twin;
  }

  // Trace face cycles.
  const EuclidPoint origin{Rational(0), Rational(0)};
  for (size_t h = 0; h < sub.half_edges.size(); ++h) {
    if (sub.half_edges[h].face >= 0) {
      continue;
    }
    Face face;
    int id = static_cast<int>(sub.faces.size());
    int cur = static_cast<int>(h);
    face.bounded = true;
    face.contains_origin = true;
    do {
      HalfEdge& he = sub.half_edges[cur];
      he.face = id;
      face.boundary.push_back(cur);
      if (he.from < 0 || he.to < 0) {
        face.bounded = false;
      }
      if (face.contains_origin) {
        EuclidPoint ref = he.from >= 0
                              ? sub.vertices[he.from]
                              : (he.to >= 0 ? sub.vertices[he.to]
                                            : point_on_line(sub.lines[he.line]));
        if (!(cross(he.dir, origin - ref) < 0)) {
          face.contains_origin = false;
        }
      }
      cur = he.next;
    } while (cur != static_cast<int>(h));

    // Maximal collinear runs (cyclic).
    const size_t len = face.boundary.size();
    size_t start = 0;
    while (start < len &&
           sub.half_edges[face.boundary[start]].line ==
               sub.half_edges[face.boundary[(start + len - 1) % len]].line) {
      ++start;
    }
    if (start == len) {
      // all edges collinear: a single full line or one of its sides
      face.side_count = 1;
      face.side_lines = {sub.half_edges[face.boundary[0]].line};
    } else {
      int prev_line = -1;
      for (size_t k = 0; k < len; ++k) {
        const HalfEdge& he = sub.half_edges[face.boundary[(start + k) % len]];
        if (he.line != prev_line) {
          face.side_lines.push_back(he.line);
          prev_line = he.line;
        }
      }
      face.side_count = static_cast<int>(face.side_lines.size());
    }
    if (face.bounded) {
      for (size_t k = 0; k < len; ++k) {
        const HalfEdge& he = sub.half_edges[face.boundary[k]];
        const HalfEdge& after = sub.half_edges[he.next];
        if (he.line != after.line) {
          face.corner_vertices.push_back(he.to);
        }
      }
    }
    sub.faces.push_back(std::move(face));
  }
  return sub;
}

std::vector<const Face*> bounded_faces(const Subdivision& sub) {
  std::vector<const Face*> out;
  for (const Face& f : sub.faces) {
    if (f.bounded) {
      out.push_back(&f);
    }
  }
  return out;
}

const Face& face_containing(const Subdivision& sub, const EuclidPoint& x) {
  for (const CoeffPoint& line : sub.lines) {
    if (on_line(line, x)) {
      throw std::invalid_argument("face_containing: point lies on a line");
    }
  }
  for (const Face& f : sub.faces) {
    bool inside = true;
    for (int h : f.boundary) {
      const HalfEdge& he = sub.half_edges[h];
      EuclidPoint ref = he.from >= 0
                            ? sub.vertices[he.from]
                            : (he.to >= 0 ? sub.vertices[he.to]
                                          : point_on_line(sub.lines[he.line]));
      if (!(cross(he.dir, x - ref) < 0)) {
        inside = false;
        break;
      }
    }
    if (inside) {
      return f;
    }
  }
  throw std::logic_error("face_containing: no face found");
}

std::map<int, int> census(const Subdivision& sub) {
  std::map<int, int> hist;
  for (const Face& f : sub.faces) {
    if (f.bounded) {
      ++hist[f.side_count];
    }
  }
  return hist;
}

int two_sided_unbounded_count(const Subdivision& sub) {
  int count = 0;
  for (const Face& f : sub.faces) {
    if (!f.bounded && f.side_count == 2) {
      ++count;
    }
  }
  return count;
}

bool euler_relation_holds(const Subdivision& sub) {
  if (sub.lines.empty()) {
    return true;
  }
  long long v = sub.vertex_count() + 1;  // + the vertex at infinity
  long long e = sub.edge_count();
  long long f = sub.face_count();
  return v - e + f == 2;
}

std::vector<EuclidPoint> face_polygon(const Subdivision& sub, const Face& f) {
  if (!f.bounded) {
    throw std::invalid_argument("face_polygon: face is unbounded");
  }
  std::vector<EuclidPoint> polygon;
  polygon.reserve(f.corner_vertices.size());
  for (int v : f.corner_vertices) {
    polygon.push_back(sub.vertices[v]);
  }
  return polygon;
}

}  // namespace linepat
