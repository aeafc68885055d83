#pragma once

#include "linepat/point_set.hpp"

#include <map>
#include <vector>

namespace linepat {

// Exact planar subdivision induced by the full lines of a point set,
// built by brute force: pairwise intersections, merged coincident vertices,
// half-edges (segments plus explicit ray and vertex-free-line pieces), and
// face cycles traced with the face kept on the right. Bounded face cycles
// therefore run clockwise.
//
// Rays and vertex-free lines are stitched together "at infinity": every
// half-edge leaving the affine plane exits at its direction, and the face
// wraps to the half-edge entering from the clockwise-next exit direction
// (parallel exits tie-broken by line offset). Combinatorially this is the
// one-point compactification: all rays meet a single extra vertex, under
// which V - E + F = 2 holds with V counting that vertex.
struct HalfEdge {
  int line = -1;  // index into Subdivision::lines
  int from = -1;  // tail vertex id, -1 when entering from infinity
  int to = -1;    // head vertex id, -1 when exiting to infinity
  Vec2 dir;       // exact direction of travel
  int twin = -1;
  int next = -1;  // successor along the face on the right
  int face = -1;
};

struct Face {
  std::vector<int> boundary;  // half-edge cycle, face on the right
  bool bounded = false;
  bool contains_origin = false;
  // Sides are maximal runs of collinear boundary edges.
  int side_count = 0;
  std::vector<int> side_lines;      // line id of each run, in cycle order
  std::vector<int> corner_vertices;  // bounded faces: clockwise corner cycle
};

struct Subdivision {
  std::vector<CoeffPoint> lines;       // sorted (point-set order)
  std::vector<EuclidPoint> vertices;   // sorted lexicographically
  std::vector<std::vector<int>> lines_through;  // per vertex, ascending
  std::vector<HalfEdge> half_edges;
  std::vector<Face> faces;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(half_edges.size() / 2); }
  int face_count() const { return static_cast<int>(faces.size()); }
};

Subdivision build(const PointSet& s);

std::vector<const Face*> bounded_faces(const Subdivision& sub);

// The unique face containing x. Throws std::invalid_argument if x lies on
// one of the lines.
const Face& face_containing(const Subdivision& sub, const EuclidPoint& x);

// side_count -> number of bounded faces with that many sides.
std::map<int, int> census(const Subdivision& sub);

// Unbounded faces with exactly two sides (two rays, possibly with collinear
// chains between vertices).
int two_sided_unbounded_count(const Subdivision& sub);

// (V+1) - E + F == 2, the compactified Euler relation. True for the empty
// subdivision by convention.
bool euler_relation_holds(const Subdivision& sub);

// Clockwise corner cycle of a bounded face.
std::vector<EuclidPoint> face_polygon(const Subdivision& sub, const Face& f);

}  // namespace linepat
