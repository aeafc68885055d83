#pragma once

#include "linepat/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace linepat {

// A point P = (A, B) of the punctured coefficient plane. P doubles as the
// handle for the Euclidean line  A*x + B*y = 1,  the general line missing the
// origin. (0, 0) is excluded; boundary code validates, predicates assume it.
struct CoeffPoint {
  Rational a;
  Rational b;

  friend bool operator==(const CoeffPoint&, const CoeffPoint&) = default;
};

// A point of the Euclidean plane the lines live in.
struct EuclidPoint {
  Rational x;
  Rational y;

  friend bool operator==(const EuclidPoint&, const EuclidPoint&) = default;
};

// A direction / displacement, in either plane.
struct Vec2 {
  Rational x;
  Rational y;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

bool operator<(const CoeffPoint& lhs, const CoeffPoint& rhs);  // lexicographic
bool operator<(const EuclidPoint& lhs, const EuclidPoint& rhs);

Vec2 operator-(const CoeffPoint& lhs, const CoeffPoint& rhs);
Vec2 operator-(const EuclidPoint& lhs, const EuclidPoint& rhs);
Vec2 operator-(const Vec2& v);

// The position vector of P, i.e. the direction of the ray from the origin
// through P.
Vec2 as_vec(const CoeffPoint& p);

Rational cross(const Vec2& u, const Vec2& v);
Rational dot(const Vec2& u, const Vec2& v);

bool is_valid(const CoeffPoint& p);  // false iff p == (0, 0)

std::string to_string(const CoeffPoint& p);    // "(A,B)"
std::string to_string(const EuclidPoint& p);   // "(x,y)"

// Side of the ray O->P that Q lies on, viewed from the origin.
enum class Orientation { left, on, right };

// A_P * A_Q ... sign of the determinant |P Q|.
Rational cross(const CoeffPoint& p, const CoeffPoint& q);

// left:  Q strictly left of the directed ray O->P,
// right: strictly right, on: O, P, Q collinear.
Orientation orientation(const CoeffPoint& p, const CoeffPoint& q);

// Where a Euclidean point sits relative to the line of P. The line never
// passes through the origin, so "same_as_origin" is the open half-plane
// A*x + B*y < 1 containing O.
enum class OriginSide { same_as_origin, on_line, opposite_origin };

OriginSide origin_side_of_line(const CoeffPoint& p, const EuclidPoint& x);

// A*x + B*y - 1; zero exactly on the line, negative on the origin side.
Rational line_value(const CoeffPoint& p, const EuclidPoint& x);
bool on_line(const CoeffPoint& p, const EuclidPoint& x);

// Axis intercepts of the line of P: x-intercept 1/A (absent when A == 0),
// y-intercept 1/B (absent when B == 0).
std::pair<std::optional<Rational>, std::optional<Rational>> intercepts(
    const CoeffPoint& p);

// Intersection of the lines of p1 and p2. Empty iff the lines are parallel,
// i.e. iff O, p1, p2 are collinear in the coefficient plane. Throws
// std::invalid_argument when p1 == p2 (same line twice).
std::optional<EuclidPoint> intersect(const CoeffPoint& p1,
                                     const CoeffPoint& p2);

// Some point on the line of P and the direction of the line.
EuclidPoint point_on_line(const CoeffPoint& p);
Vec2 line_direction(const CoeffPoint& p);  // (-B, A)

// Invertible linear map of the coefficient plane, row-major 2x2.
struct Transform2 {
  Rational m11, m12;
  Rational m21, m22;
};

Rational det(const Transform2& m);
Transform2 inverse_transpose(const Transform2& m);  // throws if singular

// M applied to a coefficient point (column-vector convention).
CoeffPoint apply(const Transform2& m, const CoeffPoint& p);
std::vector<CoeffPoint> apply(const Transform2& m,
                              const std::vector<CoeffPoint>& points);

// The induced map of the Euclidean plane: sending S to M*S moves the line of
// every P so that x on line(P) implies induced_point_map(M, x) on line(M*P).
// That map is (M^t)^{-1}.
EuclidPoint induced_point_map(const Transform2& m, const EuclidPoint& x);

// |P|^2 * dist(O, line(P))^2. Identically 1: the duality trades distance from
// the origin for reciprocal distance.
Rational dist_product(const CoeffPoint& p);

}  // namespace linepat
