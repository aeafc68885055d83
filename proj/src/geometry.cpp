#include "linepat/geometry.hpp"

#include <stdexcept>

namespace linepat {

bool operator<(const CoeffPoint& lhs, const CoeffPoint& rhs) {
  if (lhs.a != rhs.a) {
    return lhs.a < rhs.a;
  }
  return lhs.b < rhs.b;
}

bool operator<(const EuclidPoint& lhs, const EuclidPoint& rhs) {
  if (lhs.x != rhs.x) {
    return lhs.x < rhs.x;
  }
  return lhs.y < rhs.y;
}

Vec2 operator-(const CoeffPoint& lhs, const CoeffPoint& rhs) {
  return {lhs.a - rhs.a, lhs.b - rhs.b};
}

Vec2 operator-(const EuclidPoint& lhs, const EuclidPoint& rhs) {
  return {lhs.x - rhs.x, lhs.y - rhs.y};
}

Vec2 operator-(const Vec2& v) { return {-v.x, -v.y}; }

Vec2 as_vec(const CoeffPoint& p) { return {p.a, p.b}; }

Rational cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }

Rational dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }

bool is_valid(const CoeffPoint& p) { return p.a != 0 || p.b != 0; }

std::string to_string(const CoeffPoint& p) {
  return "(" + to_string(p.a) + "," + to_string(p.b) + ")";
}

std::string to_string(const EuclidPoint& p) {
  return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
}

Rational cross(const CoeffPoint& p, const CoeffPoint& q) {
  return p.a * q.b - p.b * q.a;
}

Orientation orientation(const CoeffPoint& p, const CoeffPoint& q) {
  Rational c = cross(p, q);
  if (c > 0) {
    return Orientation::left;
  }
  if (c < 0) {
    return Orientation::right;
  }
  return Orientation::on;
}

Rational line_value(const CoeffPoint& p, const EuclidPoint& x) {
  return p.a * x.x + p.b * x.y - 1;
}

bool on_line(const CoeffPoint& p, const EuclidPoint& x) {
  return line_value(p, x) == 0;
}

OriginSide origin_side_of_line(const CoeffPoint& p, const EuclidPoint& x) {
  Rational v = line_value(p, x);
  if (v == 0) {
    return OriginSide::on_line;
  }
  // O itself gives line_value == -1.
  return v < 0 ? OriginSide::same_as_origin : OriginSide::opposite_origin;
}

std::pair<std::optional<Rational>, std::optional<Rational>> intercepts(
    const CoeffPoint& p) {
  std::pair<std::optional<Rational>, std::optional<Rational>> result;
  if (p.a != 0) {
    result.first = Rational(1) / p.a;
  }
  if (p.b != 0) {
    result.second = Rational(1) / p.b;
  }
  return result;
}

std::optional<EuclidPoint> intersect(const CoeffPoint& p1,
                                     const CoeffPoint& p2) {
  if (p1 == p2) {
    throw std::invalid_argument("intersect: identical coefficient points");
  }
  Rational d = cross(p1, p2);
  if (d == 0) {
    return std::nullopt;  // parallel lines
  }
  return EuclidPoint{(p2.b - p1.b) / d, (p1.a - p2.a) / d};
}

EuclidPoint point_on_line(const CoeffPoint& p) {
  if (p.a != 0) {
    return {Rational(1) / p.a, Rational(0)};
  }
  return {Rational(0), Rational(1) / p.b};
}

Vec2 line_direction(const CoeffPoint& p) { return {-p.b, p.a}; }

Rational det(const Transform2& m) { return m.m11 * m.m22 - m.m12 * m.m21; }

Transform2 inverse_transpose(const Transform2& m) {
  Rational d = det(m);
  if (d == 0) {
    throw std::invalid_argument("inverse_transpose: singular transform");
  }
  // (M^t)^{-1} = adj(M^t)^t / det = [[m22, -m21], [-m12, m11]] / det
  return {m.m22 / d, -m.m21 / d, -m.m12 / d, m.m11 / d};
}

CoeffPoint apply(const Transform2& m, const CoeffPoint& p) {
  return {m.m11 * p.a + m.m12 * p.b, m.m21 * p.a + m.m22 * p.b};
}

std::vector<CoeffPoint> apply(const Transform2& m,
                              const std::vector<CoeffPoint>& points) {
  std::vector<CoeffPoint> out;
  out.reserve(points.size());
  for (const CoeffPoint& p : points) {
    out.push_back(apply(m, p));
  }
  return out;
}

EuclidPoint induced_point_map(const Transform2& m, const EuclidPoint& x) {
  Transform2 n = inverse_transpose(m);
  return {n.m11 * x.x + n.m12 * x.y, n.m21 * x.x + n.m22 * x.y};
}

Rational dist_product(const CoeffPoint& p) {
  Rational norm_sq = p.a * p.a + p.b * p.b;
  if (norm_sq == 0) {
    throw std::invalid_argument("dist_product: origin is not a line handle");
  }
  // Squared distance from O to {A*x + B*y = 1} by the residual formula.
  Rational residual = line_value(p, EuclidPoint{Rational(0), Rational(0)});
  Rational dist_sq = residual * residual / norm_sq;
  return norm_sq * dist_sq;
}

}  // namespace linepat
