#include "linepat/lattice.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace linepat {

std::string to_string(const LatticeSpec& spec) {
  std::ostringstream out;
  out << "lattice(" << to_string(spec.a) << "," << to_string(spec.b) << ","
      << to_string(spec.dx) << "," << to_string(spec.dy) << "," << spec.n
      << "," << spec.m << ")";
  return out.str();
}

LatticeSpec parse_lattice_spec(const std::string& text) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(text);
  while (std::getline(in, field, ',')) {
    fields.push_back(field);
  }
  if (fields.size() != 6) {
    throw std::invalid_argument("lattice spec needs 'a,b,dx,dy,n,m': '" +
                                text + "'");
  }
  LatticeSpec spec;
  spec.a = parse_rational(fields[0]);
  spec.b = parse_rational(fields[1]);
  spec.dx = parse_rational(fields[2]);
  spec.dy = parse_rational(fields[3]);
  try {
    size_t used = 0;
    spec.n = std::stoi(fields[4], &used);
    if (used != fields[4].size()) {
      throw std::invalid_argument(fields[4]);
    }
    spec.m = std::stoi(fields[5], &used);
    if (used != fields[5].size()) {
      throw std::invalid_argument(fields[5]);
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("lattice spec counts must be integers: '" +
                                text + "'");
  }
  validate(spec);
  return spec;
}

void validate(const LatticeSpec& spec) {
  if (spec.dx <= 0 || spec.dy <= 0) {
    throw std::invalid_argument("lattice spacings must be positive");
  }
  if (spec.n < 0 || spec.m < 0) {
    throw std::invalid_argument("lattice step counts must be >= 0");
  }
  const Rational xs[2] = {spec.a, spec.a + spec.n * spec.dx};
  const Rational ys[2] = {spec.b, spec.b + spec.m * spec.dy};
  for (const Rational& x : xs) {
    for (const Rational& y : ys) {
      if (x == 0 && y == 0) {
        throw std::invalid_argument("lattice corner may not be the origin");
      }
    }
  }
}

PointSet generate(const LatticeSpec& spec) {
  validate(spec);
  std::vector<CoeffPoint> points;
  points.reserve(static_cast<size_t>(spec.n + 1) * (spec.m + 1));
  for (int k = 0; k <= spec.n; ++k) {
    Rational x = spec.a + k * spec.dx;
    for (int j = 0; j <= spec.m; ++j) {
      Rational y = spec.b + j * spec.dy;
      if (x == 0 && y == 0) {
        continue;
      }
      points.push_back({x, y});
    }
  }
  return PointSet::from_points(std::move(points), to_string(spec));
}

std::pair<PointSet, PointSet> boundary_and_corners(const LatticeSpec& spec) {
  validate(spec);
  std::vector<CoeffPoint> boundary;
  std::vector<CoeffPoint> corners;
  for (int k = 0; k <= spec.n; ++k) {
    Rational x = spec.a + k * spec.dx;
    for (int j = 0; j <= spec.m; ++j) {
      Rational y = spec.b + j * spec.dy;
      if (x == 0 && y == 0) {
        continue;
      }
      bool edge_k = k == 0 || k == spec.n;
      bool edge_j = j == 0 || j == spec.m;
      if (edge_k || edge_j) {
        boundary.push_back({x, y});
      }
      if (edge_k && edge_j) {
        corners.push_back({x, y});
      }
    }
  }
  return {PointSet::from_points(std::move(boundary),
                                to_string(spec) + " boundary"),
          PointSet::from_points(std::move(corners),
                                to_string(spec) + " corners")};
}

LatticeSpec grid_spec(int n) {
  if (n < 1) {
    throw std::invalid_argument("grid size must be >= 1");
  }
  return LatticeSpec{Rational(-n), Rational(-n), Rational(1), Rational(1),
                     2 * n, 2 * n};
}

PointSet pentagon_counterexample() {
  std::vector<CoeffPoint> points;
  const int coords[3] = {-2, 2, 3};
  for (int x : coords) {
    for (int y : coords) {
      points.push_back({Rational(x), Rational(y)});
    }
  }
  return PointSet::from_points(std::move(points), "pentagon3x3");
}

std::int64_t fibonacci(int k) {
  if (k < 1) {
    throw std::invalid_argument("fibonacci index must be >= 1");
  }
  std::int64_t prev = 1, cur = 1;
  for (int i = 3; i <= k; ++i) {
    std::int64_t next = prev + cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

PointSet fibonacci_triangle(int n) {
  if (n < 1) {
    throw std::invalid_argument("fibonacci triangle index must be >= 1");
  }
  std::vector<EuclidPoint> vertices = {
      {Rational(-3), Rational(-1)},
      {Rational(-2), Rational(-1)},
      {Rational(-3 + fibonacci(2 * n + 1)), Rational(-1 + fibonacci(2 * n))}};
  PointSet s = lattice_in_polygon(vertices);
  s.label = "fibtriangle(" + std::to_string(n) + ")";
  return s;
}

namespace {

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace

PointSet lattice_in_polygon(const std::vector<EuclidPoint>& vertices) {
  if (vertices.empty()) {
    throw std::invalid_argument("polygon needs at least one vertex");
  }
  size_t count = vertices.size();
  // winding: consistent turn signs at every corner, or all zero (degenerate)
  int winding = 0;
  for (size_t i = 0; i < count; ++i) {
    const EuclidPoint& u = vertices[i];
    const EuclidPoint& v = vertices[(i + 1) % count];
    const EuclidPoint& w = vertices[(i + 2) % count];
    int s = sign_of(cross(v - u, w - v));
    if (s == 0) {
      continue;
    }
    if (winding == 0) {
      winding = s;
    } else if (winding != s) {
      throw std::invalid_argument("polygon is not convex");
    }
  }

  Rational min_x = vertices[0].x, max_x = vertices[0].x;
  Rational min_y = vertices[0].y, max_y = vertices[0].y;
  for (const EuclidPoint& v : vertices) {
    min_x = std::min(min_x, v.x);
    max_x = std::max(max_x, v.x);
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  }
  BigInt x_lo = ceil_to_int(min_x), x_hi = floor_to_int(max_x);
  BigInt y_lo = ceil_to_int(min_y), y_hi = floor_to_int(max_y);
  if (x_hi < x_lo || y_hi < y_lo) {
    return PointSet::from_points({}, "polygon");
  }
  if ((x_hi - x_lo + 1) * (y_hi - y_lo + 1) > 4'000'000) {
    throw std::invalid_argument("polygon bounding box too large");
  }

  auto inside_or_on = [&](const EuclidPoint& p) {
    if (winding == 0) {
      // degenerate: membership on the extreme segment
      const EuclidPoint* lo = &vertices[0];
      const EuclidPoint* hi = &vertices[0];
      for (const EuclidPoint& v : vertices) {
        if (v < *lo) lo = &v;
        if (*hi < v) hi = &v;
      }
      if (cross(p - *lo, *hi - *lo) != 0) {
        return false;
      }
      Rational t = dot(p - *lo, *hi - *lo);
      return t >= 0 && t <= dot(*hi - *lo, *hi - *lo);
    }
    for (size_t i = 0; i < count; ++i) {
      const EuclidPoint& u = vertices[i];
      const EuclidPoint& v = vertices[(i + 1) % count];
      if (u == v) {
        continue;
      }
      if (winding * sign_of(cross(v - u, p - u)) < 0) {
        return false;
      }
    }
    return true;
  };

  std::vector<CoeffPoint> points;
  for (BigInt x = x_lo; x <= x_hi; ++x) {
    for (BigInt y = y_lo; y <= y_hi; ++y) {
      if (x == 0 && y == 0) {
        continue;
      }
      if (inside_or_on({Rational(x), Rational(y)})) {
        points.push_back({Rational(x), Rational(y)});
      }
    }
  }
  return PointSet::from_points(std::move(points), "polygon");
}

std::int64_t coprime_count(int n) {
  if (n < 1) {
    throw std::invalid_argument("coprime_count needs n >= 1");
  }
  std::int64_t total = 0;
  for (int a = -n; a <= n; ++a) {
    for (int b = -n; b <= n; ++b) {
      if (a == 0 && b == 0) {
        continue;
      }
      if (std::gcd(a, b) == 1) {
        ++total;
      }
    }
  }
  return total;
}

}  // namespace linepat
