#pragma once

#include "linepat/point_set.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace linepat {

// Rectangular grid of coefficient points
//   { (a + k*dx, b + j*dy) : 0 <= k <= n, 0 <= j <= m }  minus the origin.
// Spacings must be positive and no corner may be the origin (an interior
// point may be; it is silently dropped).
struct LatticeSpec {
  Rational a;
  Rational b;
  Rational dx;
  Rational dy;
  int n = 0;  // steps in x, giving n+1 columns
  int m = 0;  // steps in y, giving m+1 rows

  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

std::string to_string(const LatticeSpec& spec);
// Parses "a,b,dx,dy,n,m" with rational a,b,dx,dy.
LatticeSpec parse_lattice_spec(const std::string& text);

void validate(const LatticeSpec& spec);  // throws std::invalid_argument
PointSet generate(const LatticeSpec& spec);

// The grid points with k in {0,n} or j in {0,m}, and the at-most-four
// extreme corners, both minus the origin.
std::pair<PointSet, PointSet> boundary_and_corners(const LatticeSpec& spec);

// The square lattice {-n..n}^2 minus the origin.
LatticeSpec grid_spec(int n);

// Nine integer points forming two unequally spaced columns and rows; its
// line pattern contains a pentagonal cell, so unequal spacing genuinely
// breaks the 3/4-gon bound.
PointSet pentagon_counterexample();

// Triangle family with vertices (-3,-1), (-2,-1) and
// (-3 + fib(2n+1), -1 + fib(2n)); its pattern contains an (n+2)-gon.
PointSet fibonacci_triangle(int n);
std::int64_t fibonacci(int k);  // fib(1) = fib(2) = 1

// All integer points inside or on a convex polygon, minus the origin.
// Vertices may be given in either winding; degenerate (segment / single
// point) input is allowed; non-convex input throws.
PointSet lattice_in_polygon(const std::vector<EuclidPoint>& vertices);

// |{ (a,b) in Z^2 : 0 < max(|a|,|b|) <= n, gcd(|a|,|b|) == 1 }|,
// with gcd(k, 0) = k. Counts primitive directions of the (2n+1)^2 grid.
std::int64_t coprime_count(int n);

}  // namespace linepat
