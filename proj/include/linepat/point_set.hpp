#pragma once

#include "linepat/geometry.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace linepat {

// A finite set of coefficient points, i.e. a finite pattern of lines.
// Points are kept sorted lexicographically and deduplicated; (0, 0) is
// rejected at every entry point, so downstream code never sees it.
struct PointSet {
  std::vector<CoeffPoint> points;  // sorted, unique
  std::string label;

  static PointSet from_points(std::vector<CoeffPoint> points,
                              std::string label = "");

  bool contains(const CoeffPoint& p) const;
  // Index of p in `points`, or -1.
  int index_of(const CoeffPoint& p) const;
  size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

PointSet apply(const Transform2& m, const PointSet& s);

// Text format: one point per line, two whitespace-separated fields "A B",
// each an integer or a fraction "p/q". '#' starts a comment line. Blank
// lines are ignored.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

PointSet read_point_set(std::istream& in, std::string label = "");
PointSet read_point_set_file(const std::string& path);
void write_point_set(std::ostream& out, const PointSet& s);

}  // namespace linepat
