#include "linepat/point_set.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace linepat {

PointSet PointSet::from_points(std::vector<CoeffPoint> points,
                               std::string label) {
  for (const CoeffPoint& p : points) {
    if (!is_valid(p)) {
      throw std::invalid_argument("point set may not contain (0,0)");
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  PointSet s;
  s.points = std::move(points);
  s.label = std::move(label);
  return s;
}

bool PointSet::contains(const CoeffPoint& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

int PointSet::index_of(const CoeffPoint& p) const {
  auto it = std::lower_bound(points.begin(), points.end(), p);
  if (it == points.end() || !(*it == p)) {
    return -1;
  }
  return static_cast<int>(it - points.begin());
}

PointSet apply(const Transform2& m, const PointSet& s) {
  if (det(m) == 0) {
    throw std::invalid_argument("apply: singular transform");
  }
  return PointSet::from_points(apply(m, s.points), s.label);
}

PointSet read_point_set(std::istream& in, std::string label) {
  std::vector<CoeffPoint> points;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    // strip a UTF-8 BOM on the first line, and trailing CR from CRLF input
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) {
      line.erase(0, 3);
    }
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first[0] == '#') {
      continue;
    }
    std::string second, extra;
    if (!(fields >> second) || (fields >> extra)) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected two fields 'A B'");
    }
    CoeffPoint p;
    try {
      p.a = parse_rational(first);
      p.b = parse_rational(second);
    } catch (const std::invalid_argument& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!is_valid(p)) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": (0,0) is not a valid coefficient point");
    }
    points.push_back(p);
  }
  return PointSet::from_points(std::move(points), std::move(label));
}

PointSet read_point_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  return read_point_set(in, path);
}

void write_point_set(std::ostream& out, const PointSet& s) {
  if (!s.label.empty()) {
    out << "# " << s.label << "\n";
  }
  for (const CoeffPoint& p : s.points) {
    out << to_string(p.a) << " " << to_string(p.b) << "\n";
  }
}

}  // namespace linepat
