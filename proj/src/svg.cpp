#include "linepat/svg.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linepat/rational.hpp"

namespace linepat {

namespace {

constexpr int kDecimals = 6;

// Point of the line closest to the origin: (A,B)/(A^2+B^2).
EuclidPoint closest_to_origin(const CoeffPoint& p) {
  Rational n = p.a * p.a + p.b * p.b;
  return {p.a / n, p.b / n};
}

ViewBox fit_viewbox(const Subdivision& sub) {
  std::vector<EuclidPoint> anchors = sub.vertices;
  if (anchors.empty()) {
    for (const CoeffPoint& line : sub.lines) {
      anchors.push_back(closest_to_origin(line));
    }
  }
  anchors.push_back({Rational(0), Rational(0)});
  ViewBox box{anchors[0].x, anchors[0].y, anchors[0].x, anchors[0].y};
  for (const EuclidPoint& v : anchors) {
    box.xmin = std::min(box.xmin, v.x);
    box.xmax = std::max(box.xmax, v.x);
    box.ymin = std::min(box.ymin, v.y);
    box.ymax = std::max(box.ymax, v.y);
  }
  Rational ex = box.xmax - box.xmin;
  Rational ey = box.ymax - box.ymin;
  Rational pad_x = ex == 0 ? Rational(1) : ex / 10;
  Rational pad_y = ey == 0 ? Rational(1) : ey / 10;
  return {box.xmin - pad_x, box.ymin - pad_y, box.xmax + pad_x,
          box.ymax + pad_y};
}

std::optional<std::pair<EuclidPoint, EuclidPoint>> clip_line(
    const CoeffPoint& line, const ViewBox& box) {
  EuclidPoint p0 = point_on_line(line);
  Vec2 d = line_direction(line);
  bool has_lo = false;
  bool has_hi = false;
  Rational lo;
  Rational hi;
  bool feasible = true;
  // Constraint den * t <= num, folded into the running [lo, hi] range.
  auto restrict = [&](const Rational& den, const Rational& num) {
    if (den == 0) {
      feasible = feasible && num >= 0;
      return;
    }
    Rational t = num / den;
    if (den > 0) {
      if (!has_hi || t < hi) {
        hi = t;
        has_hi = true;
      }
    } else {
      if (!has_lo || t > lo) {
        lo = t;
        has_lo = true;
      }
    }
  };
  restrict(-d.x, p0.x - box.xmin);
  restrict(d.x, box.xmax - p0.x);
  restrict(-d.y, p0.y - box.ymin);
  restrict(d.y, box.ymax - p0.y);
  if (!feasible || !has_lo || !has_hi || lo >= hi) {
    return std::nullopt;
  }
  EuclidPoint a{p0.x + lo * d.x, p0.y + lo * d.y};
  EuclidPoint b{p0.x + hi * d.x, p0.y + hi * d.y};
  return std::make_pair(a, b);
}

std::string polygon_key(const std::vector<EuclidPoint>& polygon) {
  size_t best = 0;
  for (size_t k = 1; k < polygon.size(); ++k) {
    if (polygon[k] < polygon[best]) {
      best = k;
    }
  }
  std::string key;
  for (size_t k = 0; k < polygon.size(); ++k) {
    key += to_string(polygon[(best + k) % polygon.size()]);
  }
  return key;
}

}  // namespace

std::string render_svg(const Subdivision& sub, const RenderConfig& config) {
  if (config.width_px < 1) {
    throw std::invalid_argument("render_svg: width must be positive");
  }
  ViewBox box = config.viewbox ? *config.viewbox : fit_viewbox(sub);
  if (box.xmax <= box.xmin || box.ymax <= box.ymin) {
    throw std::invalid_argument("render_svg: empty viewbox");
  }

  Rational scale = Rational(config.width_px) / (box.xmax - box.xmin);
  Rational height = (box.ymax - box.ymin) * scale;
  BigInt height_px = floor_to_int(height + Rational(1, 2));
  if (height_px < 1) {
    height_px = 1;
  }
  auto px = [&](const Rational& x) {
    return to_decimal_string((x - box.xmin) * scale, kDecimals);
  };
  auto py = [&](const Rational& y) {
    return to_decimal_string((box.ymax - y) * scale, kDecimals);
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << config.width_px << "\" height=\"" << height_px.str()
      << "\" viewBox=\"0 0 " << config.width_px << " " << height_px.str()
      << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << config.width_px << "\" height=\""
      << height_px.str() << "\" fill=\"#ffffff\"/>\n";

  // Shaded bounded cells, in a canonical order so output is reproducible.
  struct Shaded {
    std::string key;
    std::vector<EuclidPoint> polygon;
    std::string fill;
  };
  std::vector<Shaded> shaded;
  for (const Face& face : sub.faces) {
    if (!face.bounded) {
      continue;
    }
    std::string fill;
    auto it = config.shade.find(face.side_count);
    if (it != config.shade.end()) {
      fill = it->second;
    } else if (config.shade_5plus && face.side_count >= 5) {
      fill = config.highlight;
    } else {
      continue;
    }
    std::vector<EuclidPoint> polygon = face_polygon(sub, face);
    shaded.push_back({polygon_key(polygon), std::move(polygon), fill});
  }
  std::sort(shaded.begin(), shaded.end(),
            [](const Shaded& lhs, const Shaded& rhs) {
              return lhs.key < rhs.key;
            });
  if (!shaded.empty()) {
    out << "<g fill-opacity=\"0.85\" stroke=\"none\">\n";
    for (const Shaded& cell : shaded) {
      out << "<polygon points=\"";
      for (size_t k = 0; k < cell.polygon.size(); ++k) {
        if (k > 0) {
          out << " ";
        }
        out << px(cell.polygon[k].x) << "," << py(cell.polygon[k].y);
      }
      out << "\" fill=\"" << cell.fill << "\"/>\n";
    }
    out << "</g>\n";
  }

  out << "<g stroke=\"#333333\" stroke-width=\"1\">\n";
  for (const CoeffPoint& line : sub.lines) {
    auto segment = clip_line(line, box);
    if (!segment) {
      continue;
    }
    out << "<line x1=\"" << px(segment->first.x) << "\" y1=\""
        << py(segment->first.y) << "\" x2=\"" << px(segment->second.x)
        << "\" y2=\"" << py(segment->second.y) << "\"/>\n";
  }
  out << "</g>\n";

  if (config.labels) {
    out << "<g font-family=\"monospace\" font-size=\"12\" fill=\"#555555\">\n";
    for (const CoeffPoint& line : sub.lines) {
      EuclidPoint anchor = closest_to_origin(line);
      if (anchor.x < box.xmin || anchor.x > box.xmax || anchor.y < box.ymin ||
          anchor.y > box.ymax) {
        continue;
      }
      out << "<text x=\"" << px(anchor.x) << "\" y=\"" << py(anchor.y)
          << "\">" << to_string(line) << "</text>\n";
    }
    out << "</g>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace linepat
