#include "kunstweg/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace kunstweg {
namespace {

std::string num(double v) {
  char buffer[32];
  // keep "-0" out of the output
  std::snprintf(buffer, sizeof buffer, "%.6f", v == 0.0 ? 0.0 : v);
  std::string s(buffer);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

// SVG y grows downwards
std::string xy(const Point<double>& p) { return num(p.x()) + "," + num(-p.y()); }

void line(std::ostringstream& os, const Point<double>& a, const Point<double>& b, const char* cls) {
  os << "    <line class=\"" << cls << "\" x1=\"" << num(a.x()) << "\" y1=\"" << num(-a.y()) << "\" x2=\""
     << num(b.x()) << "\" y2=\"" << num(-b.y()) << "\"/>\n";
}

}  // namespace

std::string render_svg(const PolygonChain<double>& chain, const SvgOptions& options) {
  const long n = chain.n();
  const double r = chain.radius;

  std::vector<std::vector<Point<double>>> outlines;
  outlines.reserve(static_cast<std::size_t>(n));
  double lo_x = -r, hi_x = r, lo_y = -r, hi_y = r;
  for (long j = 1; j <= n; ++j) {
    outlines.push_back(polygon_outline(chain, j));
    for (const auto& p : outlines.back()) {
      lo_x = std::min(lo_x, p.x());
      hi_x = std::max(hi_x, p.x());
      lo_y = std::min(lo_y, p.y());
      hi_y = std::max(hi_y, p.y());
    }
  }
  const double margin = 0.05 * std::max(hi_x - lo_x, hi_y - lo_y);
  const double stroke = r / 400.0;
  const double dot = r / 80.0;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\""
     << num(lo_x - margin) << " " << num(-hi_y - margin) << " " << num(hi_x - lo_x + 2 * margin) << " "
     << num(hi_y - lo_y + 2 * margin) << "\">\n";
  os << "  <title>Chained regular " << 4 * n << "-gons, n = " << n << "</title>\n";
  os << "  <defs>\n"
     << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"4\" markerHeight=\"4\""
     << " orient=\"auto\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#1f5fa8\"/></marker>\n"
     << "  </defs>\n";
  os << "  <style>\n"
     << "    .polygon { fill: none; stroke: #222; stroke-width: " << num(stroke) << "; }\n"
     << "    .circle { fill: none; stroke: #999; stroke-width: " << num(stroke) << "; }\n"
     << "    .ray { stroke: #b33; stroke-width: " << num(stroke) << "; }\n"
     << "    .path-vector { stroke: #1f5fa8; stroke-width: " << num(2 * stroke) << "; marker-end: url(#arrow); }\n"
     << "    .cancelled { stroke: #1f5fa8; stroke-width: " << num(2 * stroke)
     << "; stroke-dasharray: " << num(6 * stroke) << " " << num(4 * stroke) << "; }\n"
     << "    .point { fill: #b33; }\n"
     << "    .center { fill: #000; }\n"
     << "    text { font-family: sans-serif; font-size: " << num(4 * dot) << "px; }\n"
     << "  </style>\n";

  os << "  <circle class=\"circle\" cx=\"0.000000\" cy=\"0.000000\" r=\"" << num(r) << "\"/>\n";

  os << "  <g id=\"polygons\">\n";
  for (const auto& outline : outlines) {
    os << "    <polygon class=\"polygon\" points=\"";
    for (std::size_t m = 0; m < outline.size(); ++m) os << (m ? " " : "") << xy(outline[m]);
    os << "\"/>\n";
  }
  os << "  </g>\n";

  if (options.rays) {
    os << "  <g id=\"rays\">\n";
    for (long j = 0; j <= n; ++j) line(os, chain.center, chain.point(j), "ray");
    os << "  </g>\n";
  }

  if (options.path_vectors) {
    os << "  <g id=\"paths\">\n";
    for (long j = 1; j <= n; ++j) {
      std::set<long> cancelled;
      if (options.cancellations) {
        const CancellationStructure cs = cancellation_structure(chain.spec, j);
        cancelled.insert(cs.horizontal);
        for (const auto& [a, b] : cs.pairs) {
          cancelled.insert(a);
          cancelled.insert(b);
        }
      }
      Point<double> at = chain.point(j - 1);
      const auto& path = chain.path(j);
      for (long k = 0; k < static_cast<long>(path.size()); ++k) {
        const Point<double> to = at + path[static_cast<std::size_t>(k)];
        line(os, at, to, cancelled.count(k) ? "cancelled" : "path-vector");
        at = to;
      }
    }
    os << "  </g>\n";
  }

  os << "  <g id=\"points\">\n";
  os << "    <circle class=\"center\" cx=\"0.000000\" cy=\"0.000000\" r=\"" << num(dot) << "\"/>\n";
  for (long j = 0; j <= n; ++j) {
    os << "    <circle class=\"point\" cx=\"" << num(chain.point(j).x()) << "\" cy=\"" << num(-chain.point(j).y())
       << "\" r=\"" << num(dot) << "\"/>\n";
  }
  os << "  </g>\n";

  if (options.labels) {
    os << "  <g id=\"labels\">\n";
    os << "    <text x=\"" << num(-4 * dot) << "\" y=\"" << num(4 * dot) << "\">C</text>\n";
    for (long j = 0; j <= n; ++j) {
      const Point<double> at = chain.point(j) * (1.0 + 6 * dot / r);
      os << "    <text x=\"" << num(at.x()) << "\" y=\"" << num(-at.y()) << "\">P" << j << "</text>\n";
    }
    os << "  </g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace kunstweg
