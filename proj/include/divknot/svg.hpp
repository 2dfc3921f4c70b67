#pragma once

#include "divknot/trace.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace divknot {

struct SvgOptions {
  double scale = 24.0;    // pixels per lattice unit
  double margin = 12.0;   // pixels
  double corner = 0.3;    // rounding at reflection vertices, lattice units
  bool mark_double_points = true;
};

namespace detail {

inline std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

struct SvgFrame {
  double minx, maxy, scale, margin;
  std::string x(double v) const { return fmt2((v - minx) * scale + margin); }
  std::string y(double v) const { return fmt2((maxy - v) * scale + margin); }
};

inline std::vector<Point> outline_of(const PlacedRegion& p) {
  const long ox = p.offset.x, oy = p.offset.y;
  if (p.is_lshape()) {
    const auto& r = std::get<LRegion>(p.region);
    const long a1 = narrow(r.a1, "a1"), a2 = narrow(r.a2, "a2");
    const long b1 = narrow(r.b1, "b1"), b2 = narrow(r.b2, "b2");
    return {{ox, oy}, {ox + a2, oy}, {ox + a2, oy + b1}, {ox + a1, oy + b1}, {ox + a1, oy + b2}, {ox, oy + b2}};
  }
  const auto& r = std::get<Rect>(p.region);
  const long a = narrow(r.a, "a"), b = narrow(r.b, "b");
  return {{ox, oy}, {ox + a, oy}, {ox + a, oy + b}, {ox, oy + b}};
}

}  // namespace detail

/// Region outline, the curve with rounded reflection corners, and optional
/// double-point markers. Output depends only on the input and options.
inline std::string render_svg(const PlacedRegion& p, const SvgOptions& opt = {}) {
  const DivideTrace tr = trace(p);
  const auto outline = detail::outline_of(p);
  long minx = outline[0].x, maxx = minx, miny = outline[0].y, maxy = miny;
  for (const auto& q : outline) {
    minx = std::min(minx, q.x);
    maxx = std::max(maxx, q.x);
    miny = std::min(miny, q.y);
    maxy = std::max(maxy, q.y);
  }
  const detail::SvgFrame f{static_cast<double>(minx), static_cast<double>(maxy), opt.scale, opt.margin};
  const std::string W = detail::fmt2(static_cast<double>(maxx - minx) * opt.scale + 2 * opt.margin);
  const std::string H = detail::fmt2(static_cast<double>(maxy - miny) * opt.scale + 2 * opt.margin);
  static const char* palette[] = {"#c0392b", "#2471a3", "#1e8449", "#7d3c98", "#b9770e", "#17202a"};

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + W + "\" height=\"" + H + "\" viewBox=\"0 0 " + W +
       " " + H + "\">\n";
  s += "<title>" + p.to_string() + "</title>\n";
  s += "<polygon fill=\"#f4f6f7\" stroke=\"#566573\" stroke-width=\"1.50\" points=\"";
  for (std::size_t i = 0; i < outline.size(); ++i) {
    if (i) s += ' ';
    s += f.x(static_cast<double>(outline[i].x)) + "," + f.y(static_cast<double>(outline[i].y));
  }
  s += "\"/>\n";

  for (std::size_t c = 0; c < tr.components.size(); ++c) {
    const auto& comp = tr.components[c];
    std::vector<Point> v = comp.vertices;
    if (comp.closed) v.pop_back();
    const std::size_t n = v.size();
    auto pt = [&](double x, double y) { return f.x(x) + "," + f.y(y); };
    // Vertex i turns when the incoming and outgoing steps differ.
    auto turns = [&](std::size_t i) {
      const Point& a = v[(i + n - 1) % n];
      const Point& b = v[i];
      const Point& d = v[(i + 1) % n];
      return (b.x - a.x) != (d.x - b.x) || (b.y - a.y) != (d.y - b.y);
    };
    std::string path;
    std::size_t start = 0;
    if (comp.closed) {
      // Begin at a straight vertex when one exists so the path closes cleanly.
      for (std::size_t i = 0; i < n; ++i)
        if (!turns(i)) {
          start = i;
          break;
        }
    }
    const Point& s0 = v[start];
    path += "M" + pt(static_cast<double>(s0.x), static_cast<double>(s0.y));
    const std::size_t steps = comp.closed ? n : n - 1;
    for (std::size_t k = 1; k <= steps; ++k) {
      const std::size_t i = (start + k) % n;
      const Point& b = v[i];
      const bool interior = comp.closed || k < steps;
      if (interior && turns(i)) {
        const Point& a = v[(i + n - 1) % n];
        const Point& d = v[(i + 1) % n];
        const double r = opt.corner;
        const double ix = static_cast<double>(b.x) - r * static_cast<double>(b.x - a.x);
        const double iy = static_cast<double>(b.y) - r * static_cast<double>(b.y - a.y);
        const double ox = static_cast<double>(b.x) + r * static_cast<double>(d.x - b.x);
        const double oy = static_cast<double>(b.y) + r * static_cast<double>(d.y - b.y);
        path += " L" + pt(ix, iy) + " Q" + pt(static_cast<double>(b.x), static_cast<double>(b.y)) + " " + pt(ox, oy);
      } else {
        path += " L" + pt(static_cast<double>(b.x), static_cast<double>(b.y));
      }
    }
    if (comp.closed) path += " Z";
    s += "<path fill=\"none\" stroke=\"" + std::string(palette[c % 6]) +
         "\" stroke-width=\"2.00\" stroke-linejoin=\"round\" d=\"" + path + "\"/>\n";
  }

  if (opt.mark_double_points) {
    s += "<g fill=\"none\" stroke=\"#17202a\" stroke-width=\"1.00\">\n";
    for (const auto& q : tr.double_points)
      s += "<circle cx=\"" + f.x(static_cast<double>(q.x)) + "\" cy=\"" + f.y(static_cast<double>(q.y)) +
           "\" r=\"" + detail::fmt2(0.18 * opt.scale) + "\"/>\n";
    s += "</g>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace divknot
