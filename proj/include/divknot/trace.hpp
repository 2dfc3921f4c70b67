#pragma once

#include "divknot/region.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace divknot {

struct Point {
  long x = 0, y = 0;
  bool operator==(const Point&) const = default;
  auto operator<=>(const Point&) const = default;
};

inline bool is_even(const Point& p) { return ((p.x + p.y) % 2 + 2) % 2 == 0; }

struct TraceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Region together with its lattice offset.
struct PlacedRegion {
  std::variant<LRegion, Rect> region;
  Point offset;

  bool is_lshape() const { return std::holds_alternative<LRegion>(region); }

  /// Concave corner in lattice coordinates (L-shapes only).
  Point concave_corner() const {
    const auto& r = std::get<LRegion>(region);
    return {offset.x + narrow(r.a1, "a1"), offset.y + narrow(r.b1, "b1")};
  }

  bool satisfies_parity() const { return !is_lshape() || !is_even(concave_corner()); }

  std::string to_string() const {
    const std::string body = std::visit([](const auto& r) { return r.to_string(); }, region);
    return body + "@(" + std::to_string(offset.x) + "," + std::to_string(offset.y) + ")";
  }
};

/// Canonical placement: the concave corner lands on an odd point.
inline PlacedRegion place(const LRegion& r) {
  const bool odd = (r.a1 + r.b1) % 2 != 0;
  return {r, Point{odd ? 0 : 1, 0}};
}

inline PlacedRegion place(const Rect& r) { return {r, Point{0, 0}}; }

/// Finite set of unit cells; cell (x, y) is the square [x, x+1] x [y, y+1].
class CellRegion {
 public:
  /// Upper bound on the number of cells accepted.
  static constexpr long kMaxCells = 200'000'000;

  CellRegion(long x0, long y0, long w, long h) : x0_(x0), y0_(y0), w_(w), h_(h) {
    if (w < 0 || h < 0 || (h > 0 && w > kMaxCells / h)) throw std::length_error("cell region too large");
    in_.assign(static_cast<std::size_t>(w * h), 0);
  }

  static CellRegion from(const PlacedRegion& p) {
    const long ox = p.offset.x, oy = p.offset.y;
    if (p.is_lshape()) {
      const auto& r = std::get<LRegion>(p.region);
      const long a1 = narrow(r.a1, "a1"), a2 = narrow(r.a2, "a2");
      const long b1 = narrow(r.b1, "b1"), b2 = narrow(r.b2, "b2");
      CellRegion c(ox, oy, a2, b2);
      for (long y = 0; y < b2; ++y)
        for (long x = 0; x < (y < b1 ? a2 : a1); ++x) c.set(ox + x, oy + y);
      return c;
    }
    const auto& r = std::get<Rect>(p.region);
    const long a = narrow(r.a, "a"), b = narrow(r.b, "b");
    CellRegion c(ox, oy, a, b);
    for (long y = 0; y < b; ++y)
      for (long x = 0; x < a; ++x) c.set(ox + x, oy + y);
    return c;
  }

  bool contains(long x, long y) const {
    if (x < x0_ || y < y0_ || x >= x0_ + w_ || y >= y0_ + h_) return false;
    return in_[static_cast<std::size_t>(id(x, y))] != 0;
  }
  void set(long x, long y) { in_[static_cast<std::size_t>(id(x, y))] = 1; }

  long id(long x, long y) const { return (y - y0_) * w_ + (x - x0_); }
  Point cell_of(long id) const { return {x0_ + id % w_, y0_ + id / w_}; }
  long x0() const { return x0_; }
  long y0() const { return y0_; }
  long width() const { return w_; }
  long height() const { return h_; }
  long slots() const { return w_ * h_; }
  long cell_count() const { return static_cast<long>(std::count(in_.begin(), in_.end(), 1)); }

  /// Mirror image under x -> -x.
  CellRegion reflected() const {
    CellRegion out(-(x0_ + w_), y0_, w_, h_);
    for (long y = y0_; y < y0_ + h_; ++y)
      for (long x = x0_; x < x0_ + w_; ++x)
        if (contains(x, y)) out.set(-x - 1, y);
    return out;
  }

  /// Quarter turn (x, y) -> (-y, x).
  CellRegion rotated() const {
    CellRegion out(-(y0_ + h_), x0_, h_, w_);
    for (long y = y0_; y < y0_ + h_; ++y)
      for (long x = x0_; x < x0_ + w_; ++x)
        if (contains(x, y)) out.set(-y - 1, x);
    return out;
  }

 private:
  long x0_, y0_, w_, h_;
  std::vector<char> in_;
};

struct CurveComponent {
  bool closed = false;
  std::vector<Point> vertices;  // closed curves repeat the first vertex at the end
  std::vector<long> cells;      // traversal order
};

struct DivideTrace {
  int arcs = 0;
  int circles = 0;
  std::vector<Point> endpoints;
  long double_point_count = 0;
  std::vector<Point> double_points;
  /// intersections[i][j]: double points shared by components i and j
  /// (the diagonal counts self-crossings).
  std::vector<std::vector<long>> intersections;
  std::vector<CurveComponent> components;
};

namespace detail {

/// Cells around an even point in the order NE, NW, SW, SE.
inline std::array<long, 4> cells_around(const CellRegion& reg, const Point& p) {
  const std::array<Point, 4> c{{{p.x, p.y}, {p.x - 1, p.y}, {p.x - 1, p.y - 1}, {p.x, p.y - 1}}};
  std::array<long, 4> out{};
  for (int i = 0; i < 4; ++i) out[i] = reg.contains(c[i].x, c[i].y) ? reg.id(c[i].x, c[i].y) : -1;
  return out;
}

/// The two even corners of a cell, joined by its diagonal.
inline std::array<Point, 2> diagonal_of(const Point& cell) {
  if (is_even(cell)) return {{{cell.x, cell.y}, {cell.x + 1, cell.y + 1}}};
  return {{{cell.x + 1, cell.y}, {cell.x, cell.y + 1}}};
}

}  // namespace detail

/// Decomposes the curve X inside the region into arcs and circles.
inline DivideTrace trace(const CellRegion& reg) {
  DivideTrace out;
  std::vector<int> comp(static_cast<std::size_t>(reg.slots()), -1);

  auto degree = [&](const std::array<long, 4>& around) {
    return static_cast<int>(std::count_if(around.begin(), around.end(), [](long c) { return c >= 0; }));
  };
  // Cell continuing the curve through p after arriving by `from`; -1 at an endpoint.
  auto next_cell = [&](const Point& p, long from) -> long {
    const auto around = detail::cells_around(reg, p);
    const int deg = degree(around);
    if (deg == 1) return -1;
    if (deg == 3)
      throw TraceError("curve reaches a concave corner at (" + std::to_string(p.x) + "," +
                       std::to_string(p.y) + "); region is misplaced");
    int at = -1;
    for (int i = 0; i < 4; ++i)
      if (around[i] == from) at = i;
    if (at < 0) throw TraceError("inconsistent visit bookkeeping");
    if (deg == 4) return around[(at + 2) % 4];
    for (int i = 0; i < 4; ++i)
      if (i != at && around[i] >= 0) return around[i];
    throw TraceError("inconsistent visit bookkeeping");
  };
  auto other_end = [&](long cell, const Point& p) {
    const auto d = detail::diagonal_of(reg.cell_of(cell));
    return d[0] == p ? d[1] : d[0];
  };
  auto walk = [&](long cell, Point p, CurveComponent& c, int id) {
    const long start = cell;
    c.vertices.push_back(p);
    while (true) {
      if (comp[static_cast<std::size_t>(cell)] >= 0) throw TraceError("cell visited twice");
      comp[static_cast<std::size_t>(cell)] = id;
      c.cells.push_back(cell);
      p = other_end(cell, p);
      c.vertices.push_back(p);
      const long nxt = next_cell(p, cell);
      if (nxt < 0 || nxt == start) return;
      cell = nxt;
    }
  };

  // Arcs from even endpoints, scanned row by row.
  for (long y = reg.y0(); y <= reg.y0() + reg.height(); ++y)
    for (long x = reg.x0(); x <= reg.x0() + reg.width(); ++x) {
      const Point p{x, y};
      if (!is_even(p)) continue;
      const auto around = detail::cells_around(reg, p);
      const int deg = degree(around);
      if (deg == 3)
        throw TraceError("even concave corner at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      if (deg == 4) out.double_points.push_back(p);
      if (deg != 1) continue;
      out.endpoints.push_back(p);
      const long cell = *std::find_if(around.begin(), around.end(), [](long c) { return c >= 0; });
      if (comp[static_cast<std::size_t>(cell)] >= 0) continue;  // far end of a traced arc
      CurveComponent c;
      walk(cell, p, c, static_cast<int>(out.components.size()));
      out.components.push_back(std::move(c));
      ++out.arcs;
    }
  // Remaining cells lie on closed curves.
  for (long cell = 0; cell < reg.slots(); ++cell) {
    const Point cp = reg.cell_of(cell);
    if (!reg.contains(cp.x, cp.y) || comp[static_cast<std::size_t>(cell)] >= 0) continue;
    CurveComponent c;
    c.closed = true;
    walk(cell, detail::diagonal_of(cp)[0], c, static_cast<int>(out.components.size()));
    out.components.push_back(std::move(c));
    ++out.circles;
  }
  if (out.endpoints.size() != 2 * static_cast<std::size_t>(out.arcs))
    throw TraceError("endpoint count does not match arc count");

  out.double_point_count = static_cast<long>(out.double_points.size());
  const std::size_t n = out.components.size();
  out.intersections.assign(n, std::vector<long>(n, 0));
  for (const auto& p : out.double_points) {
    const auto around = detail::cells_around(reg, p);
    const auto i = static_cast<std::size_t>(comp[static_cast<std::size_t>(around[0])]);
    const auto j = static_cast<std::size_t>(comp[static_cast<std::size_t>(around[1])]);
    ++out.intersections[i][j];
    if (i != j) ++out.intersections[j][i];
  }
  return out;
}

inline DivideTrace trace(const PlacedRegion& p) {
  if (!p.satisfies_parity())
    throw TraceError("placement " + p.to_string() + " puts the concave corner on an even point");
  return trace(CellRegion::from(p));
}

inline bool is_immersed_arc(const DivideTrace& t) { return t.arcs == 1 && t.circles == 0; }

struct Segment {
  Point from, to;
  int component;
  bool operator==(const Segment&) const = default;
};

/// Every diagonal unit segment of the curve, tagged with its component.
inline std::vector<Segment> curve_geometry(const DivideTrace& t) {
  std::vector<Segment> out;
  for (std::size_t c = 0; c < t.components.size(); ++c) {
    const auto& v = t.components[c].vertices;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back({v[i], v[i + 1], static_cast<int>(c)});
  }
  return out;
}

inline std::vector<Segment> curve_geometry(const PlacedRegion& p) { return curve_geometry(trace(p)); }

}  // namespace divknot
