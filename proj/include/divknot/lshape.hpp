#pragma once

#include "divknot/berge.hpp"
#include "divknot/region.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace divknot {

/// The edge along which squares are glued.
///   short_arm_b1: right end of the a2 x b1 arm (length b1)
///   long_arm_b2:  top of the tall part, glued on the left (length b2)
///   bottom_a2:    bottom edge (length a2)
///   top_a1:       top edge of the tall part (length a1)
enum class Edge { short_arm_b1, long_arm_b2, bottom_a2, top_a1 };

inline const char* to_string(Edge e) {
  switch (e) {
    case Edge::short_arm_b1: return "short_arm_b1";
    case Edge::long_arm_b2: return "long_arm_b2";
    case Edge::bottom_a2: return "bottom_a2";
    case Edge::top_a1: return "top_a1";
  }
  return "?";
}

inline Edge parse_edge(std::string_view s) {
  for (Edge e : {Edge::short_arm_b1, Edge::long_arm_b2, Edge::bottom_a2, Edge::top_a1})
    if (s == to_string(e)) return e;
  throw std::invalid_argument("unknown edge '" + std::string(s) + "'");
}

struct SquareMove {
  Edge edge;
  Int n;
  bool operator==(const SquareMove&) const = default;
  std::string to_string() const {
    return (n > 0 ? "+" : "") + n.str() + " " + divknot::to_string(edge);
  }
};

/// How to read the top-edge move. `printed` grows b2 by n*a2 instead of n*a1;
/// it exists only for auditing that reading.
enum class TopEdgeReading { corrected, printed };

inline LRegion add_squares(const LRegion& r, const SquareMove& m,
                           TopEdgeReading reading = TopEdgeReading::corrected) {
  const Int& n = m.n;
  if (n == 0) throw std::invalid_argument("adding squares needs n != 0");
  if (n < 0) {
    if (m.edge != Edge::bottom_a2)
      throw std::invalid_argument("negative squares are only defined along bottom_a2");
    if (r.b2 != r.b1 + 1)
      throw std::invalid_argument("negative squares need b2 = b1 + 1, got " + r.to_string());
    const Int na2 = -n * r.a2;
    if (!(na2 > r.b1 + 1))
      throw std::invalid_argument("negative squares need |n| a2 > b1 + 1 for " + r.to_string());
    return LRegion(r.a2 - r.a1 + 1, r.a2, na2 - r.b1 - 1, na2 - r.b1);
  }
  switch (m.edge) {
    case Edge::short_arm_b1: return LRegion(r.a1, r.a2 + n * r.b1, r.b1, r.b2);
    case Edge::long_arm_b2: return LRegion(r.a1 + n * r.b2, r.a2 + n * r.b2, r.b1, r.b2);
    case Edge::bottom_a2: return LRegion(r.a1, r.a2, r.b1 + n * r.a2, r.b2 + n * r.a2);
    case Edge::top_a1:
      return LRegion(r.a1, r.a2, r.b1, r.b2 + n * (reading == TopEdgeReading::corrected ? r.a1 : r.a2));
  }
  throw std::logic_error("unreachable");
}

/// Closed-form region presenting the Berge knot with the positive-coefficient
/// sign delta = delta_choice(epsilon, t).
inline LRegion region_for(const BergeRecord& any_delta) {
  const BergeRecord r = positive_record(any_delta.params);
  const Int m = r.params.A + 1 - r.a;
  if (r.b <= 0) throw std::logic_error("non-positive b for " + r.params.to_string());
  if (r.params.delta == 1) return LRegion(m, r.B, r.b, r.b + 1);
  return LRegion(r.B - m + 1, r.B, r.b - 1, r.b);
}

inline LRegion region_for(KnotType type, int epsilon, const Int& A, const Int& k, const Int& t) {
  return region_for(derive(type, delta_choice(epsilon, t), epsilon, A, k, t));
}

struct MoveConstruction {
  LRegion base;
  std::vector<SquareMove> moves;

  LRegion result() const {
    LRegion r = base;
    for (const auto& m : moves) r = add_squares(r, m);
    return r;
  }
};

/// Base region of the (type, epsilon) family at k = t = 0.
inline LRegion base_region(KnotType type, int epsilon, const Int& A) {
  switch (type) {
    case KnotType::III:
      if (epsilon == 1) return LRegion(2 * A - 1, 3 * A - 1, 2 * A - 1, 2 * A);
      return LRegion(A + 1, 3 * A + 1, 2 * A, 2 * A + 1);
    case KnotType::IV:
      if (epsilon == 1) return LRegion((3 * A + 1) / 2, (5 * A - 1) / 2, A - 1, A);
      return LRegion(A, (5 * A + 1) / 2, A, A + 1);
    case KnotType::V:
      if (epsilon == 1) return LRegion(A + 2, 2 * A + 1, A - 1, A);
      return LRegion(A, 3 * A - 1, A, A + 1);
    case KnotType::VI: return LRegion(A + 1, 2 * A + 1, A - 1, A);
  }
  throw std::logic_error("unreachable");
}

/// Base region plus k squares (long arm for epsilon = 1, short arm for
/// epsilon = -1), then t squares along the bottom edge.
inline MoveConstruction region_by_moves(const BergeParams& p) {
  MoveConstruction mc{base_region(p.type, p.epsilon, p.A), {}};
  if (p.k != 0 && p.type != KnotType::VI)
    mc.moves.push_back({p.epsilon == 1 ? Edge::long_arm_b2 : Edge::short_arm_b1, p.k});
  if (p.t != 0) mc.moves.push_back({Edge::bottom_a2, p.t});
  return mc;
}

inline MoveConstruction region_by_moves(KnotType type, int epsilon, const Int& A, const Int& k, const Int& t) {
  return region_by_moves(validate(type, delta_choice(epsilon, t), epsilon, A, k, t));
}

struct RelationMove {
  SquareMove move;
  bool swapped;  // target matched after exchanging the a and b sides
};

namespace detail {

/// Positive n with to = add_squares(from, {edge, n}), if any.
inline std::optional<SquareMove> solve_move(const LRegion& from, const LRegion& to) {
  auto quotient = [](const Int& diff, const Int& len) -> std::optional<Int> {
    if (diff <= 0 || diff % len != 0) return std::nullopt;
    return diff / len;
  };
  if (from.a1 == to.a1 && from.b1 == to.b1 && from.b2 == to.b2)
    if (auto n = quotient(to.a2 - from.a2, from.b1)) return SquareMove{Edge::short_arm_b1, *n};
  if (from.b1 == to.b1 && from.b2 == to.b2)
    if (auto n = quotient(to.a1 - from.a1, from.b2))
      if (to.a2 - from.a2 == *n * from.b2) return SquareMove{Edge::long_arm_b2, *n};
  if (from.a1 == to.a1 && from.a2 == to.a2)
    if (auto n = quotient(to.b1 - from.b1, from.a2))
      if (to.b2 - from.b2 == *n * from.a2) return SquareMove{Edge::bottom_a2, *n};
  if (from.a1 == to.a1 && from.a2 == to.a2 && from.b1 == to.b1)
    if (auto n = quotient(to.b2 - from.b2, from.a1)) return SquareMove{Edge::top_a1, *n};
  return std::nullopt;
}

}  // namespace detail

/// A single positive adding-squares move from region_for(r1) to region_for(r2),
/// up to exchanging sides of the target.
inline std::optional<RelationMove> relation_search(const BergeRecord& r1, const BergeRecord& r2) {
  const LRegion from = region_for(r1);
  const LRegion to = region_for(r2);
  if (auto m = detail::solve_move(from, to)) return RelationMove{*m, false};
  if (auto m = detail::solve_move(from, swap(to))) return RelationMove{*m, true};
  return std::nullopt;
}

}  // namespace divknot
