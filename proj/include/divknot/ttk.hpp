#pragma once

#include "divknot/cp_braid.hpp"
#include "divknot/invar.hpp"
#include "divknot/lshape.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace divknot {

/// T(p,q; r,s): the torus knot T(p,q) with s full twists on r adjacent strands
/// (after stabilizing to r strands when r > p).
struct TwistedTorus {
  long p, q, r, s;

  TwistedTorus(long p_, long q_, long r_, long s_) : p(p_), q(q_), r(r_), s(s_) {
    if (p < 1 || q < 1) throw std::invalid_argument("T(p,q;r,s) needs positive p, q");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("T(p,q;r,s) needs coprime p, q");
    if (r < 1 || r == p) throw std::invalid_argument("T(p,q;r,s) needs 0 < r != p");
    if (s < 1) throw std::invalid_argument("T(p,q;r,s) needs s > 0");
  }

  bool operator==(const TwistedTorus&) const = default;

  std::string to_string() const {
    return "T(" + std::to_string(p) + "," + std::to_string(q) + ";" + std::to_string(r) + "," +
           std::to_string(s) + ")";
  }
};

inline LRegion ttk_region(const TwistedTorus& k) {
  if (k.r < k.p) return LRegion(k.q, k.q + k.r * k.s, k.r, k.p);
  return LRegion(k.r * k.s + 1, k.q + k.r * k.s, k.p, k.r);
}

/// Braid built directly from the twisting description, independent of the region.
inline BraidWord ttk_braid(const TwistedTorus& k) {
  if (k.r < k.p) {
    const int n = static_cast<int>(k.p);
    return full_twist(W(n, n).power(k.q), static_cast<int>(k.r), k.s);
  }
  const int n = static_cast<int>(k.r);
  BraidWord w = W(static_cast<int>(k.p), n).power(k.q);
  for (int i = static_cast<int>(k.p); i < n; ++i) w.push(i);
  return full_twist(w, n, k.s);
}

/// One entry of the list identifying Berge knots with twisted torus knots.
struct TtkIdentity {
  int id;
  KnotType type;
  int delta, epsilon;
  long t;
  const char* label;
  /// Twisted torus parameters as a function of (A, k).
  TwistedTorus (*target)(long A, long k);
};

inline const std::vector<TtkIdentity>& ttk_identities() {
  static const std::vector<TtkIdentity> list = {
      {1, KnotType::III, 1, -1, 0, "K_III(1,-1,A,k,0) = T(2A+1,A+1;2A,k+1)",
       [](long A, long k) { return TwistedTorus(2 * A + 1, A + 1, 2 * A, k + 1); }},
      {2, KnotType::IV, -1, 1, 0, "K_IV(-1,1,A,k,0) = T(A,kA+(3A+1)/2;A-1,1)",
       [](long A, long k) { return TwistedTorus(A, k * A + (3 * A + 1) / 2, A - 1, 1); }},
      {3, KnotType::V, -1, 1, 0, "K_V(-1,1,A,k,0) = T(A,(k+1)A+2;A-1,1)",
       [](long A, long k) { return TwistedTorus(A, (k + 1) * A + 2, A - 1, 1); }},
      {4, KnotType::VI, 1, -1, 0, "K_VI(1,-1,A,0,0) = T(A-1,A+1;A,1)",
       [](long A, long) { return TwistedTorus(A - 1, A + 1, A, 1); }},
      {5, KnotType::III, 1, 1, -1, "K_III(1,1,A,k,-1) = T(A,A+1;A-1,k+2)",
       [](long A, long k) { return TwistedTorus(A, A + 1, A - 1, k + 2); }},
      {6, KnotType::IV, -1, -1, -1, "K_IV(-1,-1,A,k,-1) = T((3A-1)/2,A;(3A+1)/2,k+1)",
       [](long A, long k) { return TwistedTorus((3 * A - 1) / 2, A, (3 * A + 1) / 2, k + 1); }},
      {7, KnotType::V, -1, -1, -1, "K_V(-1,-1,A,k,-1) = T(2A-2,A;2A-1,k+1)",
       [](long A, long k) { return TwistedTorus(2 * A - 2, A, 2 * A - 1, k + 1); }},
  };
  return list;
}

enum class Verdict { region_match, profile_match, mismatch };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::region_match: return "region_match";
    case Verdict::profile_match: return "profile_match";
    case Verdict::mismatch: return "mismatch";
  }
  return "?";
}

struct AuditRow {
  int identity;
  std::string label;
  BergeParams params;
  std::string target;
  LRegion berge_region;
  LRegion ttk_region;
  Verdict verdict;
  /// Whether the identity is expected to hold here (t = 0, or t = -1 with k = 0).
  bool expected;
  /// Genus of each side (both closures are positive after cyclic reduction).
  std::optional<long> berge_genus, ttk_genus;
  /// Twisting braid and region braid of the twisted torus knot share a profile.
  bool region_presents_ttk;
};

struct AuditSpec {
  long max_A = 11;
  long max_k = 3;
  ProfileCaps caps{};
};

/// Compares every listed identity on the (A, k) grid: region equality first,
/// invariant profiles as the fallback.
inline std::vector<AuditRow> audit_lemma62(const AuditSpec& spec = {}) {
  std::vector<AuditRow> rows;
  for (const auto& id : ttk_identities()) {
    for (long A = 2; A <= spec.max_A; ++A) {
      for (long k = 0; k <= spec.max_k; ++k) {
        if (id.type == KnotType::VI && k > 0) continue;
        BergeParams p;
        try {
          p = validate(id.type, id.delta, id.epsilon, A, k, id.t);
        } catch (const InvalidParams&) {
          continue;
        }
        const BergeRecord rec = derive(p);
        const TwistedTorus tk = id.target(A, k);
        const LRegion br = region_for(rec);
        const LRegion tr = ttk_region(tk);
        const BraidWord tb = ttk_braid(tk);
        const KnotProfile tp = profile(tb, spec.caps);
        AuditRow row{id.id, id.label, p, tk.to_string(), br, tr, Verdict::mismatch,
                     id.t == 0 || k == 0, std::nullopt, tp.genus, false};
        row.region_presents_ttk = compare_profiles(tp, profile(cp_braid(tr), spec.caps)).agree;
        const KnotProfile bp = profile(berge_braid(positive_record(p)), spec.caps);
        row.berge_genus = bp.genus;
        if (br == tr || br == swap(tr)) {
          row.verdict = Verdict::region_match;
        } else {
          const auto cmp = compare_profiles(bp, tp);
          if (cmp.agree && (cmp.genus_compared || cmp.alexander_compared)) row.verdict = Verdict::profile_match;
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

struct ChainStep {
  LRegion region;
  /// The braid presents swap(region) rather than region.
  bool swapped;
  BraidWord braid;
};

/// Twisting sequence from the k = t = 0 knot: k full twists realizing the
/// k squares (on the side-exchanged presentation, where that edge becomes a
/// twisting edge), then t full twists on all strands for the bottom squares.
/// Length k + t + 1; every braid is positive.
inline std::vector<ChainStep> two_twist_chain(const BergeRecord& rec) {
  const auto& p = rec.params;
  if (p.t < 0) throw std::invalid_argument("two-twist chain needs t >= 0 (use the mirror for t < 0)");
  const long k = narrow(p.k, "k");
  const long t = narrow(p.t, "t");
  std::vector<ChainStep> chain;
  LRegion r = base_region(p.type, p.epsilon, p.A);
  chain.push_back({r, true, cp_braid(swap(r))});
  const Edge kedge = p.epsilon == 1 ? Edge::long_arm_b2 : Edge::short_arm_b1;
  for (long i = 0; i < k && p.type != KnotType::VI; ++i) {
    // Seen from the exchanged sides, the short arm is the top edge (b1 strands)
    // and the long arm is the bottom edge (all b2 strands).
    const int width = narrow<int>(kedge == Edge::short_arm_b1 ? r.b1 : r.b2, "twist width");
    BraidWord next = full_twist(chain.back().braid, width, 1);
    r = add_squares(r, {kedge, 1});
    chain.push_back({r, true, std::move(next)});
  }
  BraidWord unswapped = cp_braid(r);
  for (long i = 0; i < t; ++i) {
    const int width = narrow<int>(r.a2, "a2");
    unswapped = full_twist(unswapped, width, 1);
    r = add_squares(r, {Edge::bottom_a2, 1});
    chain.push_back({r, false, unswapped});
  }
  for (const auto& s : chain)
    if (!s.braid.is_positive()) throw std::logic_error("two-twist chain produced a non-positive word");
  return chain;
}

}  // namespace divknot
