#pragma once

#include "divknot/atlas.hpp"
#include "divknot/ttk.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace divknot {

struct SuiteResult {
  std::string name;
  long passed = 0;
  long failed = 0;
  long open = 0;
  double seconds = 0;
  std::vector<std::string> failures;   // first few only
  std::vector<std::string> open_rows;  // known-open rows, never failures
  std::vector<std::string> notes;      // report-only figures

  bool ok() const { return failed == 0; }

  void expect(bool cond, const std::string& what) {
    if (cond) {
      ++passed;
      return;
    }
    ++failed;
    if (failures.size() < 50) failures.push_back(what);
  }
  void open_row(const std::string& what) {
    ++open;
    open_rows.push_back(what);
  }
};

struct VerifyConfig {
  SweepSpec sweep = [] {
    SweepSpec s;
    s.alexander = false;
    return s;
  }();
  int claims_max_a2 = 10;
  int claims_max_b2 = 6;
  long ttk_max_A = 11;
  long ttk_max_k = 3;
  long relations_max_A = 11;
  long relations_max_k = 3;
  int shift_pair_max_a2 = 8;
  int shift_pair_max_c = 5;
  int torus_max = 9;
  long seifert_max_genus = 12;  // Bareiss cross-check size limit
  long budget = budget_from_env();
  ProfileCaps caps{};
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"berge", "lshape", "lemma53", "trace",
                                              "claims", "invar", "ttk", "relations"};
  return names;
}

/// Canonical suite name for a user-facing name or alias; empty when unknown.
inline std::string canonical_suite(const std::string& s) {
  static const std::map<std::string, std::string> alias{
      {"braid-claims", "claims"}, {"braid", "claims"}, {"invar-cross", "invar"}, {"ttk-audit", "ttk"}};
  if (auto it = alias.find(s); it != alias.end()) return it->second;
  for (const auto& n : suite_names())
    if (n == s) return n;
  return {};
}

namespace detail {

inline std::string pstr(const BergeParams& p) { return p.to_string(); }

inline void suite_berge(SuiteResult& r, const VerifyConfig& cfg) {
  SweepSpec s = cfg.sweep;
  s.both_signs = true;
  for (const auto& p : sweep_params(s)) {
    const BergeRecord rec = derive(p);
    r.expect(coef_closed_form(rec) == rec.coef, "closed form differs from bB+dA at " + pstr(p));
    r.expect(2 * p.A < rec.B, "2A < B fails at " + pstr(p));
    if (p.type == KnotType::IV) r.expect((p.A * rec.l - p.epsilon) % 2 == 0, "A*l - eps odd at " + pstr(p));
    BergeParams m = p;
    m.delta = -p.delta;
    const BergeRecord mr = derive(m);
    r.expect(mr.b == -rec.b && mr.coef == -rec.coef, "mirror does not negate b and coef at " + pstr(p));
    const NP np = translate_ak(p.type, p.epsilon, p.A, p.k);
    const AK back = translate_np(p.type, p.epsilon, np.n, np.p);
    r.expect(back.A == p.A && back.k == p.k, "parameter translation round trip fails at " + pstr(p));
  }
}

inline Int edge_length(const LRegion& r, Edge e) {
  switch (e) {
    case Edge::short_arm_b1: return r.b1;
    case Edge::long_arm_b2: return r.b2;
    case Edge::bottom_a2: return r.a2;
    case Edge::top_a1: return r.a1;
  }
  return 0;
}

inline void suite_lshape(SuiteResult& r, const VerifyConfig& cfg) {
  for (const auto& p : sweep_params(cfg.sweep)) {
    const LRegion reg = region_for(derive(p));
    const MoveConstruction mc = region_by_moves(p);
    r.expect(mc.result() == reg, "squares construction differs from closed form at " + pstr(p));
    LRegion cur = mc.base;
    for (const auto& m : mc.moves) {
      const LRegion next = add_squares(cur, m);
      const Int x = edge_length(cur, m.edge);
      const Int expect_area = m.n > 0 ? area(cur) + m.n * x * x : -m.n * x * x - area(cur) + 1;
      r.expect(area(next) == expect_area, "area law of " + m.to_string() + " fails on " + cur.to_string());
      cur = next;
    }
    r.expect(area(reg) - 2 * double_points(reg) == reg.a2 + reg.b2 - 1,
             "area - 2d != a2 + b2 - 1 for " + reg.to_string());
    const LRegion sw = swap(reg);
    r.expect(swap(sw) == reg && area(sw) == area(reg) && double_points(sw) == double_points(reg),
             "swap is not an invariant involution on " + reg.to_string());
  }
  // Squares on an arm equal squares on the matching edge of the exchanged
  // region; only the corrected top-edge reading makes this hold.
  long printed_breaks = 0, samples = 0;
  for (int a1 = 1; a1 <= 6; ++a1)
    for (int a2 = a1 + 1; a2 <= 8; ++a2)
      for (int b1 = 1; b1 <= 5; ++b1)
        for (int n = 1; n <= 2; ++n) {
          const LRegion reg(a1, a2, b1, b1 + 1 + n);
          const LRegion lhs = swap(add_squares(reg, {Edge::short_arm_b1, n}));
          r.expect(lhs == add_squares(swap(reg), {Edge::top_a1, n}),
                   "short arm / top edge symmetry fails on " + reg.to_string());
          ++samples;
          if (lhs != add_squares(swap(reg), {Edge::top_a1, n}, TopEdgeReading::printed)) ++printed_breaks;
        }
  r.notes.push_back("printed top-edge reading breaks the side-exchange symmetry in " +
                    std::to_string(printed_breaks) + " of " + std::to_string(samples) + " samples");
}

inline void suite_area_selector(SuiteResult& r, const VerifyConfig& cfg) {
  SweepSpec s = cfg.sweep;
  s.both_signs = true;
  for (const auto& p : sweep_params(s)) {
    const BergeRecord rec = derive(p);
    const BergeRecord pos = positive_record(p);
    const LRegion reg = region_for(pos);
    const Int gap = area(reg) - abs_of(rec.coef);
    const int selector = (rec.a == 0 ? 1 : -1) * p.epsilon * sign_of(p.t);
    r.expect(gap == (selector == 1 ? 0 : 1), "area - |coef| = " + gap.str() + " at " + pstr(p));
    r.expect(pos.coef > 0, "coefficient not positive for delta_x at " + pstr(p));
  }
}

inline void suite_trace(SuiteResult& r, const VerifyConfig& cfg) {
  for (const auto& p : sweep_params(cfg.sweep)) {
    const LRegion reg = region_for(derive(p));
    const PlacedRegion pl = place(reg);
    const CellRegion cells = CellRegion::from(pl);
    const DivideTrace tr = trace(cells);
    r.expect(is_immersed_arc(tr), "not a single arc: " + reg.to_string());
    const long g = bennequin_genus(cp_braid(reg));
    r.expect(tr.double_point_count == double_points(reg) && g == tr.double_point_count,
             "double points / genus disagree on " + reg.to_string());
    const DivideTrace rf = trace(cells.reflected());
    const DivideTrace rt = trace(cells.rotated());
    r.expect(rf.arcs == tr.arcs && rf.circles == tr.circles && rf.double_point_count == tr.double_point_count &&
                 rt.arcs == tr.arcs && rt.circles == tr.circles && rt.double_point_count == tr.double_point_count,
             "trace not invariant under reflection/rotation on " + reg.to_string());
    long sum = 0;
    for (std::size_t i = 0; i < tr.intersections.size(); ++i)
      for (std::size_t j = i; j < tr.intersections.size(); ++j) sum += tr.intersections[i][j];
    r.expect(sum == tr.double_point_count, "crossing matrix does not sum to double points on " + reg.to_string());
  }
  for (long a = 1; a <= 12; ++a)
    for (long b = 1; b <= 12; ++b) {
      const DivideTrace tr = trace(place(Rect(a, b)));
      r.expect((tr.components.size() == 1) == (std::gcd(a, b) == 1),
               "rectangle " + std::to_string(a) + "x" + std::to_string(b) + " component count");
      // An arc gives one link component, a circle two.
      r.expect(tr.arcs + 2 * tr.circles == std::gcd(a, b),
               "rectangle " + std::to_string(a) + "x" + std::to_string(b) + " link components != gcd");
    }
}

inline void suite_claims(SuiteResult& r, const VerifyConfig& cfg) {
  const long bud = cfg.budget;
  for (int n = 3; n <= cfg.claims_max_a2; ++n)
    r.expect(check_w_conjugation(n, bud), "G(n-2) conjugation to W(n) fails at n=" + std::to_string(n));
  for (int a2 = 3; a2 <= cfg.claims_max_a2; ++a2)
    for (int a1 = 2; a1 < a2; ++a1) {
      const std::string at = " at (a1,a2)=(" + std::to_string(a1) + "," + std::to_string(a2) + ")";
      r.expect(check_h_commutes(a1, a2, bud), "H commutation fails" + at);
      r.expect(check_omega_short(a1, a2, bud), "Omega conjugation of e(a1)o(a1) fails" + at);
      r.expect(check_omega_long(a1, a2, bud), "Omega conjugation of e(a2)o(a2) fails" + at);
      for (int b2 = 2; b2 <= cfg.claims_max_b2; ++b2)
        for (int b1 = 1; b1 < b2; ++b1) {
          const LRegion reg(a1, a2, b1, b2);
          r.expect(check_conjugated_alternating(reg, bud), "conjugated alternating form fails on " + reg.to_string());
        }
    }
}

inline void suite_invar(SuiteResult& r, const VerifyConfig& cfg) {
  const LaurentPoly lehmer(0, {1, -1, 0, 1, -1, 1, -1, 1, 0, -1, 1});
  const BraidWord p237 = cp_braid(LRegion(3, 5, 3, 4));
  r.expect(alexander(p237) == lehmer && alexander_seifert(p237) == lehmer, "P(-2,3,7) polynomial");

  long swap_alex = 0, swap_total = 0, seifert_checked = 0;
  for (const auto& p : sweep_params(cfg.sweep)) {
    const LRegion reg = region_for(derive(p));
    const BraidWord w = cp_braid(reg);
    const KnotProfile pr = profile(w, cfg.caps);
    const long g = *pr.genus;
    if (pr.alexander) {
      r.expect(pr.alexander->span() == 2 * g, "degree span != 2g on " + reg.to_string());
      const Int at1 = pr.alexander->evaluate(1);
      r.expect(at1 == 1 || at1 == -1, "Alexander(1) != +-1 on " + reg.to_string());
      if (g <= cfg.seifert_max_genus) {
        r.expect(alexander_seifert(w) == *pr.alexander, "Burau and Seifert disagree on " + reg.to_string());
        ++seifert_checked;
      }
    }
    const KnotProfile ps = profile(cp_braid(swap(reg)), cfg.caps);
    const auto cmp = compare_profiles(pr, ps);
    r.expect(cmp.agree && cmp.genus_compared, "side exchange changes the profile of " + reg.to_string());
    ++swap_total;
    if (cmp.alexander_compared) ++swap_alex;
    const Int mag = positive_record(p).coef;
    r.expect(mag - 2 * g == reg.a2 + reg.b2 - 1 - (area(reg) - mag), "|coef| - 2g relation fails on " + reg.to_string());
  }
  r.notes.push_back("side-exchange pairs: " + std::to_string(swap_total) + " compared, " +
                    std::to_string(swap_alex) + " with Alexander polynomials");
  r.notes.push_back("Burau/Seifert cross-checks: " + std::to_string(seifert_checked));

  for (int a = 2; a <= cfg.torus_max; ++a)
    for (int b = a + 1; b <= cfg.torus_max; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const std::string at = " T(" + std::to_string(a) + "," + std::to_string(b) + ")";
      const DivideTrace tr = trace(place(Rect(a, b)));
      r.expect(is_immersed_arc(tr) && tr.double_point_count == (a - 1) * (b - 1) / 2, "rectangle trace" + at);
      r.expect(alexander(W(b, b).power(a)) == torus_alexander(a, b), "torus Alexander" + at);
    }

  for (int a2 = 3; a2 <= cfg.shift_pair_max_a2; ++a2)
    for (int a1 = 2; a1 < a2; ++a1)
      for (int c = 1; c <= cfg.shift_pair_max_c; ++c) {
        const BraidWord lhs = W(a2, a2).power(c) * W(a1, a2).inverse();
        const BraidWord rhs = W(a2, a2).power(c - 1) * W(a2 - a1 + 1, a2);
        const auto cmp = compare_profiles(profile(lhs, cfg.caps), profile(rhs, cfg.caps));
        const bool knot = closure_components(lhs) == 1;
        r.expect(cmp.agree && (!knot || cmp.alexander_compared),
                 "W(a2)^c W(a1)^-1 vs W(a2)^(c-1) W(a2-a1+1) at a1=" + std::to_string(a1) +
                     " a2=" + std::to_string(a2) + " c=" + std::to_string(c));
      }
  r.expect(same_profile(parse_braid("W(7)^4 W(3)^-1"), parse_braid("W(7)^3 W(5)"), cfg.caps),
           "W(7)^4 W(3)^-1 vs W(7)^3 W(5)");

  std::mt19937 rng(20240611);
  for (int it = 0; it < 60; ++it) {
    const int n = 2 + static_cast<int>(rng() % 6);
    BraidWord w(n);
    const int len = 1 + static_cast<int>(rng() % 30);
    for (int i = 0; i < len; ++i) {
      const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
      w.push(rng() % 2 ? g : -g);
    }
    if (closure_components(w) != 1) continue;
    const LaurentPoly a = alexander(w);
    const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    const BraidWord c(n, {g});
    r.expect(alexander(c * w * c.inverse()) == a, "conjugation changes Alexander of " + to_expanded(w));
    const BraidWord st = w.with_index(n + 1) * BraidWord(n + 1, {n});
    r.expect(alexander(st) == a, "stabilization changes Alexander of " + to_expanded(w));
    r.expect(alexander_seifert(w) == a, "Burau and Seifert disagree on " + to_expanded(w));
  }
}

inline void suite_ttk(SuiteResult& r, const VerifyConfig& cfg) {
  const auto rows = audit_lemma62({cfg.ttk_max_A, cfg.ttk_max_k, cfg.caps});
  for (const auto& row : rows) {
    const std::string desc = row.label + " at " + row.params.to_string() + ": " + row.berge_region.to_string() +
                             " vs " + row.target + " " + row.ttk_region.to_string() + " -> " +
                             to_string(row.verdict);
    r.expect(row.region_presents_ttk, "region of " + row.target + " does not present its braid");
    if (row.expected)
      r.expect(row.verdict == Verdict::region_match, desc);
    else if (row.verdict == Verdict::mismatch)
      r.open_row(desc + " (genus " + (row.berge_genus ? std::to_string(*row.berge_genus) : "?") + " vs " +
                 (row.ttk_genus ? std::to_string(*row.ttk_genus) : "?") + ")");
    else
      r.expect(true, desc);
  }
  SweepSpec s = cfg.sweep;
  s.A.hi = std::min<long>(s.A.hi, 5);
  s.t.lo = std::max<long>(s.t.lo, 0);
  s.t.hi = std::min<long>(s.t.hi, 2);
  for (const auto& p : sweep_params(s)) {
    const BergeRecord rec = derive(p);
    const auto chain = two_twist_chain(rec);
    const LRegion target = region_for(rec);
    bool positive = true;
    for (const auto& st : chain) positive = positive && st.braid.is_positive();
    r.expect(chain.size() == static_cast<std::size_t>(p.k + p.t + 1) || (p.type == KnotType::VI),
             "chain length at " + pstr(p));
    r.expect(positive, "chain has a non-positive word at " + pstr(p));
    r.expect(chain.back().region == target, "chain ends away from the region at " + pstr(p));
    r.expect(compare_profiles(profile(chain.back().braid, cfg.caps), profile(cp_braid(target), cfg.caps)).agree,
             "chain end profile differs at " + pstr(p));
  }
}

inline void suite_relations(SuiteResult& r, const VerifyConfig& cfg) {
  auto rec = [](KnotType ty, int eps, long A, long k) {
    return derive(ty, delta_choice(eps, 0), eps, A, k, 0);
  };
  auto check = [&](const BergeRecord& from, const BergeRecord& to, Edge edge, long n) {
    const auto m = relation_search(from, to);
    r.expect(m && !m->swapped && m->move.edge == edge && m->move.n == n,
             from.params.to_string() + " -> " + to.params.to_string() + " expected +" + std::to_string(n) + " " +
                 to_string(edge));
  };
  for (long k = 0; k <= cfg.relations_max_k; ++k) {
    check(rec(KnotType::III, 1, 2, 0), rec(KnotType::V, -1, 3, k), Edge::short_arm_b1, k + 1);
    // The same family labelled with eps = +1 in the target.
    const BergeRecord from = rec(KnotType::III, 1, 2, 0), plus = rec(KnotType::V, 1, 3, k);
    if (!relation_search(from, plus))
      r.open_row(from.params.to_string() + " -> " + plus.params.to_string() +
                 ": no single move with eps=+1 in the target; eps=-1 matches");
    for (long A = 2; A <= cfg.relations_max_A; ++A) {
      if (A >= 3) check(rec(KnotType::III, 1, A, 0), rec(KnotType::IV, -1, 2 * A - 1, k), Edge::short_arm_b1, k + 1);
      check(rec(KnotType::III, -1, A, 0), rec(KnotType::IV, 1, 2 * A + 1, k), Edge::long_arm_b2, k + 1);
    }
  }
}

}  // namespace detail

inline SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg = {}) {
  const std::string canon = canonical_suite(name);
  if (canon.empty()) throw std::invalid_argument("unknown suite '" + name + "'");
  SuiteResult r;
  r.name = canon;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (canon == "berge") detail::suite_berge(r, cfg);
    else if (canon == "lshape") detail::suite_lshape(r, cfg);
    else if (canon == "lemma53") detail::suite_area_selector(r, cfg);
    else if (canon == "trace") detail::suite_trace(r, cfg);
    else if (canon == "claims") detail::suite_claims(r, cfg);
    else if (canon == "invar") detail::suite_invar(r, cfg);
    else if (canon == "ttk") detail::suite_ttk(r, cfg);
    else if (canon == "relations") detail::suite_relations(r, cfg);
  } catch (const std::exception& ex) {
    r.expect(false, std::string("suite aborted: ") + ex.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// Audit rows use the atlas row keys for the Berge side plus the twisted
/// torus side and a verdict.
inline ojson audit_row_to_json(const AuditRow& row) {
  const BergeRecord rec = derive(row.params);
  const auto& p = rec.params;
  const auto region = [](const LRegion& r) {
    return ojson::array({int_to_json(r.a1), int_to_json(r.a2), int_to_json(r.b1), int_to_json(r.b2)});
  };
  ojson j;
  j["type"] = to_string(p.type);
  j["delta"] = p.delta;
  j["epsilon"] = p.epsilon;
  j["A"] = int_to_json(p.A);
  j["k"] = int_to_json(p.k);
  j["t"] = int_to_json(p.t);
  j["B"] = int_to_json(rec.B);
  j["b"] = int_to_json(rec.b);
  j["coef"] = int_to_json(rec.coef);
  j["region"] = region(row.berge_region);
  j["identity"] = row.identity;
  j["label"] = row.label;
  j["target"] = row.target;
  j["target_region"] = region(row.ttk_region);
  j["genus"] = row.berge_genus ? ojson(*row.berge_genus) : ojson(nullptr);
  j["target_genus"] = row.ttk_genus ? ojson(*row.ttk_genus) : ojson(nullptr);
  j["expected"] = row.expected;
  j["region_presents_target"] = row.region_presents_ttk;
  j["verdict"] = to_string(row.verdict);
  return j;
}

inline ojson report_to_json(const std::vector<SuiteResult>& results) {
  ojson suites = ojson::array();
  bool ok = true;
  for (const auto& s : results) {
    ok = ok && s.ok();
    suites.push_back(ojson{{"name", s.name},
                           {"passed", s.passed},
                           {"failed", s.failed},
                           {"open", s.open},
                           {"seconds", std::round(s.seconds * 1000) / 1000},
                           {"failures", s.failures},
                           {"open_rows", s.open_rows},
                           {"notes", s.notes}});
  }
  return ojson{{"ok", ok}, {"suites", suites}};
}

}  // namespace divknot
