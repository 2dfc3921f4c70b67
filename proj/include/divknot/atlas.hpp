#pragma once

#include "divknot/berge.hpp"
#include "divknot/cp_braid.hpp"
#include "divknot/invar.hpp"
#include "divknot/lshape.hpp"
#include "divknot/trace.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace divknot {

using ojson = nlohmann::ordered_json;

/// Integers serialize as JSON numbers when they fit in 64 bits, else as strings.
inline ojson int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline Int int_from_json(const ojson& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

inline ojson poly_to_json(const LaurentPoly& p) {
  ojson coef = ojson::array();
  for (const auto& c : p.coefficients()) coef.push_back(int_to_json(c));
  return ojson{{"lo", p.lo()}, {"coef", coef}};
}

inline LaurentPoly poly_from_json(const ojson& j) {
  std::vector<Int> c;
  for (const auto& v : j.at("coef")) c.push_back(int_from_json(v));
  return LaurentPoly(j.at("lo").get<long>(), std::move(c));
}

struct Range {
  long lo = 0, hi = -1;  // inclusive; empty when hi < lo
  bool empty() const { return hi < lo; }
};

struct SweepSpec {
  std::vector<KnotType> types{KnotType::III, KnotType::IV, KnotType::V, KnotType::VI};
  std::vector<int> epsilons{-1, 1};
  Range A{2, 15}, k{0, 3}, t{-3, 3};
  /// Also emit the mirror row (delta = -delta_x) for each tuple.
  bool both_signs = false;
  bool alexander = true;
  ProfileCaps caps{};

  void check() const {
    if (caps.max_index < 1 || caps.max_length < 1) throw std::invalid_argument("sweep caps must be positive");
    for (int e : epsilons)
      if (!is_sign(e)) throw std::invalid_argument("sweep epsilon values must be +-1");
  }
};

/// Parses "A=2..10,k=0..3,t=-2..2" into the ranges of the sweep. A single value
/// "k=1" is a one-element range.
inline void apply_grid(SweepSpec& spec, const std::string& grid) {
  std::stringstream ss(grid);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("grid item '" + item + "' lacks '='");
    const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    Range r;
    const auto dots = val.find("..");
    try {
      if (dots == std::string::npos) {
        r.lo = r.hi = std::stol(val);
      } else {
        r.lo = std::stol(val.substr(0, dots));
        r.hi = std::stol(val.substr(dots + 2));
      }
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad range '" + val + "' in grid");
    }
    if (key == "A")
      spec.A = r;
    else if (key == "k")
      spec.k = r;
    else if (key == "t")
      spec.t = r;
    else if (key == "eps" || key == "epsilon") {
      spec.epsilons.clear();
      for (long e = r.lo; e <= r.hi; ++e)
        if (e == 1 || e == -1) spec.epsilons.push_back(static_cast<int>(e));
    } else
      throw std::invalid_argument("unknown grid key '" + key + "'");
  }
}

inline std::vector<KnotType> parse_types(const std::string& s) {
  std::vector<KnotType> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_knot_type(item));
  return out;
}

struct RowChecks {
  bool area_coef_gap = false;     // area - |coef| in {0, 1}
  bool lemma53_match = false;     // that gap is 0 exactly when (-1)^a eps sgn(t) = +1
  bool immersed_arc = false;      // the traced curve is one arc
  bool genus_triple_match = false;  // traced double points = formula = Bennequin genus
  bool coef_positive = false;     // the coefficient with delta = delta_x is positive
  bool gt_conjecture_window = false;  // 2g+8 <= |coef| <= 4g-1 (report only)
  bool closed_form_match = false;
  bool moves_match = false;       // region_for equals the squares construction
  bool genus_coef_match = false;       // |coef| - 2g = a2 + b2 - 1 - gap

  /// Every asserted check; the conjecture window is report-only.
  bool all_asserted() const {
    return area_coef_gap && lemma53_match && immersed_arc && genus_triple_match && coef_positive &&
           closed_form_match && moves_match && genus_coef_match;
  }
};

struct AtlasRow {
  BergeRecord record;
  int delta_x = 1;
  LRegion region;
  Int area, double_points, gap;
  long traced_double_points = 0;
  long genus = 0;
  std::string braid;     // Berge braid for the row's delta
  std::string cp_braid;  // braid read off the region
  std::optional<LaurentPoly> alexander;
  bool alexander_capped = false;
  RowChecks checks;
};

/// Builds one row. The region and its invariants belong to the positive-
/// coefficient sign; the row's own delta only affects b, coef and the braid.
inline AtlasRow make_row(const BergeParams& p, const SweepSpec& spec) {
  const BergeRecord rec = derive(p);
  const BergeRecord pos = positive_record(p);
  const LRegion region = region_for(pos);
  AtlasRow row{rec, pos.params.delta, region, area(region), 0, 0, 0, 0, berge_macro(rec).to_string(),
               cp_macro(region).to_string(), std::nullopt, false, {}};
  auto& c = row.checks;
  row.gap = row.area - abs_of(rec.coef);
  c.area_coef_gap = row.gap == 0 || row.gap == 1;
  const int selector = (rec.a == 0 ? 1 : -1) * p.epsilon * sign_of(p.t);
  c.lemma53_match = row.area - pos.coef == (selector == 1 ? 0 : 1);
  c.coef_positive = pos.coef > 0;
  c.closed_form_match = coef_closed_form(rec) == rec.coef;
  c.moves_match = region_by_moves(p).result() == region;

  const DivideTrace tr = trace(place(region));
  c.immersed_arc = is_immersed_arc(tr);
  row.traced_double_points = tr.double_point_count;
  try {
    row.double_points = divknot::double_points(region);
  } catch (const std::domain_error&) {
    row.double_points = -1;
  }
  const BraidWord cpw = divknot::cp_braid(region);
  row.genus = bennequin_genus(cpw);
  c.genus_triple_match = row.double_points == row.traced_double_points && row.double_points == row.genus;
  const Int g2 = 2 * row.genus;
  const Int mag = abs_of(rec.coef);
  c.gt_conjecture_window = g2 + 8 <= mag && mag <= 2 * g2 - 1;
  c.genus_coef_match = mag - g2 == region.a2 + region.b2 - 1 - row.gap;

  if (spec.alexander) {
    if (cpw.index() <= spec.caps.max_index && cpw.length() <= spec.caps.max_length)
      row.alexander = alexander(cpw);
    else
      row.alexander_capped = true;
  }
  return row;
}

inline ojson row_to_json(const AtlasRow& r, const SweepSpec& spec) {
  const auto& p = r.record.params;
  const auto& c = r.checks;
  ojson j;
  j["type"] = to_string(p.type);
  j["delta"] = p.delta;
  j["epsilon"] = p.epsilon;
  j["A"] = int_to_json(p.A);
  j["k"] = int_to_json(p.k);
  j["t"] = int_to_json(p.t);
  j["a"] = r.record.a;
  j["l"] = int_to_json(r.record.l);
  j["B"] = int_to_json(r.record.B);
  j["b"] = int_to_json(r.record.b);
  j["coef"] = int_to_json(r.record.coef);
  j["delta_x"] = r.delta_x;
  j["region"] = ojson::array({int_to_json(r.region.a1), int_to_json(r.region.a2), int_to_json(r.region.b1),
                              int_to_json(r.region.b2)});
  j["area"] = int_to_json(r.area);
  j["gap"] = int_to_json(r.gap);
  j["double_points"] = int_to_json(r.double_points);
  j["traced_double_points"] = r.traced_double_points;
  j["genus"] = r.genus;
  j["braid"] = r.braid;
  j["cp_braid"] = r.cp_braid;
  if (spec.alexander) {
    j["alexander"] = r.alexander ? poly_to_json(*r.alexander) : ojson(nullptr);
    j["alexander_capped"] = r.alexander_capped;
    j["alexander_caps"] = ojson::array({spec.caps.max_index, spec.caps.max_length});
  }
  j["checks"] = ojson{{"area_coef_gap", c.area_coef_gap},
                      {"lemma53_match", c.lemma53_match},
                      {"immersed_arc", c.immersed_arc},
                      {"genus_triple_match", c.genus_triple_match},
                      {"coef_positive", c.coef_positive},
                      {"gt_conjecture_window", c.gt_conjecture_window},
                      {"closed_form_match", c.closed_form_match},
                      {"moves_match", c.moves_match},
                      {"genus_coef_match", c.genus_coef_match}};
  return j;
}

/// Receives the reason for each skipped tuple.
using SkipLog = std::function<void(const std::string&)>;

/// Valid parameter tuples in lexicographic (type, eps, A, k, t[, delta]) order.
inline std::vector<BergeParams> sweep_params(const SweepSpec& spec, const SkipLog& log = {}) {
  spec.check();
  std::vector<int> eps = spec.epsilons;
  std::sort(eps.begin(), eps.end());
  eps.erase(std::unique(eps.begin(), eps.end()), eps.end());
  std::vector<BergeParams> out;
  for (KnotType type : spec.types)
    for (int e : eps)
      for (long A = spec.A.lo; A <= spec.A.hi; ++A)
        for (long k = spec.k.lo; k <= spec.k.hi; ++k)
          for (long t = spec.t.lo; t <= spec.t.hi; ++t) {
            const int dx = delta_choice(e, t);
            std::vector<int> deltas{dx};
            if (spec.both_signs) deltas = {std::min(dx, -dx), std::max(dx, -dx)};
            for (int d : deltas) {
              try {
                BergeParams p = validate(type, d, e, A, k, t);
                if (p.normalized) {
                  if (log)
                    log(std::string("skip ") + to_string(type) + " eps=" + std::to_string(e) + " A=" +
                        std::to_string(A) + " k=" + std::to_string(k) + " t=" + std::to_string(t) +
                        ": Type VI only has eps=-1, k=0");
                  continue;
                }
                derive(p);
                out.push_back(p);
              } catch (const InvalidParams& ex) {
                if (log) log(std::string("skip: ") + ex.what());
              }
            }
          }
  return out;
}

inline std::vector<AtlasRow> sweep(const SweepSpec& spec, const SkipLog& log = {}) {
  std::vector<AtlasRow> rows;
  for (const auto& p : sweep_params(spec, log)) rows.push_back(make_row(p, spec));
  return rows;
}

inline void write_jsonl(std::ostream& os, const std::vector<AtlasRow>& rows, const SweepSpec& spec) {
  for (const auto& r : rows) os << row_to_json(r, spec).dump() << '\n';
}

/// Parameters stored in a serialized row.
inline BergeParams params_from_json(const ojson& j) {
  return validate(parse_knot_type(j.at("type").get<std::string>()), j.at("delta").get<int>(),
                  j.at("epsilon").get<int>(), int_from_json(j.at("A")), int_from_json(j.at("k")),
                  int_from_json(j.at("t")));
}

struct RecheckResult {
  long rows = 0;
  long identical = 0;
  std::vector<long> differing_lines;  // 1-based
};

/// Recomputes every row of a JSON-lines file from its parameters and compares
/// the serialization byte for byte.
inline RecheckResult recheck(std::istream& in) {
  RecheckResult out;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    ++out.rows;
    const ojson j = ojson::parse(line);
    SweepSpec spec;
    spec.alexander = j.contains("alexander");
    if (spec.alexander) {
      const auto& caps = j.at("alexander_caps");
      spec.caps.max_index = caps.at(0).get<int>();
      spec.caps.max_length = caps.at(1).get<std::size_t>();
    }
    const std::string again = row_to_json(make_row(params_from_json(j), spec), spec).dump();
    if (again == line)
      ++out.identical;
    else
      out.differing_lines.push_back(lineno);
  }
  return out;
}

}  // namespace divknot
