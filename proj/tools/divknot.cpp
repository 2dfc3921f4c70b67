// Command-line front end: single knots, sweeps, traces, braids, invariants,
// twisted torus knots, relation checks and the verification report.

#include "divknot/divknot.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace divknot;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct BadInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

LRegion parse_region(const std::string& s) {
  std::vector<long> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw BadInput("region entries must be integers: '" + s + "'");
    }
  }
  if (v.size() != 4) throw BadInput("region needs a1,a2,b1,b2, got '" + s + "'");
  return LRegion(v[0], v[1], v[2], v[3]);
}

Rect parse_rect(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw BadInput("rectangle needs a,b, got '" + s + "'");
  try {
    return Rect(std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1)));
  } catch (const std::logic_error&) {
    throw BadInput("rectangle entries must be integers: '" + s + "'");
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void print_table(const ojson& j, const std::string& indent = "") {
  for (const auto& [key, val] : j.items()) {
    if (val.is_object()) {
      std::cout << indent << key << ":\n";
      print_table(val, indent + "  ");
    } else {
      std::cout << indent << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
    }
  }
}

std::string poly_or_capped(const KnotProfile& p) {
  if (p.components != 1) return "(link)";
  return p.alexander ? p.alexander->to_string() : "(capped)";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divide-curve presentations of Berge knots of types III-VI"};
  app.require_subcommand(1);
  int status = kOk;

  // knot
  std::string type_s = "III", format = "table";
  int eps = 1, delta = 0;
  long A = 2, k = 0, t = 0;
  bool no_alex = false;
  auto* knot = app.add_subcommand("knot", "Derive one knot: surgery data, region, braid, invariants");
  knot->add_option("--type", type_s, "III, IV, V or VI")->required();
  knot->add_option("--eps", eps, "epsilon, +1 or -1")->required();
  knot->add_option("--delta", delta, "delta, +1 or -1 (default: the sign making the coefficient positive)");
  knot->add_option("-A", A)->required();
  knot->add_option("-k", k);
  knot->add_option("-t", t);
  knot->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
  knot->add_flag("--no-alexander", no_alex, "skip the Alexander polynomial");

  // sweep
  std::string grid, types_s, out_path;
  bool both_signs = false, quiet = false;
  int max_index = 20;
  std::size_t max_length = 400;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate a parameter grid as JSON lines");
  sweep_cmd->add_option("--grid", grid, "e.g. A=2..10,k=0..3,t=-2..2,eps=-1..1");
  sweep_cmd->add_option("--types", types_s, "comma-separated subset of III,IV,V,VI");
  sweep_cmd->add_option("--out", out_path, "output file (default stdout)");
  sweep_cmd->add_flag("--both-signs", both_signs, "also emit the row for the opposite delta");
  sweep_cmd->add_flag("--no-alexander", no_alex);
  sweep_cmd->add_option("--max-index", max_index, "Alexander cap on braid index")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--max-length", max_length, "Alexander cap on word length")->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--quiet", quiet, "do not log skipped tuples");

  // trace
  std::string region_s, rect_s, svg_path;
  bool no_marks = false;
  auto* trace_cmd = app.add_subcommand("trace", "Trace the curve in a region");
  auto* reg_opt = trace_cmd->add_option("--region", region_s, "a1,a2,b1,b2");
  auto* rect_opt = trace_cmd->add_option("--rect", rect_s, "a,b");
  reg_opt->excludes(rect_opt);
  trace_cmd->add_option("--svg", svg_path, "write an SVG drawing");
  trace_cmd->add_flag("--no-marks", no_marks, "omit double-point markers in the SVG");
  trace_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

  // braid
  bool raw_claim1 = false, expanded = false;
  auto* braid_cmd = app.add_subcommand("braid", "Braid word of a region");
  braid_cmd->add_option("--region", region_s, "a1,a2,b1,b2")->required();
  braid_cmd->add_flag("--raw-claim1", raw_claim1, "also print the alternating e/o word before conjugation");
  braid_cmd->add_flag("--expanded", expanded, "print generator letters instead of macros");

  // alex
  std::string braid_s;
  int index = 0;
  bool seifert = false, uncapped = false;
  auto* alex_cmd = app.add_subcommand("alex", "Invariants of a braid closure");
  alex_cmd->add_option("--braid", braid_s, "e.g. \"W(5)^3 W(3)\" or \"s1 s2 S1\"")->required();
  alex_cmd->add_option("--index", index, "braid index (default: inferred)");
  alex_cmd->add_flag("--seifert", seifert, "cross-check with the Seifert matrix");
  alex_cmd->add_flag("--no-cap", uncapped, "ignore the index/length cap");

  // ttk
  long tp = 0, tq = 0, tr = 0, ts = 0;
  bool audit = false;
  long max_A = 11, max_k = 3;
  auto* ttk_cmd = app.add_subcommand("ttk", "Twisted torus knot T(p,q;r,s), or the identification audit");
  ttk_cmd->add_option("-p", tp);
  ttk_cmd->add_option("-q", tq);
  ttk_cmd->add_option("-r", tr);
  ttk_cmd->add_option("-s", ts);
  ttk_cmd->add_flag("--audit", audit, "emit the Berge/twisted-torus audit as JSON lines");
  ttk_cmd->add_option("--max-A", max_A);
  ttk_cmd->add_option("--max-k", max_k);

  // relations
  auto* rel_cmd = app.add_subcommand("relations", "Single-move relations between type III and types IV, V");
  rel_cmd->add_option("--max-A", max_A);
  rel_cmd->add_option("--max-k", max_k);

  // verify
  std::vector<std::string> suites;
  std::string report_path = "verify_report.json";
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
  verify_cmd->add_option("--suite", suites, "suite name or 'all' (repeatable)");
  verify_cmd->add_option("--report", report_path, "JSON report path");

  // recheck
  std::string in_path;
  auto* recheck_cmd = app.add_subcommand("recheck", "Recompute a JSON-lines atlas and compare byte for byte");
  recheck_cmd->add_option("--in", in_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (knot->parsed()) {
      const KnotType ty = parse_knot_type(type_s);
      const int d = delta == 0 ? delta_choice(eps, t) : delta;
      SweepSpec spec;
      spec.alexander = !no_alex;
      const AtlasRow row = make_row(validate(ty, d, eps, A, k, t), spec);
      const ojson j = row_to_json(row, spec);
      if (format == "json")
        std::cout << j.dump() << "\n";
      else
        print_table(j);
    } else if (sweep_cmd->parsed()) {
      SweepSpec spec;
      if (!grid.empty()) apply_grid(spec, grid);
      if (!types_s.empty()) spec.types = parse_types(types_s);
      spec.both_signs = both_signs;
      spec.alexander = !no_alex;
      spec.caps = {max_index, max_length};
      const auto rows = sweep(spec, [&](const std::string& why) {
        if (!quiet) std::cerr << "skip: " << why << "\n";
      });
      long bad = 0;
      for (const auto& r : rows)
        if (!r.checks.all_asserted()) ++bad;
      if (out_path.empty()) {
        write_jsonl(std::cout, rows, spec);
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        write_jsonl(out, rows, spec);
      }
      std::cerr << rows.size() << " rows, " << bad << " with a failed check\n";
      if (bad) status = kFailed;
    } else if (trace_cmd->parsed()) {
      if (region_s.empty() == rect_s.empty()) throw BadInput("trace needs exactly one of --region, --rect");
      const PlacedRegion pl = region_s.empty() ? place(parse_rect(rect_s)) : place(parse_region(region_s));
      const DivideTrace tr_ = trace(pl);
      ojson j;
      j["region"] = pl.to_string();
      j["arcs"] = tr_.arcs;
      j["circles"] = tr_.circles;
      j["double_points"] = tr_.double_point_count;
      j["immersed_arc"] = is_immersed_arc(tr_);
      j["intersections"] = tr_.intersections;
      if (format == "json")
        std::cout << j.dump() << "\n";
      else
        print_table(j);
      if (!svg_path.empty()) {
        SvgOptions opt;
        opt.mark_double_points = !no_marks;
        write_file(svg_path, render_svg(pl, opt));
      }
    } else if (braid_cmd->parsed()) {
      const LRegion r = parse_region(region_s);
      const MacroBraid m = cp_macro(r);
      std::cout << (expanded ? to_expanded(m.expand()) : m.to_string()) << "\n";
      if (raw_claim1) std::cout << to_expanded(claim1_braid(r)) << "\n";
    } else if (alex_cmd->parsed()) {
      const BraidWord w = index > 0 ? parse_braid(braid_s, index) : parse_braid(braid_s);
      ProfileCaps caps;
      if (uncapped) caps = {std::numeric_limits<int>::max(), std::numeric_limits<std::size_t>::max()};
      const KnotProfile p = profile(w, caps);
      std::cout << "index: " << w.index() << "\nlength: " << w.length() << "\ncomponents: " << p.components << "\n";
      if (p.components == 1) {
        std::cout << "genus: " << (p.genus ? std::to_string(*p.genus) : ">= " + std::to_string(p.genus_lower_bound))
                  << "\n";
        std::cout << "alexander: " << poly_or_capped(p) << "\n";
        if (p.determinant) std::cout << "determinant: " << *p.determinant << "\n";
        if (seifert) {
          const LaurentPoly s = alexander_seifert(cyclic_reduce(w));
          std::cout << "seifert: " << s.to_string() << "\n";
          if (p.alexander && *p.alexander != s) {
            std::cerr << "Burau and Seifert polynomials differ\n";
            status = kFailed;
          }
        }
      }
    } else if (ttk_cmd->parsed()) {
      if (audit) {
        for (const auto& row : audit_lemma62({max_A, max_k, {}})) std::cout << audit_row_to_json(row).dump() << "\n";
      } else {
        const TwistedTorus tk(tp, tq, tr, ts);
        const LRegion reg = ttk_region(tk);
        const BraidWord w = ttk_braid(tk);
        const KnotProfile p = profile(w);
        const auto cmp = compare_profiles(p, profile(cp_braid(reg)));
        std::cout << "knot: " << tk.to_string() << "\nregion: " << reg.to_string() << "\nregion braid: "
                  << cp_macro(reg).to_string() << "\ncomponents: " << p.components << "\n";
        if (p.genus) std::cout << "genus: " << *p.genus << "\n";
        std::cout << "alexander: " << poly_or_capped(p) << "\nregion presents knot: "
                  << (cmp.agree ? "yes" : "no") << "\n";
        if (!cmp.agree) status = kFailed;
      }
    } else if (rel_cmd->parsed()) {
      VerifyConfig cfg;
      cfg.relations_max_A = max_A;
      cfg.relations_max_k = max_k;
      const SuiteResult r = run_suite("relations", cfg);
      std::cout << "relations: " << r.passed << " passed, " << r.failed << " failed, " << r.open << " open\n";
      for (const auto& f : r.failures) std::cout << "FAIL " << f << "\n";
      for (const auto& o : r.open_rows) std::cout << "OPEN " << o << "\n";
      if (!r.ok()) status = kFailed;
    } else if (verify_cmd->parsed()) {
      std::vector<std::string> names;
      if (suites.empty()) suites.push_back("all");
      for (const auto& s : suites) {
        if (s == "all") {
          names.insert(names.end(), suite_names().begin(), suite_names().end());
        } else {
          const std::string c = canonical_suite(s);
          if (c.empty()) throw BadInput("unknown suite '" + s + "'");
          names.push_back(c);
        }
      }
      std::vector<SuiteResult> results;
      for (const auto& n : names) {
        results.push_back(run_suite(n));
        const auto& r = results.back();
        std::printf("%-10s %8ld passed %6ld failed %6ld open  %7.2fs\n", r.name.c_str(), r.passed, r.failed, r.open,
                    r.seconds);
        for (const auto& f : r.failures) std::printf("  FAIL %s\n", f.c_str());
        for (const auto& note : r.notes) std::printf("  note: %s\n", note.c_str());
        if (!r.ok()) status = kFailed;
      }
      std::fflush(stdout);
      write_file(report_path, report_to_json(results).dump(2) + "\n");
      std::cout << "report: " << report_path << "\n";
    } else if (recheck_cmd->parsed()) {
      std::ifstream in(in_path, std::ios::binary);
      if (!in) throw BadInput("cannot read " + in_path);
      const RecheckResult r = recheck(in);
      std::cout << r.rows << " rows, " << r.identical << " identical\n";
      for (const auto& d : r.differing_lines) std::cout << "differs: line " << d << "\n";
      if (r.identical != r.rows) status = kFailed;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const TraceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ojson::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::logic_error& e) {  // invalid_argument, domain_error, out_of_range, length_error
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return status;
}
