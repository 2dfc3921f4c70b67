// One Berge knot end to end: surgery data, the region built from squares,
// its braid, the traced curve and the invariants.

#include "divknot/divknot.hpp"

#include <iostream>

using namespace divknot;

int main() {
  const BergeRecord rec = derive(KnotType::III, 1, 1, 2, 2, 1);
  std::cout << rec.params.to_string() << ": B=" << rec.B << " b=" << rec.b << " coef=" << rec.coef << "\n";
  std::cout << "braid: " << berge_macro(rec).to_string() << "\n";

  const MoveConstruction mc = region_by_moves(rec.params);
  std::cout << "base " << mc.base.to_string();
  for (const auto& m : mc.moves) std::cout << ", " << m.to_string();
  std::cout << " -> " << mc.result().to_string() << "\n";

  const LRegion reg = region_for(rec);
  std::cout << "region " << reg.to_string() << ": area " << area(reg) << ", double points " << double_points(reg)
            << "\n";

  const DivideTrace tr = trace(place(reg));
  std::cout << "traced: " << tr.arcs << " arc(s), " << tr.circles << " circle(s), " << tr.double_point_count
            << " double points\n";

  const BraidWord w = cp_braid(reg);
  std::cout << "region braid: " << cp_macro(reg).to_string() << " (" << w.length() << " letters)\n";
  std::cout << "genus: " << bennequin_genus(w) << "\n";
  // The two braids differ as words; their closures share genus and Alexander polynomial.
  const BraidWord surgery = berge_braid(positive_record(rec.params));
  const auto cmp = compare_profiles(profile(w), profile(surgery));
  std::cout << "surgery braid " << berge_macro(positive_record(rec.params)).to_string()
            << (cmp.agree && cmp.alexander_compared ? " has the same genus and Alexander polynomial" : " DISAGREES")
            << "\n";
}
