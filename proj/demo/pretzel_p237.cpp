// The (-2,3,7) pretzel knot from the region [3,5;3,4]: its curve as SVG and
// its Alexander polynomial computed two independent ways.

#include "divknot/divknot.hpp"

#include <fstream>
#include <iostream>

using namespace divknot;

int main(int argc, char** argv) {
  const LRegion reg(3, 5, 3, 4);
  const BraidWord w = cp_braid(reg);
  std::cout << "region " << reg.to_string() << ", area " << area(reg) << ", braid " << cp_macro(reg).to_string()
            << "\n";
  std::cout << "genus " << bennequin_genus(w) << "\n";
  std::cout << "Burau:   " << alexander(w).to_string() << "\n";
  std::cout << "Seifert: " << alexander_seifert(w).to_string() << "\n";
  if (argc > 1) {
    std::ofstream(argv[1]) << render_svg(place(reg));
    std::cout << "wrote " << argv[1] << "\n";
  }
}
