// Exact entanglement width of the 3x3 grid versus its two standard
// decompositions, across a few squeezing values.

#include <cstdio>

#include "entwidth/entwidth.hpp"

using namespace entwidth;

int main() {
  std::printf("%8s %12s %12s %12s\n", "b", "exact EW", "diagonal", "rectangular");
  for (double b : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    GaussianState state = canonical_cluster(grid_graph(3, b));
    CutFunction cut = ee_cut(state);
    WidthResult ew = exact_width(9, cut);
    CutCache cache(cut);
    std::printf("%8.2f %12.6f %12.6f %12.6f\n", b, ew.width,
                width(diagonal_decomposition(3), cache),
                width(rectangular_decomposition(3), cache));
  }
  return 0;
}
