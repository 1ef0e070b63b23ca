#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "simpdeg/complex.hpp"
#include "simpdeg/degree_matrix.hpp"

namespace simpdeg {

struct CrossCheckReport {
  std::size_t checks = 0;
  std::vector<std::string> mismatches;
  /// Targets where the alternating strict-upper formula differs from the
  /// direct facet count. Not a mismatch by itself: the formula is exact only
  /// when every non-facet coface in the sum has a link of Euler
  /// characteristic 1, and the gap is checked against that correction.
  std::size_t alternating_gaps = 0;
};

/// Compares the library's independent computation routes on one closed
/// complex: Laplacian entries against degree formulas for every (q, h, h'),
/// matrix-path degrees against combinatorial ones, the alternating strict
/// upper formula against a direct facet count plus its link correction, and
/// strict lower degrees against differences of plain ones.
CrossCheckReport cross_check(const SimplicialComplex& k, std::size_t cap = kDefaultMatrixCap);

}  // namespace simpdeg
