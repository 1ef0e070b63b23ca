#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simpdeg/complex.hpp"
#include "simpdeg/sparse_matrix.hpp"

namespace simpdeg {

/// Upper part B_{q+h,h} B_{q+h,h}^T over the q-basis. A zero matrix of the
/// right size when q+h > dim K. Throws ModeError on an explicit complex and
/// DimensionError if h < 0.
SparseIntMatrix upper_laplacian(const SimplicialComplex& k, int q, int h);

/// Lower part B_{q,h'}^T B_{q,h'} over the q-basis.
/// Throws DimensionError if h' > q or h' < 0.
SparseIntMatrix lower_laplacian(const SimplicialComplex& k, int q, int h_prime);

struct LaplacianTriple {
  int q = 0;
  int h = 0;
  int h_prime = 0;
  SparseIntMatrix upper;
  SparseIntMatrix lower;
  SparseIntMatrix full;
};

/// Both parts and their sum. When h' > q the lower part is taken as zero
/// (C_{q-h'} is trivial), so L_{0,1,1} is the graph Laplacian.
LaplacianTriple multi_laplacian(const SimplicialComplex& k, int q, int h, int h_prime);

struct EntryMismatch {
  std::string part;  // "upper" or "lower"
  std::size_t row = 0;
  std::size_t col = 0;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
};

/// Recomputes every entry of both parts from degrees and oriented degrees
/// and lists disagreements with the matrix products.
///   upper: diagonal deg_U(h, q+h), off-diagonal odeg_U(q+h, ., .)
///   lower: diagonal C(q+1, q-h'+1), off-diagonal odeg_L(q-h', ., .)
/// Requires h, h' >= 1 (ParamError): with h = 0 the upper part is the
/// identity while self-excluded degrees put 0 on the diagonal.
std::vector<EntryMismatch> verify_entries(const SimplicialComplex& k, int q, int h, int h_prime);

}  // namespace simpdeg
