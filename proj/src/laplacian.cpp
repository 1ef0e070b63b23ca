#include "simpdeg/laplacian.hpp"

#include <string>

#include "simpdeg/boundary.hpp"
#include "simpdeg/degrees.hpp"
#include "simpdeg/error.hpp"

namespace simpdeg {

namespace {

SparseIntMatrix zero_over(const SimplicialComplex& k, int q) {
  const auto& basis = k.simplices(q);
  SparseIntMatrix m(basis.size(), basis.size());
  m.set_bases(basis, basis);
  return m;
}

void require_closed(const SimplicialComplex& k) {
  if (!k.closed()) throw ModeError("Laplacians require a closed complex");
}

}  // namespace

SparseIntMatrix upper_laplacian(const SimplicialComplex& k, int q, int h) {
  require_closed(k);
  if (h < 0) throw DimensionError("h must be non-negative");
  if (q < 0 || q + h > k.dim()) return zero_over(k, q);
  const SparseIntMatrix b = boundary_matrix(k, q + h, h);
  return b * b.transpose();
}

SparseIntMatrix lower_laplacian(const SimplicialComplex& k, int q, int h_prime) {
  require_closed(k);
  if (h_prime < 0 || h_prime > q)
    throw DimensionError("h'=" + std::to_string(h_prime) + " outside [0, q=" + std::to_string(q) + "]");
  if (q > k.dim()) return zero_over(k, q);
  const SparseIntMatrix b = boundary_matrix(k, q, h_prime);
  return b.transpose() * b;
}

LaplacianTriple multi_laplacian(const SimplicialComplex& k, int q, int h, int h_prime) {
  require_closed(k);
  if (h_prime < 0) throw DimensionError("h' must be non-negative");
  LaplacianTriple t;
  t.q = q;
  t.h = h;
  t.h_prime = h_prime;
  t.upper = upper_laplacian(k, q, h);
  t.lower = h_prime > q ? zero_over(k, q) : lower_laplacian(k, q, h_prime);
  t.full = t.upper + t.lower;
  return t;
}

std::vector<EntryMismatch> verify_entries(const SimplicialComplex& k, int q, int h, int h_prime) {
  require_closed(k);
  if (h < 1 || h_prime < 1) throw ParamError("entry formulas need h >= 1 and h' >= 1");
  const LaplacianTriple lap = multi_laplacian(k, q, h, h_prime);
  const auto& basis = k.simplices(q);
  const std::size_t n = basis.size();
  std::vector<EntryMismatch> out;
  auto check = [&](const char* part, std::size_t i, std::size_t j, std::int64_t expected, std::int64_t actual) {
    if (expected != actual) out.push_back({part, i, j, expected, actual});
  };
  const std::int64_t lower_diag = q - h_prime >= 0 ? binomial(q + 1, q - h_prime + 1) : 0;
  for (std::size_t i = 0; i < n; ++i) {
    const OrientedSimplex si = oriented(basis[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const OrientedSimplex sj = oriented(basis[j]);
      if (i == j) {
        check("upper", i, j, deg_U_hp(k, basis[i], h, q + h), lap.upper.at(i, j));
        check("lower", i, j, lower_diag, lap.lower.at(i, j));
      } else {
        check("upper", i, j, odeg_U(k, q + h, si, sj), lap.upper.at(i, j));
        check("lower", i, j, odeg_L(k, q - h_prime, si, sj), lap.lower.at(i, j));
      }
    }
  }
  return out;
}

}  // namespace simpdeg
