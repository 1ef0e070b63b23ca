#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "simpdeg/complex.hpp"
#include "simpdeg/simplex.hpp"
#include "simpdeg/sparse_matrix.hpp"

namespace simpdeg {

/// Sign of the permutation that moves positions j_1 < ... < j_h of a q-simplex
/// to the front while keeping the relative order of both groups:
/// (-1)^(sum j_k - h(h-1)/2). With h = 1 this is the classical (-1)^j.
/// Throws DimensionError unless 0 <= j_1 < ... < j_h <= q.
int epsilon_sign(std::span<const int> removed_positions, int q);

/// Matrix of the (q,h)-boundary operator C_q -> C_{q-h}.
///
/// Rows are the (q-h)-basis, columns the q-basis. The column of a q-simplex
/// holds, at each of its (q-h)-faces, the epsilon sign of the removed
/// positions, so every column has C(q+1, h) nonzeros. h = 1 gives the
/// classical boundary matrix; h = 0 gives the identity.
/// Throws DimensionError if q > dim K, h < 0 or h > q.
SparseIntMatrix boundary_matrix(const SimplicialComplex& k, int q, int h);

/// Matrix of the adjoint operator C_{q-h} -> C_q: the transpose of boundary_matrix.
SparseIntMatrix coboundary_matrix(const SimplicialComplex& k, int q, int h);

/// Coefficient of sigma in the (p, p-dim sigma)-boundary of tau, including both
/// orientation signs; 0 when sigma is not a face of tau.
int sign_of(const OrientedSimplex& tau, const OrientedSimplex& sigma);

/// Upper sign of (si, sj) with respect to tau: 0 unless si ∪ sj ⊆ tau, else
/// sign_of(tau, si) * sign_of(tau, sj). Independent of tau's orientation.
int sig_U(const OrientedSimplex& si, const OrientedSimplex& sj, const OrientedSimplex& tau);

/// Lower sign of (si, sj) with respect to tau: 0 unless tau ⊆ si ∩ sj, else
/// sign_of(si, tau) * sign_of(sj, tau).
int sig_L(const OrientedSimplex& si, const OrientedSimplex& sj, const OrientedSimplex& tau);

/// p-upper oriented degree: sum of sig_U over the stored p-simplices
/// (one canonical representative each).
std::int64_t odeg_U(const SimplicialComplex& k, int p, const OrientedSimplex& si, const OrientedSimplex& sj);

/// p-lower oriented degree: sum of sig_L over the stored p-simplices.
std::int64_t odeg_L(const SimplicialComplex& k, int p, const OrientedSimplex& si, const OrientedSimplex& sj);

inline OrientedSimplex oriented(const Simplex& s) { return {s, 1}; }

/// A q-chain with integer coefficients over canonical simplices.
struct Chain {
  int dim = 0;
  std::map<Simplex, std::int64_t> coefficients;

  friend bool operator==(const Chain&, const Chain&) = default;
};

/// Applies the (q,h)-boundary to a chain directly from the definition,
/// without assembling a matrix.
Chain apply_boundary(const Chain& chain, int h);

/// Standard inner product of two chains of the same dimension.
std::int64_t inner_product(const Chain& a, const Chain& b);

}  // namespace simpdeg
