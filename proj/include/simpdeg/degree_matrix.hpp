#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "simpdeg/complex.hpp"
#include "simpdeg/sparse_matrix.hpp"

namespace simpdeg {

inline constexpr std::size_t kDefaultMatrixCap = 5000;

/// Degrees computed only from absolute values of boundary matrices.
///
/// This path shares no counting code with the combinatorial functions in
/// degrees.hpp and exists to cross-check them. Results are vectors indexed by
/// the q-basis. Incidence matrices |B_{a, a-b}| are built once and cached.
///
///   lower    deg_L^p  = -1 + sum_{q'} nnz of row j of |B_{q,q-p}|^T |B_{q',q'-p}|
///   upper    deg_U^p  = sum_{q' <= p} nnz of row j of |B_{p,p-q}| |B_{p,p-q'}|^T
///                       - [sigma_j has a p-coface]
///   adjacent adj^p    = m_L^p (1 - m_L^{p+1}) (1 - m_U^{p'}),  p' = q + q' - p
///
/// Throws ModeError on an explicit complex and ParamError when some
/// dimension holds more than `cap` simplices.
class MatrixDegreePath {
 public:
  explicit MatrixDegreePath(const SimplicialComplex& k, std::size_t cap = kDefaultMatrixCap);

  /// Per-dimension parts: partners of dimension q_prime only.
  std::vector<std::int64_t> lower_dim(int q, int q_prime, int p) const;
  std::vector<std::int64_t> upper_dim(int q, int q_prime, int p) const;

  std::vector<std::int64_t> lower(int q, int p) const;
  std::vector<std::int64_t> upper(int q, int p) const;
  std::vector<std::int64_t> adjacency(int q, int p) const;
  std::vector<std::int64_t> adjacency_maximal(int q, int p) const;

 private:
  /// |B_{a, a-b}|: rows are b-simplices, columns a-simplices.
  const SparseIntMatrix& incidence(int a, int b) const;
  /// For each q-simplex, sorted ids of the p-adjacent q'-simplices.
  std::vector<std::vector<std::size_t>> adjacent(int q, int q_prime, int p) const;

  SimplicialComplex k_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, SparseIntMatrix> cache_;
};

std::int64_t deg_L_p_matrix(const SimplicialComplex& k, const Simplex& s, int p, std::size_t cap = kDefaultMatrixCap);
std::int64_t deg_U_p_matrix(const SimplicialComplex& k, const Simplex& s, int p, std::size_t cap = kDefaultMatrixCap);
std::int64_t deg_A_p_matrix(const SimplicialComplex& k, const Simplex& s, int p, std::size_t cap = kDefaultMatrixCap);
std::int64_t deg_A_p_maximal_matrix(const SimplicialComplex& k, const Simplex& s, int p,
                                    std::size_t cap = kDefaultMatrixCap);

}  // namespace simpdeg
