#include "simpdeg/degree_matrix.hpp"

#include <algorithm>
#include <string>

#include "simpdeg/boundary.hpp"
#include "simpdeg/error.hpp"

namespace simpdeg {

namespace {

std::vector<std::int64_t> row_nnz(const SparseIntMatrix& m) {
  std::vector<std::int64_t> n(m.rows(), 0);
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r : m.col_rows(c)) ++n[r];
  return n;
}

void add_into(std::vector<std::int64_t>& acc, const std::vector<std::int64_t>& part) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
}

std::vector<std::size_t> column(const SparseIntMatrix& m, std::size_t c) {
  if (c >= m.cols()) return {};
  auto rows = m.col_rows(c);
  return {rows.begin(), rows.end()};
}

std::vector<std::size_t> minus(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t simplex_index(const SimplicialComplex& k, const Simplex& s) {
  auto id = k.index_of(s);
  if (!id) throw NotInComplex(s.to_string() + " is not stored in the complex");
  return *id;
}

}  // namespace

MatrixDegreePath::MatrixDegreePath(const SimplicialComplex& k, std::size_t cap) : k_(k) {
  if (!k.closed()) throw ModeError("matrix degree path requires a closed complex");
  for (int q = 0; q <= k.dim(); ++q)
    if (k.count(q) > cap)
      throw ParamError("dimension " + std::to_string(q) + " holds " + std::to_string(k.count(q)) +
                       " simplices, above the matrix-path cap of " + std::to_string(cap));
}

const SparseIntMatrix& MatrixDegreePath::incidence(int a, int b) const {
  std::lock_guard lock(mutex_);
  auto it = cache_.find({a, b});
  if (it == cache_.end()) it = cache_.emplace(std::pair{a, b}, boundary_matrix(k_, a, a - b).abs()).first;
  return it->second;
}

std::vector<std::int64_t> MatrixDegreePath::lower_dim(int q, int q_prime, int p) const {
  if (p < 0 || p > q) throw DimensionError("p outside [0, q]");
  std::vector<std::int64_t> out(k_.count(q), 0);
  if (q > k_.dim() || q_prime < p || q_prime > k_.dim()) return out;
  out = row_nnz(incidence(q, p).transpose() * incidence(q_prime, p));
  if (q_prime == q)
    for (auto& v : out) v -= 1;
  return out;
}

std::vector<std::int64_t> MatrixDegreePath::upper_dim(int q, int q_prime, int p) const {
  if (p < 0) throw DimensionError("p must be non-negative");
  std::vector<std::int64_t> out(k_.count(q), 0);
  if (q < 0 || q_prime < 0 || p > k_.dim() || p < q || p < q_prime) return out;
  const SparseIntMatrix m = incidence(p, q) * incidence(p, q_prime).transpose();
  out = row_nnz(m);
  if (q_prime == q)
    for (std::size_t j = 0; j < out.size(); ++j)
      if (m.at(j, j) != 0) out[j] -= 1;
  return out;
}

std::vector<std::int64_t> MatrixDegreePath::lower(int q, int p) const {
  std::vector<std::int64_t> out(k_.count(q), 0);
  for (int qp = p; qp <= k_.dim(); ++qp) add_into(out, lower_dim(q, qp, p));
  return out;
}

std::vector<std::int64_t> MatrixDegreePath::upper(int q, int p) const {
  std::vector<std::int64_t> out(k_.count(q), 0);
  for (int qp = 0; qp <= p; ++qp) add_into(out, upper_dim(q, qp, p));
  return out;
}

std::vector<std::vector<std::size_t>> MatrixDegreePath::adjacent(int q, int q_prime, int p) const {
  const std::size_t n = k_.count(q);
  std::vector<std::vector<std::size_t>> out(n);
  if (p < 0 || p > std::min(q, q_prime) || q_prime > k_.dim()) return out;
  const int p_prime = q + q_prime - p;
  // Columns index q-simplices, rows q'-simplices.
  const SparseIntMatrix lower_p = incidence(q_prime, p).transpose() * incidence(q, p);
  SparseIntMatrix lower_next, upper;
  if (p + 1 <= std::min(q, q_prime)) lower_next = incidence(q_prime, p + 1).transpose() * incidence(q, p + 1);
  if (p_prime <= k_.dim()) upper = incidence(p_prime, q_prime) * incidence(p_prime, q).transpose();
  for (std::size_t s = 0; s < n; ++s)
    out[s] = minus(minus(column(lower_p, s), column(lower_next, s)), column(upper, s));
  return out;
}

std::vector<std::int64_t> MatrixDegreePath::adjacency(int q, int p) const {
  if (p < 0 || p > q) throw DimensionError("p outside [0, q]");
  std::vector<std::int64_t> out(k_.count(q), 0);
  for (int qp = p; qp <= k_.dim(); ++qp) {
    const auto adj = adjacent(q, qp, p);
    for (std::size_t s = 0; s < out.size(); ++s) out[s] += static_cast<std::int64_t>(adj[s].size());
  }
  return out;
}

std::vector<std::int64_t> MatrixDegreePath::adjacency_maximal(int q, int p) const {
  if (p < 0 || p > q) throw DimensionError("p outside [0, q]");
  const std::size_t n = k_.count(q);
  std::vector<std::int64_t> out(n, 0);
  if (q > k_.dim()) return out;
  std::vector<std::vector<std::vector<std::size_t>>> adj;  // [q' - p][s] -> partners
  for (int qp = p; qp <= k_.dim(); ++qp) adj.push_back(adjacent(q, qp, p));

  for (std::size_t s = 0; s < n; ++s) {
    for (int qp = p; qp <= k_.dim(); ++qp) {
      const auto& partners = adj[static_cast<std::size_t>(qp - p)][s];
      if (partners.empty()) continue;
      // Delta: a partner is dropped when it is a face of a larger partner.
      std::vector<char> covered(k_.count(qp), 0);
      for (int qpp = qp + 1; qpp <= k_.dim(); ++qpp) {
        const SparseIntMatrix& faces_of = incidence(qpp, qp);
        for (std::size_t big : adj[static_cast<std::size_t>(qpp - p)][s])
          for (std::size_t r : faces_of.col_rows(big)) covered[r] = 1;
      }
      for (std::size_t t : partners)
        if (!covered[t]) ++out[s];
    }
  }
  return out;
}

std::int64_t deg_L_p_matrix(const SimplicialComplex& k, const Simplex& s, int p, std::size_t cap) {
  const std::size_t id = simplex_index(k, s);
  return MatrixDegreePath(k, cap).lower(s.dim(), p)[id];
}

std::int64_t deg_U_p_matrix(const SimplicialComplex& k, const Simplex& s, int p, std::size_t cap) {
  const std::size_t id = simplex_index(k, s);
  return MatrixDegreePath(k, cap).upper(s.dim(), p)[id];
}

std::int64_t deg_A_p_matrix(const SimplicialComplex& k, const Simplex& s, int p, std::size_t cap) {
  const std::size_t id = simplex_index(k, s);
  return MatrixDegreePath(k, cap).adjacency(s.dim(), p)[id];
}

std::int64_t deg_A_p_maximal_matrix(const SimplicialComplex& k, const Simplex& s, int p, std::size_t cap) {
  const std::size_t id = simplex_index(k, s);
  return MatrixDegreePath(k, cap).adjacency_maximal(s.dim(), p)[id];
}

}  // namespace simpdeg
