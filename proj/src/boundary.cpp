#include "simpdeg/boundary.hpp"

#include <string>
#include <vector>

#include "simpdeg/error.hpp"

namespace simpdeg {

int epsilon_sign(std::span<const int> removed_positions, int q) {
  long long sum = 0;
  int prev = -1;
  for (int j : removed_positions) {
    if (j <= prev || j > q) throw DimensionError("removed positions must be strictly increasing within [0, q]");
    sum += j;
    prev = j;
  }
  const long long h = static_cast<long long>(removed_positions.size());
  return ((sum - h * (h - 1) / 2) % 2 == 0) ? 1 : -1;
}

namespace {

void require_closed(const SimplicialComplex& k, const char* what) {
  if (!k.closed()) throw ModeError(std::string(what) + " requires a closed complex");
}

/// Positions (in tau's canonical order) of the vertices of tau missing from sigma.
/// Returns false if sigma is not a face of tau.
bool removed_positions(const Simplex& tau, const Simplex& sigma, std::vector<int>& out) {
  out.clear();
  std::size_t j = 0;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (j < sigma.size() && sigma[j] == tau[i]) {
      ++j;
    } else {
      out.push_back(static_cast<int>(i));
    }
  }
  return j == sigma.size();
}

}  // namespace

SparseIntMatrix boundary_matrix(const SimplicialComplex& k, int q, int h) {
  require_closed(k, "boundary_matrix");
  if (q < 0 || q > k.dim()) throw DimensionError("q=" + std::to_string(q) + " outside [0, dim K=" + std::to_string(k.dim()) + "]");
  if (h < 0 || h > q) throw DimensionError("h=" + std::to_string(h) + " outside [0, q=" + std::to_string(q) + "]");

  const auto& cols = k.simplices(q);
  const auto& rows = k.simplices(q - h);
  std::vector<Triplet> entries;
  entries.reserve(cols.size() * static_cast<std::size_t>(binomial(q + 1, h)));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Simplex& sigma = cols[c];
    for_each_combination(q + 1, h, [&](std::span<const int> removed) {
      std::vector<VertexId> face;
      face.reserve(static_cast<std::size_t>(q - h + 1));
      std::size_t r = 0;
      for (int i = 0; i <= q; ++i) {
        if (r < removed.size() && removed[r] == i) {
          ++r;
          continue;
        }
        face.push_back(sigma[static_cast<std::size_t>(i)]);
      }
      auto row = k.index_of(Simplex::from_sorted_unchecked(std::move(face)));
      if (!row) throw ModeError("face of " + sigma.to_string() + " missing from complex");
      entries.push_back({*row, c, epsilon_sign(removed, q)});
    });
  }
  auto m = SparseIntMatrix::from_triplets(rows.size(), cols.size(), std::move(entries));
  m.set_bases(rows, cols);
  return m;
}

SparseIntMatrix coboundary_matrix(const SimplicialComplex& k, int q, int h) {
  return boundary_matrix(k, q, h).transpose();
}

int sign_of(const OrientedSimplex& tau, const OrientedSimplex& sigma) {
  std::vector<int> removed;
  if (sigma.base.empty() || !removed_positions(tau.base, sigma.base, removed)) return 0;
  return tau.sign * sigma.sign * epsilon_sign(removed, tau.base.dim());
}

int sig_U(const OrientedSimplex& si, const OrientedSimplex& sj, const OrientedSimplex& tau) {
  if (!is_face(si.base, tau.base) || !is_face(sj.base, tau.base)) return 0;
  return sign_of(tau, si) * sign_of(tau, sj);
}

int sig_L(const OrientedSimplex& si, const OrientedSimplex& sj, const OrientedSimplex& tau) {
  if (!is_face(tau.base, si.base) || !is_face(tau.base, sj.base)) return 0;
  return sign_of(si, tau) * sign_of(sj, tau);
}

std::int64_t odeg_U(const SimplicialComplex& k, int p, const OrientedSimplex& si, const OrientedSimplex& sj) {
  const Simplex u = set_union(si.base, sj.base);
  if (u.empty() || u.dim() > p || p > k.dim()) return 0;
  std::span<const std::uint32_t> best;
  bool first = true;
  for (VertexId v : u) {
    auto list = k.incident(p, v);
    if (first || list.size() < best.size()) best = list;
    first = false;
  }
  const auto& basis = k.simplices(p);
  std::int64_t total = 0;
  for (std::uint32_t id : best) total += sig_U(si, sj, oriented(basis[id]));
  return total;
}

std::int64_t odeg_L(const SimplicialComplex& k, int p, const OrientedSimplex& si, const OrientedSimplex& sj) {
  const Simplex common = set_intersection(si.base, sj.base);
  if (p < 0 || common.dim() < p) return 0;
  std::int64_t total = 0;
  for (const Simplex& tau : faces(common, p))
    if (k.contains(tau)) total += sig_L(si, sj, oriented(tau));
  return total;
}

Chain apply_boundary(const Chain& chain, int h) {
  Chain out;
  out.dim = chain.dim - h;
  if (h < 0 || h > chain.dim) throw DimensionError("h outside [0, chain dimension]");
  for (const auto& [sigma, coeff] : chain.coefficients) {
    if (sigma.dim() != chain.dim) throw DimensionError("chain term of wrong dimension");
    for (const Simplex& face : faces(sigma, chain.dim - h)) {
      const std::int64_t c = coeff * sign_of(oriented(sigma), oriented(face));
      if (c == 0) continue;
      auto& slot = out.coefficients[face];
      slot += c;
      if (slot == 0) out.coefficients.erase(face);
    }
  }
  return out;
}

std::int64_t inner_product(const Chain& a, const Chain& b) {
  if (a.dim != b.dim) return 0;
  std::int64_t total = 0;
  for (const auto& [s, c] : a.coefficients) {
    auto it = b.coefficients.find(s);
    if (it != b.coefficients.end()) total += c * it->second;
  }
  return total;
}

}  // namespace simpdeg
