#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace oracle {

int size_of(Mask m) { return std::popcount(m); }

Mask to_mask(const simpdeg::Simplex& s) {
  Mask m = 0;
  for (auto v : s) {
    if (v >= 32) throw std::out_of_range("oracle handles at most 32 vertices");
    m |= Mask{1} << v;
  }
  return m;
}

std::vector<int> vertices_of(Mask m) {
  std::vector<int> out;
  for (int v = 0; v < 32; ++v)
    if (m >> v & 1u) out.push_back(v);
  return out;
}

simpdeg::Simplex to_simplex(Mask m) {
  std::vector<simpdeg::VertexId> v;
  for (int x : vertices_of(m)) v.push_back(static_cast<simpdeg::VertexId>(x));
  return simpdeg::Simplex(std::move(v));
}

Naive::Naive(const std::vector<simpdeg::Simplex>& generators) {
  std::vector<Mask> gens;
  for (const auto& g : generators) gens.push_back(to_mask(g));
  for (Mask g : gens) {
    // Every nonempty submask of g.
    for (Mask sub = g; sub; sub = (sub - 1) & g) all_.push_back(sub);
  }
  std::sort(all_.begin(), all_.end());
  all_.erase(std::unique(all_.begin(), all_.end()), all_.end());
  for (Mask m : all_) {
    dim_ = std::max(dim_, dim_of(m));
    bool maximal = true;
    for (Mask o : all_)
      if (o != m && subset(m, o)) maximal = false;
    if (maximal) facets_.push_back(m);
  }
  by_dim_.resize(static_cast<std::size_t>(dim_ + 1));
  for (Mask m : all_) by_dim_[static_cast<std::size_t>(dim_of(m))].push_back(m);
}

bool Naive::has(Mask m) const { return std::binary_search(all_.begin(), all_.end(), m); }

std::vector<Mask> Naive::of_dim(int q) const {
  if (q < 0 || q > dim_) return {};
  return by_dim_[static_cast<std::size_t>(q)];
}

std::vector<Mask> Naive::basis(int q) const {
  auto out = of_dim(q);
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) { return vertices_of(a) < vertices_of(b); });
  return out;
}

bool Naive::lower(Mask s, Mask t, int p) const {
  // A common p-face exists iff some stored p-simplex sits in both.
  if (p < 0 || p > dim_) return false;
  for (Mask r : by_dim_[static_cast<std::size_t>(p)])
    if (subset(r, s) && subset(r, t)) return true;
  return false;
}

bool Naive::lower_strict(Mask s, Mask t, int p) const { return lower(s, t, p) && !lower(s, t, p + 1); }

bool Naive::upper(Mask s, Mask t, int p) const {
  if (p < 0 || p > dim_) return false;
  for (Mask r : by_dim_[static_cast<std::size_t>(p)])
    if (subset(s, r) && subset(t, r)) return true;
  return false;
}

bool Naive::upper_strict(Mask s, Mask t, int p) const { return upper(s, t, p) && !upper(s, t, p + 1); }

bool Naive::adjacent(Mask s, Mask t, int p) const {
  if (s == t) return false;
  const int p_prime = dim_of(s) + dim_of(t) - p;
  return lower_strict(s, t, p) && !upper(s, t, p_prime);
}

std::int64_t Naive::deg_lower(Mask s, int p, bool strict, int dim_filter) const {
  std::int64_t n = 0;
  for (Mask t : all_) {
    if (t == s || (dim_filter >= -1 && dim_of(t) != dim_filter)) continue;
    if (strict ? lower_strict(s, t, p) : lower(s, t, p)) ++n;
  }
  return n;
}

std::int64_t Naive::deg_upper(Mask s, int p, bool strict, int dim_filter) const {
  std::int64_t n = 0;
  for (Mask t : all_) {
    if (t == s || (dim_filter >= -1 && dim_of(t) != dim_filter)) continue;
    if (strict ? upper_strict(s, t, p) : upper(s, t, p)) ++n;
  }
  return n;
}

std::int64_t Naive::deg_adjacent(Mask s, int p) const {
  std::int64_t n = 0;
  for (Mask t : all_)
    if (adjacent(s, t, p)) ++n;
  return n;
}

std::int64_t Naive::deg_adjacent_maximal(Mask s, int p) const {
  std::vector<Mask> adj;
  for (Mask t : all_)
    if (adjacent(s, t, p)) adj.push_back(t);
  std::int64_t n = 0;
  for (Mask t : adj) {
    bool maximal = true;
    for (Mask u : adj)
      if (u != t && subset(t, u)) maximal = false;
    if (maximal) ++n;
  }
  return n;
}

std::int64_t Naive::top_strict(Mask s, int h) const {
  const int d = dim_of(s) + h;
  std::int64_t n = 0;
  for (Mask t : all_)
    if (t != s && dim_of(t) == d && upper_strict(s, t, d)) ++n;
  return n;
}

std::int64_t Naive::facets_containing(Mask s, bool include_self) const {
  std::int64_t n = 0;
  for (int h = 1; dim_of(s) + h <= dim_; ++h) n += top_strict(s, h);
  if (include_self && std::find(facets_.begin(), facets_.end(), s) != facets_.end()) ++n;
  return n;
}

std::int64_t Naive::maximal_degree(Mask s, bool include_self) const {
  std::int64_t n = facets_containing(s, include_self);
  for (int p = 0; p < dim_of(s); ++p) n += deg_adjacent_maximal(s, p);
  return n;
}

std::int64_t Naive::link_defect(Mask tau) const {
  std::int64_t n = 0;
  for (Mask r : all_)
    if (subset(tau, r)) n += ((size_of(r) - size_of(tau)) % 2 == 0) ? 1 : -1;
  return n;
}

int parity_sign(const std::vector<int>& removed, int q) {
  std::vector<int> perm = removed;
  for (int i = 0; i <= q; ++i)
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) perm.push_back(i);
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

namespace {

// Coefficient of face f in the boundary of s (f a face of s).
int face_sign(Mask s, Mask f) {
  const auto vs = vertices_of(s);
  std::vector<int> removed;
  for (int i = 0; i < static_cast<int>(vs.size()); ++i)
    if (!(f >> vs[i] & 1u)) removed.push_back(i);
  return parity_sign(removed, static_cast<int>(vs.size()) - 1);
}

using Dense = std::vector<std::vector<std::int64_t>>;

}  // namespace

Dense dense_boundary(const Naive& k, int q, int h) {
  const auto rows = k.basis(q - h);
  const auto cols = k.basis(q);
  Dense b(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (subset(rows[r], cols[c])) b[r][c] = face_sign(cols[c], rows[r]);
  return b;
}

Dense classical_upper(const Naive& k, int q) {
  const auto basis = k.basis(q);
  const std::size_t n = basis.size();
  Dense l(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        for (Mask t : k.all())
          if (dim_of(t) == q + 1 && subset(basis[i], t)) ++l[i][i];
        continue;
      }
      const Mask u = basis[i] | basis[j];
      if (dim_of(u) == q + 1 && k.has(u)) l[i][j] = face_sign(u, basis[i]) * face_sign(u, basis[j]);
    }
  return l;
}

Dense classical_lower(const Naive& k, int q) {
  const auto basis = k.basis(q);
  const std::size_t n = basis.size();
  Dense l(n, std::vector<std::int64_t>(n, 0));
  if (q == 0) return l;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        l[i][i] = q + 1;
        continue;
      }
      const Mask c = basis[i] & basis[j];
      if (dim_of(c) == q - 1) l[i][j] = face_sign(basis[i], c) * face_sign(basis[j], c);
    }
  return l;
}

Dense classical_laplacian(const Naive& k, int q) {
  if (q == 0) {
    // D - A.
    const auto basis = k.basis(0);
    const std::size_t n = basis.size();
    Dense l(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && k.has(basis[i] | basis[j])) {
          l[i][j] = -1;
          ++l[i][i];
        }
    return l;
  }
  const auto basis = k.basis(q);
  const std::size_t n = basis.size();
  Dense l(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        for (Mask t : k.all())
          if (dim_of(t) == q + 1 && subset(basis[i], t)) ++l[i][i];
        l[i][i] += q + 1;
        continue;
      }
      const Mask u = basis[i] | basis[j];
      const Mask c = basis[i] & basis[j];
      const bool up = dim_of(u) == q + 1 && k.has(u);
      if (!up && dim_of(c) == q - 1) l[i][j] = face_sign(basis[i], c) * face_sign(basis[j], c);
    }
  return l;
}

}  // namespace oracle
