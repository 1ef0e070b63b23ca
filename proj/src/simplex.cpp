#include "simpdeg/simplex.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "simpdeg/error.hpp"

namespace simpdeg {

namespace {

void validate_sorted(const std::vector<VertexId>& v) {
  if (v.empty()) throw InvalidSimplex("empty vertex list");
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1] == v[i]) throw InvalidSimplex("repeated vertex " + std::to_string(v[i]));
    if (v[i - 1] > v[i]) throw InvalidSimplex("vertex list is not strictly increasing");
  }
}

}  // namespace

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  validate_sorted(vertices_);
}

Simplex::Simplex(std::initializer_list<VertexId> vertices) : vertices_(vertices) {
  validate_sorted(vertices_);
}

Simplex Simplex::from_unsorted(std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  return Simplex(std::move(vertices));
}

Simplex Simplex::from_sorted_unchecked(std::vector<VertexId> vertices) noexcept {
  Simplex s;
  s.vertices_ = std::move(vertices);
  return s;
}

bool Simplex::contains(VertexId v) const noexcept {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Simplex& s) {
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  return os << '}';
}

std::size_t SimplexHash::operator()(std::span<const VertexId> v) const noexcept {
  // FNV-1a over the 32-bit words, then a final avalanche.
  std::uint64_t h = 1469598103934665603ULL;
  for (VertexId x : v) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept { return (*this)(s.vertices()); }

OrientedSimplex canonical_form(std::span<const VertexId> vertex_list) {
  std::vector<VertexId> v(vertex_list.begin(), vertex_list.end());
  if (v.empty()) throw InvalidSimplex("empty vertex list");
  // Parity by inversion count; simplices are at most a few dozen vertices.
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] == v[j]) throw InvalidSimplex("repeated vertex " + std::to_string(v[i]));
      if (v[i] > v[j]) ++inversions;
    }
  std::sort(v.begin(), v.end());
  return {Simplex::from_sorted_unchecked(std::move(v)), inversions % 2 == 0 ? 1 : -1};
}

void for_each_combination(int n, int k, const std::function<void(std::span<const int>)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::vector<Simplex> faces(const Simplex& s, int p) {
  if (p < 0 || p > s.dim())
    throw DimensionError("face dimension " + std::to_string(p) + " outside [0, " + std::to_string(s.dim()) + "]");
  std::vector<Simplex> out;
  out.reserve(static_cast<std::size_t>(binomial(static_cast<int>(s.size()), p + 1)));
  for_each_combination(static_cast<int>(s.size()), p + 1, [&](std::span<const int> pos) {
    std::vector<VertexId> v;
    v.reserve(pos.size());
    for (int i : pos) v.push_back(s[static_cast<std::size_t>(i)]);
    out.push_back(Simplex::from_sorted_unchecked(std::move(v)));
  });
  return out;
}

bool is_face(const Simplex& t, const Simplex& s) noexcept {
  return t.size() <= s.size() && std::includes(s.begin(), s.end(), t.begin(), t.end());
}

Simplex set_union(const Simplex& a, const Simplex& b) {
  std::vector<VertexId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Simplex::from_sorted_unchecked(std::move(out));
}

Simplex set_intersection(const Simplex& a, const Simplex& b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Simplex::from_sorted_unchecked(std::move(out));
}

Simplex set_difference(const Simplex& a, const Simplex& b) {
  std::vector<VertexId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Simplex::from_sorted_unchecked(std::move(out));
}

std::size_t intersection_size(const Simplex& a, const Simplex& b) noexcept {
  std::size_t n = 0;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

std::int64_t binomial(int n, int k) noexcept {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace simpdeg
