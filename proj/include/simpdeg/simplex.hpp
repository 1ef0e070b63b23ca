#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace simpdeg {

using VertexId = std::uint32_t;

/// An unoriented simplex: a strictly increasing tuple of vertex ids.
///
/// The sorted tuple is the canonical key used for every set operation in the
/// library (membership, faces, cofacets, facet extraction). The orientation
/// carried by ascending order is the +1 orientation.
class Simplex {
 public:
  Simplex() = default;

  /// Throws InvalidSimplex unless `vertices` is non-empty and strictly increasing.
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<VertexId> vertices);

  /// Sorts and validates; throws InvalidSimplex on an empty list or a repeated vertex.
  static Simplex from_unsorted(std::vector<VertexId> vertices);

  /// No validation. Caller guarantees a strictly increasing, non-empty tuple.
  static Simplex from_sorted_unchecked(std::vector<VertexId> vertices) noexcept;

  int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  VertexId operator[](std::size_t i) const noexcept { return vertices_[i]; }
  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }

  bool contains(VertexId v) const noexcept;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  /// Lexicographic on vertex tuples; this is the basis order of every chain group.
  friend auto operator<=>(const Simplex& a, const Simplex& b) = default;

  std::string to_string() const;

 private:
  std::vector<VertexId> vertices_;
};

std::ostream& operator<<(std::ostream& os, const Simplex& s);

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
  std::size_t operator()(std::span<const VertexId> v) const noexcept;
};

/// A simplex together with an orientation relative to ascending vertex order.
struct OrientedSimplex {
  Simplex base;
  int sign = 1;

  friend bool operator==(const OrientedSimplex&, const OrientedSimplex&) = default;
  OrientedSimplex operator-() const { return {base, -sign}; }
};

/// Reduces an arbitrary vertex ordering to (sorted tuple, parity of the sorting permutation).
OrientedSimplex canonical_form(std::span<const VertexId> vertex_list);
inline OrientedSimplex canonical_form(std::initializer_list<VertexId> vertex_list) {
  return canonical_form(std::span<const VertexId>(vertex_list.begin(), vertex_list.size()));
}

/// All p-faces of `s` (the (p+1)-subsets), in lexicographic order.
/// Throws DimensionError unless 0 <= p <= dim(s).
std::vector<Simplex> faces(const Simplex& s, int p);

/// Subset test on vertex tuples: true iff every vertex of `t` is a vertex of `s`.
bool is_face(const Simplex& t, const Simplex& s) noexcept;

Simplex set_union(const Simplex& a, const Simplex& b);
/// Empty result is returned as a default-constructed (empty) Simplex.
Simplex set_intersection(const Simplex& a, const Simplex& b);
Simplex set_difference(const Simplex& a, const Simplex& b);
std::size_t intersection_size(const Simplex& a, const Simplex& b) noexcept;

/// Binomial coefficient; 0 when k < 0 or k > n.
std::int64_t binomial(int n, int k) noexcept;

/// Calls fn(positions) for every strictly increasing k-subset of {0, ..., n-1},
/// in lexicographic order. `positions` is only valid during the call.
void for_each_combination(int n, int k, const std::function<void(std::span<const int>)>& fn);

}  // namespace simpdeg
