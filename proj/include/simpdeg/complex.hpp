#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "simpdeg/facets.hpp"
#include "simpdeg/simplex.hpp"

namespace simpdeg {

/// How the input simplex list is turned into a stored simplex set.
///
/// `Closed` stores the downward closure (every face of every input), which is
/// what the adjacency and Laplacian theory assumes. `Explicit` stores exactly
/// the input simplices; it exists for dataset statistics that count only the
/// simplices a corpus actually lists.
enum class ClosureMode { Closed, Explicit };

std::string_view to_string(ClosureMode mode) noexcept;
/// Parses "closed" / "explicit"; throws ParamError otherwise.
ClosureMode parse_closure_mode(std::string_view text);

/// Immutable, indexed store of simplices grouped by dimension.
///
/// The basis of each chain group C_q is the list `simplices(q)`, sorted
/// lexicographically. In closed mode a dimension is materialized from the
/// facet list the first time it is requested, so huge facets never force a
/// global closure. All queries are safe to call concurrently.
class SimplicialComplex {
 public:
  SimplicialComplex();

  /// Builds a complex from `simplices`. Duplicates are ignored.
  static SimplicialComplex build(std::vector<Simplex> simplices, ClosureMode mode, unsigned threads = 1);

  ClosureMode mode() const noexcept;
  bool closed() const noexcept { return mode() == ClosureMode::Closed; }

  /// Maximum stored dimension, -1 for the empty complex.
  int dim() const noexcept;

  /// One past the largest vertex id appearing in any stored simplex.
  std::size_t vertex_bound() const noexcept;

  /// Basis of C_q; empty when q is outside [0, dim()].
  const std::vector<Simplex>& simplices(int q) const;
  std::size_t count(int q) const { return simplices(q).size(); }

  /// Per-dimension simplex counts (f_0, ..., f_dim). Materializes every dimension.
  std::vector<std::size_t> f_vector() const;

  /// Position of s in the basis of C_{dim s}, if stored.
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  /// Stored q-simplices that contain vertex v, as basis indices, ascending.
  std::span<const std::uint32_t> incident(int q, VertexId v) const;

  /// Stored q'-simplices having s as a face. Throws NotInComplex if s is not
  /// stored. Empty when q' > dim(); [s] when q' == dim(s).
  std::vector<Simplex> cofacets(const Simplex& s, int q_prime) const;

  /// Inclusion-maximal stored simplices, size descending then lexicographic.
  const std::vector<Simplex>& facets() const noexcept;
  const FacetIndex& facet_index() const noexcept;
  bool is_facet(const Simplex& s) const { return facet_index().is_facet(s); }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Free-function spelling used throughout the library and tests.
inline SimplicialComplex build_complex(std::vector<Simplex> simplices, ClosureMode mode, unsigned threads = 1) {
  return SimplicialComplex::build(std::move(simplices), mode, threads);
}

}  // namespace simpdeg
