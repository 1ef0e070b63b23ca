#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "simpdeg/simplex.hpp"

namespace simpdeg {

/// Maximal elements of a family of vertex sets under inclusion.
///
/// Input may contain duplicates. Sets are processed by size, largest first;
/// each candidate is tested only against accepted maxima that share its
/// least-frequent vertex (inverted index). Output order is deterministic:
/// size descending, then lexicographic.
std::vector<Simplex> maximal_elements(std::vector<Simplex> sets, unsigned threads = 1);

/// Inverted vertex -> facet index over a fixed facet list.
///
/// Answers containment queries against the closure generated by the facets
/// without ever materializing that closure.
class FacetIndex {
 public:
  FacetIndex() = default;
  explicit FacetIndex(std::vector<Simplex> facets);

  const std::vector<Simplex>& facets() const noexcept { return facets_; }
  std::size_t size() const noexcept { return facets_.size(); }

  /// Ids (positions in facets()) of facets containing vertex v, ascending.
  std::span<const std::uint32_t> facets_of(VertexId v) const noexcept;

  /// Ids of facets F with s ⊆ F, ascending.
  std::vector<std::uint32_t> facets_containing(const Simplex& s) const;
  std::size_t count_containing(const Simplex& s) const;

  /// True iff s is a face of some facet, i.e. s belongs to the closure.
  bool covered(const Simplex& s) const;
  bool is_facet(const Simplex& s) const;

 private:
  std::span<const std::uint32_t> shortest_posting(const Simplex& s) const noexcept;

  std::vector<Simplex> facets_;
  std::vector<std::vector<std::uint32_t>> postings_;
};

}  // namespace simpdeg
