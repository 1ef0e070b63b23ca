#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "simpdeg/complex.hpp"
#include "simpdeg/facets.hpp"
#include "simpdeg/simplex.hpp"

namespace simpdeg {

// Adjacency and degree notions for a q-simplex s of a closed complex K.
//
// For simplices s (dim q) and t (dim q') of a closed complex:
//   p-lower adjacent   <=> they share a p-face          <=> |s ∩ t| >= p+1
//   p-upper adjacent   <=> both lie in some p-simplex
//   p-adjacent (A_p)   <=> |s ∩ t| == p+1 and s ∪ t is not a simplex of K
// A starred ("strict") relation holds at p but not at p+1. A simplex is never
// adjacent to itself. Every function here throws ModeError on an explicit
// complex unless noted, and NotInComplex when the target is not stored.

/// Counts (q-h)-simplices p-lower adjacent to s. h may be negative (larger
/// simplices). Zero when q-h is outside [0, dim K] or p > q-h.
/// Throws DimensionError unless 0 <= p <= q.
std::int64_t deg_L_hp(const SimplicialComplex& k, const Simplex& s, int h, int p);
std::int64_t deg_L_hp_strict(const SimplicialComplex& k, const Simplex& s, int h, int p);

/// Same counts over simplices of every dimension.
std::int64_t deg_L_p(const SimplicialComplex& k, const Simplex& s, int p);
std::int64_t deg_L_p_strict(const SimplicialComplex& k, const Simplex& s, int p);

/// Counts (q+h)-simplices p-upper adjacent to s. Zero when no p-simplex can
/// contain s, i.e. p < max(q, q+h) or p > dim K. Throws DimensionError if p < 0.
std::int64_t deg_U_hp(const SimplicialComplex& k, const Simplex& s, int h, int p);
std::int64_t deg_U_hp_strict(const SimplicialComplex& k, const Simplex& s, int h, int p);

/// Same counts over simplices of every dimension.
std::int64_t deg_U_p(const SimplicialComplex& k, const Simplex& s, int p);
std::int64_t deg_U_p_strict(const SimplicialComplex& k, const Simplex& s, int p);

/// Alternating sum  sum_i (-1)^i * upper[i] * C(h+i, h), where
/// upper[i] = deg_U_hp(s, h+i, q+h+i). Turns plain upper degrees into the
/// strict (h, (q+h)*) upper degree.
std::int64_t strict_upper_from_upper(std::span<const std::int64_t> upper, int h);

/// Strict (h, (q+h)*) upper degree: (q+h)-simplices containing s that are
/// facets. h >= 1.
std::int64_t deg_U_top_strict(const SimplicialComplex& k, const Simplex& s, int h);
/// The same value through strict_upper_from_upper.
std::int64_t deg_U_top_strict_alternating(const SimplicialComplex& k, const Simplex& s, int h);

/// Whether a facet equal to the target counts toward its maximal upper degree.
/// `Exclude` keeps only facets strictly containing the target; `Include`
/// counts every facet the target belongs to (node-to-facets semantics).
enum class FacetSelfCount { Include, Exclude };

std::string_view to_string(FacetSelfCount mode) noexcept;
FacetSelfCount parse_facet_self_count(std::string_view text);

/// Number of facets F with s ⊆ F. Works in both modes; s need not be stored.
std::int64_t facet_degree(const SimplicialComplex& k, const Simplex& s);

/// 1 if s and t are p-adjacent, else 0. Both must be stored.
/// Throws DimensionError unless 0 <= p <= min(dim s, dim t).
int adj_p(const SimplicialComplex& k, const Simplex& s, const Simplex& t, int p);

std::int64_t deg_A_p(const SimplicialComplex& k, const Simplex& s, int p);
/// Counts p-adjacent simplices that are inclusion-maximal among the
/// simplices p-adjacent to s.
std::int64_t deg_A_p_maximal(const SimplicialComplex& k, const Simplex& s, int p);

/// deg_U_p(s, p1) (or its strict form) plus deg_A_p_maximal(s, p2).
/// Throws ParamError unless p1 > q > p2.
std::int64_t deg_p1p2(const SimplicialComplex& k, const Simplex& s, int p1, int p2, bool strict_upper = false);

struct MaximalDegree {
  std::int64_t adjacency = 0;  // sum over p < q of deg_A_p_maximal
  std::int64_t upper = 0;      // facets containing s
  std::int64_t total = 0;
};

MaximalDegree maximal_simplicial_degree(const SimplicialComplex& k, const Simplex& s,
                                        FacetSelfCount self = FacetSelfCount::Exclude);

/// Facet-only evaluation of facet and maximal degrees.
///
/// Needs nothing but the facet list, so it works on corpora whose closure is
/// far too large to store, and the target need not be stored anywhere. For a
/// (p+1)-subset I of s, the simplices meeting s exactly in I are the faces of
/// the sets F \ (s \ I) over facets F ⊇ I; the maximal ones among those that
/// are p-adjacent to s are exactly the maximal sets F \ (s \ I) whose union
/// with s is not covered by a facet.
class FacetDegreeEngine {
 public:
  explicit FacetDegreeEngine(const FacetIndex& index) : index_(&index) {}

  std::int64_t upper(const Simplex& s, FacetSelfCount self) const;
  std::int64_t maximal_adjacency(const Simplex& s, int p) const;
  /// Sum over p = 0 .. q-1.
  std::int64_t maximal_adjacency(const Simplex& s) const;
  MaximalDegree maximal_degree(const Simplex& s, FacetSelfCount self) const;

  std::vector<Simplex> upper_witnesses(const Simplex& s, FacetSelfCount self) const;
  std::vector<Simplex> maximal_adjacency_witnesses(const Simplex& s, int p) const;

 private:
  const FacetIndex* index_;
};

enum class DegreeKind {
  lower_hp,
  lower_hp_strict,
  lower_p,
  lower_p_strict,
  upper_hp,
  upper_hp_strict,
  upper_p,
  upper_p_strict,
  facet_deg,
  adj_p,
  adj_p_maximal,
  p1p2,
  maximal_adj_total,
  maximal_simplicial,
};

std::string_view to_string(DegreeKind kind) noexcept;
DegreeKind parse_degree_kind(std::string_view text);

struct DegreeParams {
  int h = 0;
  int p = 0;
  int p1 = 0;
  int p2 = 0;
  bool strict_upper = false;                      // p1p2 only
  FacetSelfCount self = FacetSelfCount::Exclude;  // maximal_simplicial only
};

struct DegreeQuery {
  Simplex target;
  DegreeKind kind = DegreeKind::lower_p;
  DegreeParams params;
  bool want_witnesses = false;
};

struct DegreeResult {
  std::int64_t value = 0;
  std::optional<std::vector<Simplex>> witnesses;  // sorted; size == value
};

/// Runs one query. Witnesses, when requested, are the counted simplices.
DegreeResult evaluate(const SimplicialComplex& k, const DegreeQuery& query);

}  // namespace simpdeg
