#include "simpdeg/degrees.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "simpdeg/error.hpp"

namespace simpdeg {

namespace {

void require_closed(const SimplicialComplex& k, const char* what) {
  if (!k.closed()) throw ModeError(std::string(what) + " requires a closed complex");
}

void require_stored(const SimplicialComplex& k, const Simplex& s) {
  if (s.empty() || !k.contains(s)) throw NotInComplex(s.to_string() + " is not stored in the complex");
}

void check_p(int p, int q) {
  if (p < 0 || p > q)
    throw DimensionError("p=" + std::to_string(p) + " outside [0, q=" + std::to_string(q) + "]");
}

/// Basis ids of stored d-simplices sharing at least one vertex with s.
std::vector<std::uint32_t> touching(const SimplicialComplex& k, const Simplex& s, int d) {
  std::vector<std::uint32_t> ids;
  for (VertexId v : s) {
    auto list = k.incident(d, v);
    ids.insert(ids.end(), list.begin(), list.end());
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::vector<Simplex> lower_set(const SimplicialComplex& k, const Simplex& s, int d, int p, bool strict) {
  std::vector<Simplex> out;
  if (d < p || d > k.dim()) return out;
  const auto& basis = k.simplices(d);
  const auto need = static_cast<std::size_t>(p + 1);
  for (std::uint32_t id : touching(k, s, d)) {
    const Simplex& t = basis[id];
    if (t == s) continue;
    const std::size_t common = intersection_size(s, t);
    if (strict ? common == need : common >= need) out.push_back(t);
  }
  return out;
}

/// Largest facet containing u, 0 if none.
std::size_t largest_cover(const FacetIndex& index, const Simplex& u) {
  std::size_t best = 0;
  for (std::uint32_t id : index.facets_containing(u)) best = std::max(best, index.facets()[id].size());
  return best;
}

/// True iff u lies in some stored p-simplex.
bool in_p_simplex(const FacetIndex& index, const Simplex& u, int p) {
  const auto need = static_cast<std::size_t>(p) + 1;
  return u.size() <= need && largest_cover(index, u) >= need;
}

std::vector<Simplex> upper_set(const SimplicialComplex& k, const Simplex& s, int d, int p, bool strict) {
  std::vector<Simplex> out;
  if (d < 0 || d > p || p > k.dim() || s.dim() > p) return out;
  const FacetIndex& index = k.facet_index();
  // Every p-simplex containing s lies in a facet containing s, so candidates
  // are the d-faces of those facets.
  std::set<Simplex> candidates;
  for (std::uint32_t id : index.facets_containing(s)) {
    const Simplex& f = index.facets()[id];
    if (static_cast<int>(f.size()) < p + 1 || static_cast<int>(f.size()) < d + 1) continue;
    for (Simplex& t : faces(f, d)) candidates.insert(std::move(t));
  }
  for (const Simplex& t : candidates) {
    if (t == s) continue;
    const Simplex u = set_union(s, t);
    if (static_cast<int>(u.size()) > p + 1) continue;
    if (strict && in_p_simplex(index, u, p + 1)) continue;
    out.push_back(t);
  }
  return out;
}

std::vector<Simplex> adjacent_set(const SimplicialComplex& k, const Simplex& s, int p) {
  std::vector<Simplex> out;
  const FacetIndex& index = k.facet_index();
  const auto need = static_cast<std::size_t>(p + 1);
  for (int d = p; d <= k.dim(); ++d) {
    const auto& basis = k.simplices(d);
    for (std::uint32_t id : touching(k, s, d)) {
      const Simplex& t = basis[id];
      if (intersection_size(s, t) != need) continue;
      if (!index.covered(set_union(s, t))) out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simplex> all_lower(const SimplicialComplex& k, const Simplex& s, int p, bool strict) {
  std::vector<Simplex> out;
  for (int d = p; d <= k.dim(); ++d) {
    auto part = lower_set(k, s, d, p, strict);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simplex> all_upper(const SimplicialComplex& k, const Simplex& s, int p, bool strict) {
  std::vector<Simplex> out;
  for (int d = 0; d <= p; ++d) {
    auto part = upper_set(k, s, d, p, strict);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simplex> top_strict_set(const SimplicialComplex& k, const Simplex& s, int h) {
  if (h < 1) throw DimensionError("strict upper degree needs h >= 1");
  std::vector<Simplex> out;
  for (Simplex& t : k.cofacets(s, s.dim() + h))
    if (k.is_facet(t)) out.push_back(std::move(t));
  return out;
}

void prepare(const SimplicialComplex& k, const Simplex& s, const char* what) {
  require_closed(k, what);
  require_stored(k, s);
}

std::int64_t size_of(const std::vector<Simplex>& v) { return static_cast<std::int64_t>(v.size()); }

}  // namespace

std::int64_t deg_L_hp(const SimplicialComplex& k, const Simplex& s, int h, int p) {
  prepare(k, s, "deg_L_hp");
  check_p(p, s.dim());
  return size_of(lower_set(k, s, s.dim() - h, p, false));
}

std::int64_t deg_L_hp_strict(const SimplicialComplex& k, const Simplex& s, int h, int p) {
  prepare(k, s, "deg_L_hp_strict");
  check_p(p, s.dim());
  return size_of(lower_set(k, s, s.dim() - h, p, true));
}

std::int64_t deg_L_p(const SimplicialComplex& k, const Simplex& s, int p) {
  prepare(k, s, "deg_L_p");
  check_p(p, s.dim());
  return size_of(all_lower(k, s, p, false));
}

std::int64_t deg_L_p_strict(const SimplicialComplex& k, const Simplex& s, int p) {
  prepare(k, s, "deg_L_p_strict");
  check_p(p, s.dim());
  return size_of(all_lower(k, s, p, true));
}

std::int64_t deg_U_hp(const SimplicialComplex& k, const Simplex& s, int h, int p) {
  prepare(k, s, "deg_U_hp");
  if (p < 0) throw DimensionError("p must be non-negative");
  return size_of(upper_set(k, s, s.dim() + h, p, false));
}

std::int64_t deg_U_hp_strict(const SimplicialComplex& k, const Simplex& s, int h, int p) {
  prepare(k, s, "deg_U_hp_strict");
  if (p < 0) throw DimensionError("p must be non-negative");
  return size_of(upper_set(k, s, s.dim() + h, p, true));
}

std::int64_t deg_U_p(const SimplicialComplex& k, const Simplex& s, int p) {
  prepare(k, s, "deg_U_p");
  if (p < 0) throw DimensionError("p must be non-negative");
  return size_of(all_upper(k, s, p, false));
}

std::int64_t deg_U_p_strict(const SimplicialComplex& k, const Simplex& s, int p) {
  prepare(k, s, "deg_U_p_strict");
  if (p < 0) throw DimensionError("p must be non-negative");
  return size_of(all_upper(k, s, p, true));
}

std::int64_t strict_upper_from_upper(std::span<const std::int64_t> upper, int h) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < upper.size(); ++i) {
    const std::int64_t term = upper[i] * binomial(h + static_cast<int>(i), h);
    total += (i % 2 == 0) ? term : -term;
  }
  return total;
}

std::int64_t deg_U_top_strict(const SimplicialComplex& k, const Simplex& s, int h) {
  prepare(k, s, "deg_U_top_strict");
  return size_of(top_strict_set(k, s, h));
}

std::int64_t deg_U_top_strict_alternating(const SimplicialComplex& k, const Simplex& s, int h) {
  prepare(k, s, "deg_U_top_strict_alternating");
  if (h < 1) throw DimensionError("strict upper degree needs h >= 1");
  const int q = s.dim();
  std::vector<std::int64_t> upper;
  for (int i = 0; q + h + i <= k.dim(); ++i) upper.push_back(deg_U_hp(k, s, h + i, q + h + i));
  return strict_upper_from_upper(upper, h);
}

std::string_view to_string(FacetSelfCount mode) noexcept {
  return mode == FacetSelfCount::Include ? "include" : "exclude";
}

FacetSelfCount parse_facet_self_count(std::string_view text) {
  if (text == "include") return FacetSelfCount::Include;
  if (text == "exclude") return FacetSelfCount::Exclude;
  throw ParamError("unknown facet self-count '" + std::string(text) + "' (expected include|exclude)");
}

std::int64_t facet_degree(const SimplicialComplex& k, const Simplex& s) {
  return static_cast<std::int64_t>(k.facet_index().count_containing(s));
}

int adj_p(const SimplicialComplex& k, const Simplex& s, const Simplex& t, int p) {
  prepare(k, s, "adj_p");
  require_stored(k, t);
  check_p(p, std::min(s.dim(), t.dim()));
  if (s == t) return 0;
  if (intersection_size(s, t) != static_cast<std::size_t>(p + 1)) return 0;
  return k.facet_index().covered(set_union(s, t)) ? 0 : 1;
}

std::int64_t deg_A_p(const SimplicialComplex& k, const Simplex& s, int p) {
  prepare(k, s, "deg_A_p");
  check_p(p, s.dim());
  return size_of(adjacent_set(k, s, p));
}

std::int64_t deg_A_p_maximal(const SimplicialComplex& k, const Simplex& s, int p) {
  prepare(k, s, "deg_A_p_maximal");
  check_p(p, s.dim());
  return FacetDegreeEngine(k.facet_index()).maximal_adjacency(s, p);
}

std::int64_t deg_p1p2(const SimplicialComplex& k, const Simplex& s, int p1, int p2, bool strict_upper) {
  prepare(k, s, "deg_p1p2");
  const int q = s.dim();
  if (!(p1 > q) || !(p2 < q) || p2 < 0)
    throw ParamError("need p1 > q > p2 >= 0 (q=" + std::to_string(q) + ", p1=" + std::to_string(p1) +
                     ", p2=" + std::to_string(p2) + ")");
  const std::int64_t upper = strict_upper ? deg_U_p_strict(k, s, p1) : deg_U_p(k, s, p1);
  return upper + deg_A_p_maximal(k, s, p2);
}

MaximalDegree maximal_simplicial_degree(const SimplicialComplex& k, const Simplex& s, FacetSelfCount self) {
  prepare(k, s, "maximal_simplicial_degree");
  return FacetDegreeEngine(k.facet_index()).maximal_degree(s, self);
}

std::int64_t FacetDegreeEngine::upper(const Simplex& s, FacetSelfCount self) const {
  auto n = static_cast<std::int64_t>(index_->count_containing(s));
  if (self == FacetSelfCount::Exclude && index_->is_facet(s)) --n;
  return n;
}

std::vector<Simplex> FacetDegreeEngine::upper_witnesses(const Simplex& s, FacetSelfCount self) const {
  std::vector<Simplex> out;
  for (std::uint32_t id : index_->facets_containing(s)) {
    const Simplex& f = index_->facets()[id];
    if (self == FacetSelfCount::Exclude && f == s) continue;
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simplex> FacetDegreeEngine::maximal_adjacency_witnesses(const Simplex& s, int p) const {
  const int q = s.dim();
  check_p(p, q);
  std::vector<Simplex> out;
  if (p == q) return out;
  for_each_combination(q + 1, p + 1, [&](std::span<const int> pos) {
    std::vector<VertexId> iv;
    iv.reserve(pos.size());
    for (int i : pos) iv.push_back(s[static_cast<std::size_t>(i)]);
    const Simplex shared = Simplex::from_sorted_unchecked(std::move(iv));
    const Simplex rest = set_difference(s, shared);
    std::vector<Simplex> reach;
    for (std::uint32_t id : index_->facets_containing(shared)) reach.push_back(set_difference(index_->facets()[id], rest));
    for (Simplex& m : maximal_elements(std::move(reach)))
      if (!index_->covered(set_union(s, m))) out.push_back(std::move(m));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t FacetDegreeEngine::maximal_adjacency(const Simplex& s, int p) const {
  return static_cast<std::int64_t>(maximal_adjacency_witnesses(s, p).size());
}

std::int64_t FacetDegreeEngine::maximal_adjacency(const Simplex& s) const {
  std::int64_t total = 0;
  for (int p = 0; p < s.dim(); ++p) total += maximal_adjacency(s, p);
  return total;
}

MaximalDegree FacetDegreeEngine::maximal_degree(const Simplex& s, FacetSelfCount self) const {
  MaximalDegree d;
  d.adjacency = maximal_adjacency(s);
  d.upper = upper(s, self);
  d.total = d.adjacency + d.upper;
  return d;
}

namespace {

constexpr std::pair<DegreeKind, std::string_view> kKindNames[] = {
    {DegreeKind::lower_hp, "lower_hp"},
    {DegreeKind::lower_hp_strict, "lower_hp_strict"},
    {DegreeKind::lower_p, "lower_p"},
    {DegreeKind::lower_p_strict, "lower_p_strict"},
    {DegreeKind::upper_hp, "upper_hp"},
    {DegreeKind::upper_hp_strict, "upper_hp_strict"},
    {DegreeKind::upper_p, "upper_p"},
    {DegreeKind::upper_p_strict, "upper_p_strict"},
    {DegreeKind::facet_deg, "facet_deg"},
    {DegreeKind::adj_p, "adj_p"},
    {DegreeKind::adj_p_maximal, "adj_p_maximal"},
    {DegreeKind::p1p2, "p1p2"},
    {DegreeKind::maximal_adj_total, "maximal_adj_total"},
    {DegreeKind::maximal_simplicial, "maximal_simplicial"},
};

std::vector<Simplex> merged(std::vector<Simplex> a, const std::vector<Simplex>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace

std::string_view to_string(DegreeKind kind) noexcept {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "?";
}

DegreeKind parse_degree_kind(std::string_view text) {
  for (const auto& [k, name] : kKindNames)
    if (name == text) return k;
  throw ParamError("unknown degree kind '" + std::string(text) + "'");
}

DegreeResult evaluate(const SimplicialComplex& k, const DegreeQuery& query) {
  const Simplex& s = query.target;
  const DegreeParams& a = query.params;
  if (query.kind == DegreeKind::facet_deg) {
    require_stored(k, s);
  } else {
    prepare(k, s, "degree query");
  }
  const int q = s.dim();
  const FacetDegreeEngine engine(k.facet_index());
  std::vector<Simplex> w;

  switch (query.kind) {
    case DegreeKind::lower_hp:
    case DegreeKind::lower_hp_strict:
      check_p(a.p, q);
      w = lower_set(k, s, q - a.h, a.p, query.kind == DegreeKind::lower_hp_strict);
      std::sort(w.begin(), w.end());
      break;
    case DegreeKind::lower_p:
    case DegreeKind::lower_p_strict:
      check_p(a.p, q);
      w = all_lower(k, s, a.p, query.kind == DegreeKind::lower_p_strict);
      break;
    case DegreeKind::upper_hp:
    case DegreeKind::upper_hp_strict:
      if (a.p < 0) throw DimensionError("p must be non-negative");
      w = upper_set(k, s, q + a.h, a.p, query.kind == DegreeKind::upper_hp_strict);
      break;
    case DegreeKind::upper_p:
    case DegreeKind::upper_p_strict:
      if (a.p < 0) throw DimensionError("p must be non-negative");
      w = all_upper(k, s, a.p, query.kind == DegreeKind::upper_p_strict);
      break;
    case DegreeKind::facet_deg:
      w = engine.upper_witnesses(s, FacetSelfCount::Include);
      break;
    case DegreeKind::adj_p:
      check_p(a.p, q);
      w = adjacent_set(k, s, a.p);
      break;
    case DegreeKind::adj_p_maximal:
      w = engine.maximal_adjacency_witnesses(s, a.p);
      break;
    case DegreeKind::p1p2:
      if (!(a.p1 > q) || !(a.p2 < q) || a.p2 < 0) throw ParamError("need p1 > q > p2 >= 0");
      w = merged(all_upper(k, s, a.p1, a.strict_upper), engine.maximal_adjacency_witnesses(s, a.p2));
      break;
    case DegreeKind::maximal_adj_total:
      for (int p = 0; p < q; ++p) w = merged(std::move(w), engine.maximal_adjacency_witnesses(s, p));
      break;
    case DegreeKind::maximal_simplicial:
      for (int p = 0; p < q; ++p) w = merged(std::move(w), engine.maximal_adjacency_witnesses(s, p));
      w = merged(std::move(w), engine.upper_witnesses(s, a.self));
      break;
  }

  DegreeResult r;
  r.value = size_of(w);
  if (query.want_witnesses) r.witnesses = std::move(w);
  return r;
}

}  // namespace simpdeg
