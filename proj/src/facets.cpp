#include "simpdeg/facets.hpp"

#include <algorithm>

#include "simpdeg/parallel.hpp"

namespace simpdeg {

namespace {

bool size_desc_then_lex(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

std::size_t vertex_bound(const std::vector<Simplex>& sets) {
  VertexId max_v = 0;
  bool any = false;
  for (const auto& s : sets)
    if (!s.empty()) {
      max_v = std::max(max_v, s.vertices().back());
      any = true;
    }
  return any ? static_cast<std::size_t>(max_v) + 1 : 0;
}

}  // namespace

std::vector<Simplex> maximal_elements(std::vector<Simplex> sets, unsigned threads) {
  std::sort(sets.begin(), sets.end(), size_desc_then_lex);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  std::vector<std::vector<std::uint32_t>> postings(vertex_bound(sets));
  std::vector<Simplex> accepted;

  std::size_t bucket_begin = 0;
  while (bucket_begin < sets.size()) {
    std::size_t bucket_end = bucket_begin;
    while (bucket_end < sets.size() && sets[bucket_end].size() == sets[bucket_begin].size()) ++bucket_end;

    // Distinct sets of equal size never contain one another, so a bucket only
    // has to be tested against maxima from strictly larger buckets.
    std::vector<char> keep(bucket_end - bucket_begin, 0);
    parallel_for(keep.size(), threads, [&](std::size_t i) {
      const Simplex& s = sets[bucket_begin + i];
      const std::vector<std::uint32_t>* best = nullptr;
      for (VertexId v : s) {
        const auto& list = postings[v];
        if (!best || list.size() < best->size()) best = &list;
        if (best->empty()) break;
      }
      bool contained = false;
      if (best)
        for (std::uint32_t f : *best)
          if (is_face(s, accepted[f])) {
            contained = true;
            break;
          }
      keep[i] = contained ? 0 : 1;
    });

    for (std::size_t i = 0; i < keep.size(); ++i) {
      if (!keep[i]) continue;
      const auto id = static_cast<std::uint32_t>(accepted.size());
      accepted.push_back(sets[bucket_begin + i]);
      for (VertexId v : accepted.back()) postings[v].push_back(id);
    }
    bucket_begin = bucket_end;
  }
  return accepted;
}

FacetIndex::FacetIndex(std::vector<Simplex> facets) : facets_(std::move(facets)) {
  postings_.resize(vertex_bound(facets_));
  for (std::size_t f = 0; f < facets_.size(); ++f)
    for (VertexId v : facets_[f]) postings_[v].push_back(static_cast<std::uint32_t>(f));
}

std::span<const std::uint32_t> FacetIndex::facets_of(VertexId v) const noexcept {
  if (v >= postings_.size()) return {};
  return postings_[v];
}

std::span<const std::uint32_t> FacetIndex::shortest_posting(const Simplex& s) const noexcept {
  std::span<const std::uint32_t> best;
  bool first = true;
  for (VertexId v : s) {
    auto list = facets_of(v);
    if (first || list.size() < best.size()) best = list;
    first = false;
    if (best.empty()) break;
  }
  return best;
}

std::vector<std::uint32_t> FacetIndex::facets_containing(const Simplex& s) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t f : shortest_posting(s))
    if (is_face(s, facets_[f])) out.push_back(f);
  return out;
}

std::size_t FacetIndex::count_containing(const Simplex& s) const {
  std::size_t n = 0;
  for (std::uint32_t f : shortest_posting(s))
    if (is_face(s, facets_[f])) ++n;
  return n;
}

bool FacetIndex::covered(const Simplex& s) const {
  for (std::uint32_t f : shortest_posting(s))
    if (is_face(s, facets_[f])) return true;
  return false;
}

bool FacetIndex::is_facet(const Simplex& s) const {
  for (std::uint32_t f : shortest_posting(s))
    if (facets_[f] == s) return true;
  return false;
}

}  // namespace simpdeg
