#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "simpdeg/complex.hpp"
#include "simpdeg/degrees.hpp"

namespace simpdeg {

/// max / mean / lower median / smallest mode of an integer sample.
struct SummaryStats {
  std::int64_t max = 0;
  std::int64_t sum = 0;
  std::size_t count = 0;
  std::int64_t median = 0;
  std::int64_t mode = 0;

  double mean() const { return count ? static_cast<double>(sum) / static_cast<double>(count) : 0.0; }
  /// Two decimals, half-even on the exact mean.
  std::string mean_text() const;
};

/// Throws EmptyDataset on an empty sample.
SummaryStats summarize(std::vector<std::int64_t> values);

struct FacetSizeStats {
  std::int64_t max_s = 0;
  std::string mean_s;  // two decimals
  std::int64_t median_s = 0;
  std::int64_t mode_s = 0;
};

/// Size statistics over facets (size = dimension + 1). Throws EmptyDataset.
FacetSizeStats facet_size_stats(const std::vector<Simplex>& facets);

enum class DegreeStatKind { classical_k, node_to_facets_kF, max_upper_kU_star, max_simplicial_k_star };

std::string_view to_string(DegreeStatKind kind) noexcept;
/// Accepts the enum names and the short forms k, kF, kU_star, k_star.
DegreeStatKind parse_degree_stat_kind(std::string_view text);

/// Which q-simplices form the population of a per-q statistic: every q-face
/// of the closure, or only q-simplices the dataset lists.
enum class Enumeration { closure, explicit_only };

std::string_view to_string(Enumeration e) noexcept;
Enumeration parse_enumeration(std::string_view text);

struct DegreeStats {
  DegreeStatKind kind = DegreeStatKind::classical_k;
  int q = 0;
  Enumeration enumeration = Enumeration::closure;
  FacetSelfCount self = FacetSelfCount::Include;
  std::string counting;  // how the population was counted, for the record
  SummaryStats stats;
};

/// Degree values for a statistic, one per member of its population, in a
/// deterministic order. For the node kinds the population is vertices
/// 0 .. node_population-1 (unused ids get degree 0) and q is ignored; k counts
/// stored 1-simplices, so on an explicit complex it counts listed edges only.
/// The per-q kinds work from the facet list, so any closure mode will do.
///
/// Throws DimensionError if q is outside [0, dim K] for the per-q kinds.
struct DegreeSample {
  std::vector<Simplex> members;  // empty for node kinds
  std::vector<std::int64_t> values;
};

struct DegreeRequest {
  DegreeStatKind kind = DegreeStatKind::classical_k;
  int q = 0;
  Enumeration enumeration = Enumeration::closure;
  FacetSelfCount self = FacetSelfCount::Include;
  std::size_t node_population = 0;  // node kinds; 0 means vertex_bound()
  unsigned threads = 1;
  bool keep_members = false;
};

DegreeSample degree_values(const SimplicialComplex& k, const DegreeRequest& request);

/// Human-readable note on what a request counts, recorded next to its output.
std::string describe_counting(const SimplicialComplex& k, const DegreeRequest& request);

DegreeStats degree_stats(const SimplicialComplex& k, const DegreeRequest& request);

/// k and k^F over the node population.
std::pair<DegreeStats, DegreeStats> classical_degree_stats(const SimplicialComplex& k, std::size_t node_population,
                                                           unsigned threads = 1);

DegreeStats simplicial_degree_stats(const SimplicialComplex& k, int q, DegreeStatKind kind, Enumeration enumeration,
                                    FacetSelfCount self = FacetSelfCount::Include, unsigned threads = 1);

struct DegreeDistribution {
  std::map<std::int64_t, std::size_t> histogram;
  std::map<std::int64_t, double> normalized;
  std::size_t population = 0;
};

DegreeDistribution degree_distribution(const std::vector<std::int64_t>& values);
DegreeDistribution degree_distribution(const SimplicialComplex& k, const DegreeRequest& request);

/// Recomputes max / sum / median / mode from a histogram.
SummaryStats stats_from_histogram(const DegreeDistribution& dist);

/// Writes `degree,probability` rows (support ascending) to csv_path and a
/// standalone log-log scatter to svg_path. Degree 0 cannot sit on a log axis
/// and is left out of the SVG only. Byte-identical for equal input.
/// Throws EmptyDataset on an empty distribution and IoError on write failure.
void emit_plot(const DegreeDistribution& dist, const std::filesystem::path& svg_path,
               const std::filesystem::path& csv_path, const std::string& title = "degree distribution");

std::string distribution_csv(const DegreeDistribution& dist);
std::string distribution_svg(const DegreeDistribution& dist, const std::string& title);

}  // namespace simpdeg
