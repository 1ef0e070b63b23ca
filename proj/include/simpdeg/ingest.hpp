#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "simpdeg/complex.hpp"
#include "simpdeg/simplex.hpp"

namespace simpdeg {

using RawLabel = std::int64_t;

/// Records larger than this are skipped (and counted), not rejected.
inline constexpr std::size_t kMaxRecordSize = 25;

/// One simplex as listed in a dataset, raw labels in file order.
struct SimplexRecord {
  std::vector<RawLabel> vertices;
  std::int64_t timestamp = 0;
};

/// Streams records from the three-file simplex format
///
///     <name>-nverts.txt     one record size per line
///     <name>-simplices.txt  the vertex labels of all records, one per line
///     <name>-times.txt      one timestamp per line
///
/// The files are read in lockstep. Throws FormatError (with file and 1-based
/// line) on a non-integer token, a non-positive size, or files that disagree
/// in length, and IoError if a file cannot be opened.
void parse_scholp(const std::filesystem::path& dir, const std::string& name,
                  const std::function<void(const SimplexRecord&)>& sink);

/// The same parser over already-open streams; names are used in messages.
void parse_scholp_streams(std::istream& nverts, std::istream& simplices, std::istream& times,
                          const std::string& name, const std::function<void(const SimplexRecord&)>& sink);

/// Row of the dataset summary table plus ingest diagnostics.
struct DatasetSummary {
  std::string name;
  std::size_t nodes = 0;                       // declared when known, else labels_seen
  std::optional<std::size_t> declared_nodes;   // lines of <name>-node-labels.txt
  std::size_t labels_seen = 0;                 // distinct labels used by kept records
  std::size_t simplices = 0;
  std::size_t distinct_simplices = 0;          // dedup on the ordered tuple
  std::size_t unordered_distinct_simplices = 0;  // dedup on the vertex set
  std::size_t facets = 0;
  std::size_t skipped_oversized = 0;
  std::size_t records_with_repeats = 0;        // records naming a vertex twice

  std::string pct_facets_per_simplices() const;
  std::string pct_facets_per_udsimplices() const;

  std::string to_json(int indent = 2) const;
  static std::string csv_header();
  std::string csv_row() const;
};

/// Incremental dedup over a record stream.
///
/// Keeps two hash sets: ordered tuples and sorted vertex sets. Vertex ids in
/// the results are dense, assigned in ascending raw-label order, so the output
/// does not depend on record order.
class DedupPipeline {
 public:
  void add(const SimplexRecord& record);

  struct Result {
    DatasetSummary summary;
    std::vector<Simplex> unordered_distinct;  // lexicographic
    std::vector<Simplex> facets;              // size descending, then lexicographic
    std::vector<RawLabel> labels;             // dense id -> raw label
  };

  /// Finalizes. `declared_nodes` feeds the summary's node count.
  Result finish(std::optional<std::size_t> declared_nodes = std::nullopt, unsigned threads = 1);

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<RawLabel>& v) const noexcept;
  };
  std::size_t simplices_ = 0;
  std::size_t oversized_ = 0;
  std::size_t repeats_ = 0;
  std::unordered_set<std::vector<RawLabel>, VecHash> ordered_;
  std::unordered_set<std::vector<RawLabel>, VecHash> unordered_;
};

DedupPipeline::Result dedup_pipeline(const std::vector<SimplexRecord>& records, unsigned threads = 1);

/// Maximal elements of a deduplicated family.
std::vector<Simplex> extract_facets(std::vector<Simplex> unordered_distinct, unsigned threads = 1);

/// Number of non-blank lines in <name>-node-labels.txt, if the file exists
/// (looked up like load_dataset does).
std::optional<std::size_t> read_declared_nodes(const std::filesystem::path& dir, const std::string& name);

struct LoadedDataset {
  SimplicialComplex complex;
  DatasetSummary summary;
  std::vector<RawLabel> labels;  // dense id -> raw label
  /// Nodes that statistics range over: declared count when known, else labels seen.
  std::size_t node_population = 0;
};

/// parse -> dedup -> build_complex over the unordered distinct simplices.
/// The files may sit in `dir` itself or in `dir/<name>/`.
LoadedDataset load_dataset(const std::filesystem::path& dir, const std::string& name, ClosureMode mode,
                           unsigned threads = 1);

/// Downloads <base>/<name>/<name>-{nverts,simplices,times}.txt (and the
/// optional node-labels file) into dest/<name>/ unless already present.
/// `base` defaults to $SIMPDEG_DATA_URL. Returns the directory holding the
/// files. Throws IoError when no base URL is configured or a transfer fails.
std::filesystem::path fetch_dataset(const std::string& name, const std::filesystem::path& dest,
                                    std::optional<std::string> base = std::nullopt);

}  // namespace simpdeg
