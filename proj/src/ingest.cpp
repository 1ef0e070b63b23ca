#include "simpdeg/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>

#include "json.hpp"

#include "simpdeg/error.hpp"
#include "simpdeg/facets.hpp"
#include "simpdeg/numeric.hpp"

namespace simpdeg {

namespace fs = std::filesystem;

namespace {

/// Line reader that skips blank lines and reports 1-based line numbers.
class IntLines {
 public:
  IntLines(std::istream& is, std::string file) : is_(is), file_(std::move(file)) {}

  std::optional<std::int64_t> next() {
    std::string line;
    while (std::getline(is_, line)) {
      ++line_;
      const auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      const auto e = line.find_last_not_of(" \t\r");
      std::int64_t v = 0;
      const char* first = line.data() + b;
      const char* last = line.data() + e + 1;
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || ptr != last) fail("not an integer: '" + line.substr(b, e - b + 1) + "'");
      return v;
    }
    ++line_;  // position of the missing line
    return std::nullopt;
  }

  [[noreturn]] void fail(const std::string& what) const { throw FormatError(file_, line_, what); }
  std::size_t line() const noexcept { return line_; }

 private:
  std::istream& is_;
  std::string file_;
  std::size_t line_ = 0;
};

fs::path locate(const fs::path& dir, const std::string& name, const std::string& suffix) {
  const std::string file = name + "-" + suffix + ".txt";
  if (fs::exists(dir / file)) return dir / file;
  if (fs::exists(dir / name / file)) return dir / name / file;
  return dir / file;
}

std::ifstream open(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

}  // namespace

void parse_scholp_streams(std::istream& nverts, std::istream& simplices, std::istream& times,
                          const std::string& name, const std::function<void(const SimplexRecord&)>& sink) {
  IntLines sizes(nverts, name + "-nverts.txt");
  IntLines labels(simplices, name + "-simplices.txt");
  IntLines stamps(times, name + "-times.txt");
  SimplexRecord record;
  while (auto n = sizes.next()) {
    if (*n <= 0) sizes.fail("record size must be positive, got " + std::to_string(*n));
    auto t = stamps.next();
    if (!t) stamps.fail("missing timestamp for record at nverts line " + std::to_string(sizes.line()));
    record.vertices.clear();
    record.timestamp = *t;
    for (std::int64_t i = 0; i < *n; ++i) {
      auto v = labels.next();
      if (!v)
        labels.fail("file ended " + std::to_string(*n - i) + " label(s) short of the record at nverts line " +
                    std::to_string(sizes.line()));
      record.vertices.push_back(*v);
    }
    sink(record);
  }
  if (labels.next()) labels.fail("more labels than the sizes in nverts account for");
  if (stamps.next()) stamps.fail("more timestamps than records");
}

void parse_scholp(const fs::path& dir, const std::string& name, const std::function<void(const SimplexRecord&)>& sink) {
  auto nverts = open(locate(dir, name, "nverts"));
  auto simplices = open(locate(dir, name, "simplices"));
  auto times = open(locate(dir, name, "times"));
  parse_scholp_streams(nverts, simplices, times, name, sink);
}

std::string DatasetSummary::pct_facets_per_simplices() const {
  if (simplices == 0) return "0.00";
  return format_ratio(100 * static_cast<std::int64_t>(facets), static_cast<std::int64_t>(simplices));
}

std::string DatasetSummary::pct_facets_per_udsimplices() const {
  if (unordered_distinct_simplices == 0) return "0.00";
  return format_ratio(100 * static_cast<std::int64_t>(facets), static_cast<std::int64_t>(unordered_distinct_simplices));
}

std::string DatasetSummary::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["nodes"] = nodes;
  j["declared_nodes"] = declared_nodes ? nlohmann::ordered_json(*declared_nodes) : nlohmann::ordered_json(nullptr);
  j["labels_seen"] = labels_seen;
  j["simplices"] = simplices;
  j["distinct_simplices"] = distinct_simplices;
  j["unordered_distinct_simplices"] = unordered_distinct_simplices;
  j["facets"] = facets;
  j["pct_facets_per_simplices"] = pct_facets_per_simplices();
  j["pct_facets_per_udsimplices"] = pct_facets_per_udsimplices();
  j["skipped_oversized"] = skipped_oversized;
  j["records_with_repeats"] = records_with_repeats;
  return j.dump(indent);
}

std::string DatasetSummary::csv_header() {
  return "name,nodes,simplices,distinct_simplices,unordered_distinct_simplices,facets,"
         "pct_facets_per_simplices,pct_facets_per_udsimplices";
}

std::string DatasetSummary::csv_row() const {
  return name + "," + std::to_string(nodes) + "," + std::to_string(simplices) + "," +
         std::to_string(distinct_simplices) + "," + std::to_string(unordered_distinct_simplices) + "," +
         std::to_string(facets) + "," + pct_facets_per_simplices() + "," + pct_facets_per_udsimplices();
}

std::size_t DedupPipeline::VecHash::operator()(const std::vector<RawLabel>& v) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (RawLabel x : v) {
    h ^= static_cast<std::uint64_t>(x);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

void DedupPipeline::add(const SimplexRecord& record) {
  if (record.vertices.size() > kMaxRecordSize) {
    ++oversized_;
    return;
  }
  ++simplices_;
  ordered_.insert(record.vertices);
  std::vector<RawLabel> key = record.vertices;
  std::sort(key.begin(), key.end());
  const auto end = std::unique(key.begin(), key.end());
  if (end != key.end()) {
    ++repeats_;
    key.erase(end, key.end());
  }
  unordered_.insert(std::move(key));
}

DedupPipeline::Result DedupPipeline::finish(std::optional<std::size_t> declared_nodes, unsigned threads) {
  Result r;
  std::vector<RawLabel>& labels = r.labels;
  for (const auto& key : unordered_) labels.insert(labels.end(), key.begin(), key.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  auto dense = [&](RawLabel x) {
    return static_cast<VertexId>(std::lower_bound(labels.begin(), labels.end(), x) - labels.begin());
  };
  r.unordered_distinct.reserve(unordered_.size());
  for (const auto& key : unordered_) {
    std::vector<VertexId> v;
    v.reserve(key.size());
    // Dense ids preserve label order, so sorted keys stay sorted.
    for (RawLabel x : key) v.push_back(dense(x));
    r.unordered_distinct.push_back(Simplex::from_sorted_unchecked(std::move(v)));
  }
  std::sort(r.unordered_distinct.begin(), r.unordered_distinct.end());
  r.facets = extract_facets(r.unordered_distinct, threads);

  DatasetSummary& s = r.summary;
  s.declared_nodes = declared_nodes;
  s.labels_seen = labels.size();
  s.nodes = declared_nodes ? *declared_nodes : labels.size();
  s.simplices = simplices_;
  s.distinct_simplices = ordered_.size();
  s.unordered_distinct_simplices = unordered_.size();
  s.facets = r.facets.size();
  s.skipped_oversized = oversized_;
  s.records_with_repeats = repeats_;
  return r;
}

DedupPipeline::Result dedup_pipeline(const std::vector<SimplexRecord>& records, unsigned threads) {
  DedupPipeline pipeline;
  for (const auto& r : records) pipeline.add(r);
  return pipeline.finish(std::nullopt, threads);
}

std::vector<Simplex> extract_facets(std::vector<Simplex> unordered_distinct, unsigned threads) {
  return maximal_elements(std::move(unordered_distinct), threads);
}

std::optional<std::size_t> read_declared_nodes(const fs::path& dir, const std::string& name) {
  const fs::path path = locate(dir, name, "node-labels");
  if (!fs::exists(path)) return std::nullopt;
  auto in = open(path);
  std::size_t n = 0;
  std::string line;
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) ++n;
  return n;
}

LoadedDataset load_dataset(const fs::path& dir, const std::string& name, ClosureMode mode, unsigned threads) {
  DedupPipeline pipeline;
  parse_scholp(dir, name, [&](const SimplexRecord& r) { pipeline.add(r); });
  auto declared = read_declared_nodes(dir, name);
  auto result = pipeline.finish(declared, threads);
  result.summary.name = name;

  LoadedDataset out;
  out.complex = build_complex(std::move(result.unordered_distinct), mode, threads);
  out.summary = std::move(result.summary);
  out.labels = std::move(result.labels);
  out.node_population = std::max(out.summary.nodes, out.summary.labels_seen);
  return out;
}

}  // namespace simpdeg
