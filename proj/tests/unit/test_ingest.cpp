#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "httplib.h"

#include "simpdeg/error.hpp"
#include "simpdeg/facets.hpp"
#include "simpdeg/ingest.hpp"

#include "oracle.hpp"

using namespace simpdeg;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("simpdeg-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void write(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream(p) << text;
}

std::vector<SimplexRecord> parse(const std::string& nverts, const std::string& simplices, const std::string& times) {
  std::istringstream a(nverts), b(simplices), c(times);
  std::vector<SimplexRecord> out;
  parse_scholp_streams(a, b, c, "x", [&](const SimplexRecord& r) { out.push_back(r); });
  return out;
}

}  // namespace

TEST_CASE("parser reads records in lockstep") {
  const auto r = parse("3\n\n2\n", "1\n4\n6\n\n6\n4\n", "10\n11\n");
  REQUIRE(r.size() == 2);
  CHECK(r[0].vertices == std::vector<RawLabel>{1, 4, 6});
  CHECK(r[1].vertices == std::vector<RawLabel>{6, 4});
  CHECK(r[1].timestamp == 11);
  CHECK(parse("", "", "").empty());
}

TEST_CASE("parser errors carry file and line") {
  auto fails = [](const std::string& a, const std::string& b, const std::string& c, const std::string& file,
                  std::size_t line) {
    try {
      parse(a, b, c);
      FAIL("expected a FormatError");
    } catch (const FormatError& e) {
      CHECK(e.file() == file);
      CHECK(e.line() == line);
    }
  };
  fails("2\nx\n", "1\n2\n", "1\n2\n", "x-nverts.txt", 2);
  fails("2\n0\n", "1\n2\n", "1\n2\n", "x-nverts.txt", 2);
  fails("2\n", "1\n2\n3\n", "1\n", "x-simplices.txt", 3);
  fails("3\n", "1\n2\n", "1\n", "x-simplices.txt", 3);
  fails("1\n1\n", "1\n2\n", "7\n", "x-times.txt", 2);
  fails("1\n", "1\n", "7\n8\n", "x-times.txt", 2);
  fails("1\n", "1.5\n", "7\n", "x-simplices.txt", 1);
}

TEST_CASE("four records collapse to one facet") {
  const std::vector<SimplexRecord> records{{{1, 4, 6}, 1}, {{4, 1, 6}, 2}, {{6, 4}, 3}, {{6, 4}, 4}};
  const auto r = dedup_pipeline(records);
  CHECK(r.summary.simplices == 4);
  CHECK(r.summary.distinct_simplices == 3);
  CHECK(r.summary.unordered_distinct_simplices == 2);
  CHECK(r.summary.facets == 1);
  CHECK(r.labels == std::vector<RawLabel>{1, 4, 6});
  CHECK(r.facets == std::vector<Simplex>{{0, 1, 2}});
  CHECK(r.summary.pct_facets_per_simplices() == "25.00");
  CHECK(r.summary.pct_facets_per_udsimplices() == "50.00");
}

TEST_CASE("oversized records are skipped and repeats collapsed") {
  std::vector<SimplexRecord> records;
  SimplexRecord big;
  for (RawLabel i = 0; i < 26; ++i) big.vertices.push_back(i);
  records.push_back(big);
  records.push_back({{5, 5, 7}, 0});
  records.push_back({{5, 7}, 0});
  const auto r = dedup_pipeline(records);
  CHECK(r.summary.skipped_oversized == 1);
  CHECK(r.summary.records_with_repeats == 1);
  CHECK(r.summary.simplices == 2);
  CHECK(r.summary.unordered_distinct_simplices == 1);
  CHECK(r.summary.labels_seen == 2);
}

TEST_CASE("facets match brute force and ignore record order") {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 25; ++round) {
    std::vector<SimplexRecord> records;
    const int n = 5 + static_cast<int>(rng() % 40);
    for (int i = 0; i < n; ++i) {
      SimplexRecord rec;
      const int size = 1 + static_cast<int>(rng() % 5);
      for (int j = 0; j < size; ++j) rec.vertices.push_back(static_cast<RawLabel>(100 + rng() % 14));
      records.push_back(rec);
    }
    const auto r = dedup_pipeline(records);

    std::vector<oracle::Mask> sets;
    for (const auto& rec : records) {
      oracle::Mask m = 0;
      for (auto v : rec.vertices) m |= oracle::Mask{1} << (v - 100);
      sets.push_back(m);
    }
    std::size_t maximal = 0;
    std::vector<oracle::Mask> uniq(sets);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (auto a : uniq) {
      bool top = true;
      for (auto b : uniq)
        if (a != b && oracle::subset(a, b)) top = false;
      maximal += top;
    }
    CHECK(r.summary.facets == maximal);
    CHECK(r.summary.unordered_distinct_simplices == uniq.size());

    std::shuffle(records.begin(), records.end(), rng);
    const auto again = dedup_pipeline(records, 3);
    CHECK(again.facets == r.facets);
    CHECK(again.summary.to_json() == r.summary.to_json());
    // Facets of the facets are the facets.
    CHECK(extract_facets(r.facets) == r.facets);
  }
}

TEST_CASE("load_dataset reads a directory") {
  TempDir tmp;
  const fs::path dir = tmp.path / "toy";
  write(dir / "toy-nverts.txt", "3\n3\n2\n2\n");
  write(dir / "toy-simplices.txt", "1\n4\n6\n4\n1\n6\n6\n4\n6\n4\n");
  write(dir / "toy-times.txt", "1\n2\n3\n4\n");
  write(dir / "toy-node-labels.txt", "1 a\n2 b\n3 c\n4 d\n5 e\n6 f\n");
  for (const auto& root : {tmp.path, dir}) {
    const auto d = load_dataset(root, "toy", ClosureMode::Closed);
    CHECK(d.summary.nodes == 6);
    CHECK(d.summary.labels_seen == 3);
    CHECK(d.node_population == 6);
    CHECK(d.complex.facets().size() == 1);
    CHECK(d.summary.csv_row() == "toy,6,4,3,2,1,25.00,50.00");
  }
  CHECK_THROWS_AS(load_dataset(tmp.path, "missing", ClosureMode::Closed), IoError);
}

TEST_CASE("fetcher downloads the three files and tolerates missing labels") {
  httplib::Server server;
  server.Get("/remote/remote-nverts.txt", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("2\n1\n", "text/plain");
  });
  server.Get("/remote/remote-simplices.txt", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("3\n9\n9\n", "text/plain");
  });
  server.Get("/remote/remote-times.txt", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("5\n6\n", "text/plain");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  TempDir tmp;
  const std::string base = "http://127.0.0.1:" + std::to_string(port);
  const fs::path dir = fetch_dataset("remote", tmp.path, base + "/");
  CHECK(fs::exists(dir / "remote-times.txt"));
  CHECK_FALSE(fs::exists(dir / "remote-node-labels.txt"));
  const auto d = load_dataset(tmp.path, "remote", ClosureMode::Closed);
  CHECK(d.summary.simplices == 2);
  CHECK(d.summary.unordered_distinct_simplices == 2);
  CHECK(d.summary.facets == 1);

  CHECK_THROWS_AS(fetch_dataset("absent", tmp.path, base), IoError);
  server.stop();
  worker.join();
}
