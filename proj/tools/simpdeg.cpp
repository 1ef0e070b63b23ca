// Command-line front end: dataset summaries, degree statistics and
// distributions, Laplacian export, and the randomized cross-check suite.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "simpdeg/analytics.hpp"
#include "simpdeg/cross_check.hpp"
#include "simpdeg/error.hpp"
#include "simpdeg/ingest.hpp"
#include "simpdeg/laplacian.hpp"
#include "simpdeg/random_complex.hpp"
#include "simpdeg/sparse_matrix.hpp"

using namespace simpdeg;
using json = nlohmann::ordered_json;

namespace {

struct Global {
  unsigned threads = 0;
  std::size_t max_matrix = kDefaultMatrixCap;
  bool json = false;
};

struct DatasetArgs {
  std::string dir;
  std::string name;
};

struct DegreeArgs {
  std::string kind = "kU_star";
  int q = 0;
  std::string mode;  // empty: kind-dependent default
  std::string self = "include";
  std::string per_simplex;
  std::string plot;
  std::string csv;
};

json stats_json(const DegreeStats& d) {
  json j;
  j["kind"] = std::string(to_string(d.kind));
  if (d.kind == DegreeStatKind::max_upper_kU_star || d.kind == DegreeStatKind::max_simplicial_k_star) {
    j["q"] = d.q;
    j["enumeration"] = std::string(to_string(d.enumeration));
    j["facet_self_count"] = std::string(to_string(d.self));
  }
  j["counting"] = d.counting;
  j["population"] = d.stats.count;
  j["max"] = d.stats.max;
  j["mean"] = d.stats.mean_text();
  j["median"] = d.stats.median;
  return j;
}

void print_stats(const Global& g, const DegreeStats& d) {
  if (g.json) {
    std::cout << stats_json(d).dump(2) << "\n";
    return;
  }
  std::cout << to_string(d.kind);
  if (d.kind == DegreeStatKind::max_upper_kU_star || d.kind == DegreeStatKind::max_simplicial_k_star)
    std::cout << " q=" << d.q;
  std::cout << "  max=" << d.stats.max << " mean=" << d.stats.mean_text() << " median=" << d.stats.median
            << " population=" << d.stats.count << "\n  counting: " << d.counting << "\n";
}

/// Complex and request for a degree-style subcommand.
struct Prepared {
  LoadedDataset data;
  DegreeRequest request;
};

Prepared prepare(const Global& g, const DatasetArgs& ds, const DegreeArgs& a) {
  Prepared p;
  p.request.kind = parse_degree_stat_kind(a.kind);
  p.request.q = a.q;
  p.request.self = parse_facet_self_count(a.self);
  p.request.threads = g.threads;
  // Listed edges for the classical degree, all closure faces for per-q kinds.
  const bool classical = p.request.kind == DegreeStatKind::classical_k;
  const std::string mode = a.mode.empty() ? (classical ? "explicit" : "closure") : a.mode;
  p.request.enumeration = parse_enumeration(mode);
  const bool listed = p.request.enumeration == Enumeration::explicit_only;
  const ClosureMode cm = classical && !listed ? ClosureMode::Closed : ClosureMode::Explicit;
  p.data = load_dataset(ds.dir, ds.name, cm, g.threads);
  p.request.node_population = p.data.node_population;
  return p;
}

int cmd_summarize(const Global& g, const DatasetArgs& ds, bool csv) {
  const LoadedDataset data = load_dataset(ds.dir, ds.name, ClosureMode::Explicit, g.threads);
  if (csv) {
    std::cout << DatasetSummary::csv_header() << ",max_s,mean_s,median_s,mode_s\n";
    const FacetSizeStats f = facet_size_stats(data.complex.facets());
    std::cout << data.summary.csv_row() << "," << f.max_s << "," << f.mean_s << "," << f.median_s << ","
              << f.mode_s << "\n";
    return 0;
  }
  json j = json::parse(data.summary.to_json());
  if (!data.complex.facets().empty()) {
    const FacetSizeStats f = facet_size_stats(data.complex.facets());
    j["facet_sizes"] = {{"max_s", f.max_s}, {"mean_s", f.mean_s}, {"median_s", f.median_s}, {"mode_s", f.mode_s}};
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_degrees(const Global& g, const DatasetArgs& ds, const DegreeArgs& a) {
  Prepared p = prepare(g, ds, a);
  p.request.keep_members = !a.per_simplex.empty();
  const DegreeSample sample = degree_values(p.data.complex, p.request);
  DegreeStats d;
  d.kind = p.request.kind;
  d.q = p.request.q;
  d.enumeration = p.request.enumeration;
  d.self = p.request.self;
  d.stats = summarize(sample.values);
  d.counting = describe_counting(p.data.complex, p.request);
  print_stats(g, d);

  if (!a.per_simplex.empty()) {
    std::ofstream out(a.per_simplex, std::ios::binary);
    if (!out) throw IoError("cannot write " + a.per_simplex);
    out << "simplex,dim,kind,params,value\n";
    const std::string params = "q=" + std::to_string(p.request.q) + ";enumeration=" +
                               std::string(to_string(p.request.enumeration)) + ";self=" +
                               std::string(to_string(p.request.self));
    for (std::size_t i = 0; i < sample.values.size(); ++i) {
      std::string name;
      int dim = 0;
      if (sample.members.empty()) {
        name = std::to_string(p.data.labels.size() > i ? p.data.labels[i] : static_cast<RawLabel>(i));
      } else {
        const Simplex& s = sample.members[i];
        dim = s.dim();
        for (VertexId v : s) name += (name.empty() ? "" : " ") + std::to_string(p.data.labels[v]);
      }
      out << '"' << name << "\"," << dim << ',' << to_string(p.request.kind) << ',' << params << ','
          << sample.values[i] << '\n';
    }
  }
  return 0;
}

int cmd_distribution(const Global& g, const DatasetArgs& ds, const DegreeArgs& a) {
  Prepared p = prepare(g, ds, a);
  const DegreeDistribution dist = degree_distribution(p.data.complex, p.request);
  if (!a.plot.empty()) {
    std::string csv = a.csv;
    if (csv.empty()) csv = std::filesystem::path(a.plot).replace_extension(".csv").string();
    emit_plot(dist, a.plot, csv, ds.name + " " + std::string(to_string(p.request.kind)));
  }
  if (g.json) {
    json j;
    j["kind"] = std::string(to_string(p.request.kind));
    j["enumeration"] = std::string(to_string(p.request.enumeration));
    j["population"] = dist.population;
    json hist = json::array();
    for (const auto& [v, c] : dist.histogram) hist.push_back({v, c});
    j["histogram"] = hist;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << distribution_csv(dist);
  }
  return 0;
}

int cmd_laplacian(const Global& g, const DatasetArgs& ds, int q, int h, int hp, const std::string& path) {
  const LoadedDataset data = load_dataset(ds.dir, ds.name, ClosureMode::Closed, g.threads);
  for (int d : {q, q + h, q - hp})
    if (data.complex.count(d) > g.max_matrix)
      throw ParamError("dimension " + std::to_string(d) + " holds " + std::to_string(data.complex.count(d)) +
                       " simplices, above --max-matrix-simplices " + std::to_string(g.max_matrix));
  const LaplacianTriple lap = multi_laplacian(data.complex, q, h, hp);
  const std::string label = "L q=" + std::to_string(q) + " h=" + std::to_string(h) + " h'=" + std::to_string(hp);
  if (!path.empty()) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    write_triplets(out, lap.full, label);
  }
  if (g.json) {
    json j = {{"q", q}, {"h", h}, {"h_prime", hp}, {"size", lap.full.rows()}, {"nonzeros", lap.full.nonzeros()},
              {"symmetric", lap.full.symmetric()}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << label << ": " << lap.full.rows() << "x" << lap.full.cols() << ", " << lap.full.nonzeros()
              << " nonzeros\n";
  }
  return 0;
}

int cmd_verify(const Global& g, std::uint64_t seed, int complexes) {
  std::size_t checks = 0, mismatches = 0, gaps = 0;
  for (int i = 0; i < complexes; ++i) {
    const SimplicialComplex k = random_complex(seed + static_cast<std::uint64_t>(i));
    const CrossCheckReport r = cross_check(k, g.max_matrix);
    checks += r.checks;
    mismatches += r.mismatches.size();
    gaps += r.alternating_gaps;
    for (const auto& m : r.mismatches) std::cerr << "complex " << i << ": " << m << "\n";
  }
  if (g.json) {
    std::cout << json{{"complexes", complexes}, {"seed", seed}, {"checks", checks}, {"mismatches", mismatches},
                      {"alternating_formula_gaps", gaps}}.dump(2)
              << "\n";
  } else {
    std::cout << complexes << " complexes, " << checks << " checks, " << mismatches << " mismatches\n";
    std::cout << gaps << " targets where the alternating strict-upper formula needs its link correction\n";
  }
  return mismatches == 0 ? 0 : 1;
}

void add_dataset(CLI::App* cmd, DatasetArgs& ds) {
  cmd->add_option("dir", ds.dir, "directory holding the dataset files")->required();
  cmd->add_option("name", ds.name, "dataset name, e.g. email-Enron")->required();
}

void add_degree_flags(CLI::App* cmd, DegreeArgs& a) {
  cmd->add_option("--kind", a.kind, "k | kF | kU_star | k_star")->capture_default_str();
  cmd->add_option("--q", a.q, "simplex dimension for kU_star / k_star")->capture_default_str();
  cmd->add_option("--mode", a.mode,
                  "closure | explicit: which simplices are counted (default explicit for k, closure otherwise)");
  cmd->add_option("--self-count", a.self, "include | exclude a facet equal to the simplex")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplicial degree analytics"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--threads", g.threads, "worker threads, 0 = all cores")->capture_default_str();
  app.add_option("--max-matrix-simplices", g.max_matrix, "cap on simplices per dimension for matrix work")
      ->capture_default_str();
  app.add_flag("--json", g.json, "JSON output");

  DatasetArgs ds;
  bool csv = false;
  auto* summarize = app.add_subcommand("summarize", "dataset summary and facet size statistics");
  add_dataset(summarize, ds);
  summarize->add_flag("--csv", csv, "one CSV row instead of JSON");

  DegreeArgs da;
  auto* degrees = app.add_subcommand("degrees", "degree statistics");
  add_dataset(degrees, ds);
  add_degree_flags(degrees, da);
  degrees->add_option("--per-simplex", da.per_simplex, "write per-simplex values to this CSV");

  auto* distribution = app.add_subcommand("distribution", "degree distribution");
  add_dataset(distribution, ds);
  add_degree_flags(distribution, da);
  distribution->add_option("--plot", da.plot, "write a log-log SVG here");
  distribution->add_option("--csv", da.csv, "CSV path for --plot (default: plot path with .csv)");

  int q = 0, h = 1, hp = 1;
  std::string export_path;
  auto* laplacian = app.add_subcommand("laplacian", "multi-parameter Laplacian of a small dataset");
  // --h would clash with the short help flag.
  laplacian->set_help_flag("--help", "Print this help message and exit");
  add_dataset(laplacian, ds);
  laplacian->add_option("--q", q)->capture_default_str();
  laplacian->add_option("--h", h)->capture_default_str();
  laplacian->add_option("--hp", hp)->capture_default_str();
  laplacian->add_option("--export", export_path, "write the matrix in coordinate-triplet form");

  std::uint64_t seed = 1;
  int complexes = 50;
  auto* verify = app.add_subcommand("verify", "cross-check computation routes on random complexes");
  verify->add_option("--seed", seed)->capture_default_str();
  verify->add_option("--complexes", complexes)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*summarize) return cmd_summarize(g, ds, csv);
    if (*degrees) return cmd_degrees(g, ds, da);
    if (*distribution) return cmd_distribution(g, ds, da);
    if (*laplacian) return cmd_laplacian(g, ds, q, h, hp, export_path);
    if (*verify) return cmd_verify(g, seed, complexes);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
