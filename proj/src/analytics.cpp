#include "simpdeg/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "simpdeg/error.hpp"
#include "simpdeg/numeric.hpp"
#include "simpdeg/parallel.hpp"

namespace simpdeg {

std::string SummaryStats::mean_text() const {
  if (count == 0) return "0.00";
  return format_ratio(sum, static_cast<std::int64_t>(count));
}

SummaryStats summarize(std::vector<std::int64_t> values) {
  if (values.empty()) throw EmptyDataset("no values to summarize");
  std::sort(values.begin(), values.end());
  SummaryStats s;
  s.count = values.size();
  s.max = values.back();
  for (auto v : values) s.sum += v;
  s.median = values[(values.size() - 1) / 2];
  // Sorted input: the first run of maximal length holds the smallest mode.
  std::size_t best = 0;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    if (j - i > best) {
      best = j - i;
      s.mode = values[i];
    }
    i = j;
  }
  return s;
}

FacetSizeStats facet_size_stats(const std::vector<Simplex>& facets) {
  if (facets.empty()) throw EmptyDataset("no facets");
  std::vector<std::int64_t> sizes;
  sizes.reserve(facets.size());
  for (const auto& f : facets) sizes.push_back(static_cast<std::int64_t>(f.size()));
  const SummaryStats s = summarize(std::move(sizes));
  return {s.max, s.mean_text(), s.median, s.mode};
}

namespace {

constexpr std::pair<DegreeStatKind, std::string_view> kStatNames[] = {
    {DegreeStatKind::classical_k, "classical_k"},
    {DegreeStatKind::node_to_facets_kF, "node_to_facets_kF"},
    {DegreeStatKind::max_upper_kU_star, "max_upper_kU_star"},
    {DegreeStatKind::max_simplicial_k_star, "max_simplicial_k_star"},
};

constexpr std::pair<DegreeStatKind, std::string_view> kStatShort[] = {
    {DegreeStatKind::classical_k, "k"},
    {DegreeStatKind::node_to_facets_kF, "kF"},
    {DegreeStatKind::max_upper_kU_star, "kU_star"},
    {DegreeStatKind::max_simplicial_k_star, "k_star"},
};

bool per_q(DegreeStatKind kind) {
  return kind == DegreeStatKind::max_upper_kU_star || kind == DegreeStatKind::max_simplicial_k_star;
}

std::vector<Simplex> population(const SimplicialComplex& k, int q, Enumeration enumeration) {
  if (q < 0 || q > k.dim())
    throw DimensionError("q=" + std::to_string(q) + " outside [0, dim K=" + std::to_string(k.dim()) + "]");
  if (enumeration == Enumeration::explicit_only) {
    if (k.closed()) throw ModeError("listed-simplex enumeration needs a complex built in explicit mode");
    return k.simplices(q);
  }
  if (k.closed()) return k.simplices(q);
  return build_complex(k.facets(), ClosureMode::Closed).simplices(q);
}

}  // namespace

std::string describe_counting(const SimplicialComplex& k, const DegreeRequest& r) {
  switch (r.kind) {
    case DegreeStatKind::classical_k:
      return k.closed() ? "edges of the closure" : "listed edges only (explicit)";
    case DegreeStatKind::node_to_facets_kF:
      return "facets containing the node";
    default:
      return std::string(r.enumeration == Enumeration::closure ? "all q-faces of the closure"
                                                               : "listed q-simplices only (explicit)") +
             ", facet self-count " + std::string(to_string(r.self));
  }
}

std::string_view to_string(DegreeStatKind kind) noexcept {
  for (const auto& [k, name] : kStatNames)
    if (k == kind) return name;
  return "?";
}

DegreeStatKind parse_degree_stat_kind(std::string_view text) {
  for (const auto& [k, name] : kStatNames)
    if (name == text) return k;
  for (const auto& [k, name] : kStatShort)
    if (name == text) return k;
  throw ParamError("unknown degree statistic '" + std::string(text) + "' (expected k|kF|kU_star|k_star)");
}

std::string_view to_string(Enumeration e) noexcept { return e == Enumeration::closure ? "closure" : "explicit"; }

Enumeration parse_enumeration(std::string_view text) {
  if (text == "closure" || text == "closed") return Enumeration::closure;
  if (text == "explicit") return Enumeration::explicit_only;
  throw ParamError("unknown enumeration '" + std::string(text) + "' (expected closure|explicit)");
}

DegreeSample degree_values(const SimplicialComplex& k, const DegreeRequest& r) {
  DegreeSample out;
  if (!per_q(r.kind)) {
    const std::size_t n = std::max(r.node_population, k.vertex_bound());
    out.values.assign(n, 0);
    if (r.kind == DegreeStatKind::classical_k) {
      for (const Simplex& e : k.simplices(1))
        for (VertexId v : e) ++out.values[v];
    } else {
      for (const Simplex& f : k.facets())
        for (VertexId v : f) ++out.values[v];
    }
    return out;
  }

  std::vector<Simplex> members = population(k, r.q, r.enumeration);
  const FacetDegreeEngine engine(k.facet_index());
  out.values.assign(members.size(), 0);
  const bool full = r.kind == DegreeStatKind::max_simplicial_k_star;
  parallel_for(members.size(), r.threads, [&](std::size_t i) {
    out.values[i] = full ? engine.maximal_degree(members[i], r.self).total : engine.upper(members[i], r.self);
  });
  if (r.keep_members) out.members = std::move(members);
  return out;
}

DegreeStats degree_stats(const SimplicialComplex& k, const DegreeRequest& r) {
  DegreeStats d;
  d.kind = r.kind;
  d.q = per_q(r.kind) ? r.q : 0;
  d.enumeration = r.enumeration;
  d.self = r.self;
  d.counting = describe_counting(k, r);
  d.stats = summarize(degree_values(k, r).values);
  return d;
}

std::pair<DegreeStats, DegreeStats> classical_degree_stats(const SimplicialComplex& k, std::size_t node_population,
                                                           unsigned threads) {
  DegreeRequest r;
  r.node_population = node_population;
  r.threads = threads;
  r.kind = DegreeStatKind::classical_k;
  DegreeStats plain = degree_stats(k, r);
  r.kind = DegreeStatKind::node_to_facets_kF;
  return {plain, degree_stats(k, r)};
}

DegreeStats simplicial_degree_stats(const SimplicialComplex& k, int q, DegreeStatKind kind, Enumeration enumeration,
                                    FacetSelfCount self, unsigned threads) {
  if (!per_q(kind)) throw ParamError("simplicial_degree_stats takes kU_star or k_star");
  DegreeRequest r;
  r.kind = kind;
  r.q = q;
  r.enumeration = enumeration;
  r.self = self;
  r.threads = threads;
  return degree_stats(k, r);
}

DegreeDistribution degree_distribution(const std::vector<std::int64_t>& values) {
  DegreeDistribution d;
  d.population = values.size();
  for (auto v : values) ++d.histogram[v];
  for (const auto& [value, count] : d.histogram)
    d.normalized[value] = static_cast<double>(count) / static_cast<double>(d.population);
  return d;
}

DegreeDistribution degree_distribution(const SimplicialComplex& k, const DegreeRequest& request) {
  return degree_distribution(degree_values(k, request).values);
}

SummaryStats stats_from_histogram(const DegreeDistribution& dist) {
  if (dist.population == 0) throw EmptyDataset("empty distribution");
  SummaryStats s;
  s.count = dist.population;
  const std::size_t target = (dist.population - 1) / 2;  // lower median position
  std::size_t seen = 0;
  std::size_t best = 0;
  bool median_set = false;
  for (const auto& [value, count] : dist.histogram) {
    s.max = value;
    s.sum += value * static_cast<std::int64_t>(count);
    if (!median_set && seen + count > target) {
      s.median = value;
      median_set = true;
    }
    seen += count;
    if (count > best) {
      best = count;
      s.mode = value;
    }
  }
  return s;
}

namespace {

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.close();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

}  // namespace

std::string distribution_csv(const DegreeDistribution& dist) {
  std::string out = "degree,probability\n";
  for (const auto& [value, p] : dist.normalized) out += std::to_string(value) + "," + sci(p) + "\n";
  return out;
}

std::string distribution_svg(const DegreeDistribution& dist, const std::string& title) {
  constexpr double width = 640, height = 480, left = 80, right = 30, top = 50, bottom = 70;
  std::vector<std::pair<double, double>> points;  // (log10 k, log10 P)
  for (const auto& [value, p] : dist.normalized)
    if (value > 0) points.emplace_back(std::log10(static_cast<double>(value)), std::log10(p));

  int x_lo = 0, x_hi = 1, y_lo = -1, y_hi = 0;
  if (!points.empty()) {
    double xmin = points.front().first, xmax = points.front().first, ymin = 0;
    for (const auto& [x, y] : points) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
    }
    x_lo = static_cast<int>(std::floor(xmin));
    x_hi = std::max(x_lo + 1, static_cast<int>(std::ceil(xmax)));
    y_lo = std::min(-1, static_cast<int>(std::floor(ymin)));
  }
  const double pw = width - left - right, ph = height - top - bottom;
  auto px = [&](double x) { return left + (x - x_lo) / (x_hi - x_lo) * pw; };
  auto py = [&](double y) { return top + (y_hi - y) / (y_hi - y_lo) * ph; };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" viewBox=\"0 0 640 480\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";
  s += "<text x=\"320\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
       escape_xml(title) + "</text>\n";
  s += "<rect x=\"" + fixed(left, 2) + "\" y=\"" + fixed(top, 2) + "\" width=\"" + fixed(pw, 2) + "\" height=\"" +
       fixed(ph, 2) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int e = x_lo; e <= x_hi; ++e) {
    const std::string x = fixed(px(e), 2);
    s += "<line x1=\"" + x + "\" y1=\"" + fixed(top + ph, 2) + "\" x2=\"" + x + "\" y2=\"" + fixed(top + ph + 6, 2) +
         "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + x + "\" y=\"" + fixed(top + ph + 22, 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">1e" + std::to_string(e) + "</text>\n";
  }
  for (int e = y_lo; e <= y_hi; ++e) {
    const std::string y = fixed(py(e), 2);
    s += "<line x1=\"" + fixed(left - 6, 2) + "\" y1=\"" + y + "\" x2=\"" + fixed(left, 2) + "\" y2=\"" + y +
         "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + fixed(left - 10, 2) + "\" y=\"" + fixed(py(e) + 4, 2) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">1e" + std::to_string(e) + "</text>\n";
  }
  s += "<text x=\"" + fixed(left + pw / 2, 2) + "\" y=\"" + fixed(height - 20, 2) +
       "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">degree k</text>\n";
  s += "<text x=\"20\" y=\"" + fixed(top + ph / 2, 2) + "\" transform=\"rotate(-90 20 " + fixed(top + ph / 2, 2) +
       ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">P(k)</text>\n";
  for (const auto& [x, y] : points)
    s += "<circle cx=\"" + fixed(px(x), 2) + "\" cy=\"" + fixed(py(y), 2) + "\" r=\"3\" fill=\"steelblue\"/>\n";
  s += "</svg>\n";
  return s;
}

void emit_plot(const DegreeDistribution& dist, const std::filesystem::path& svg_path,
               const std::filesystem::path& csv_path, const std::string& title) {
  if (dist.histogram.empty()) throw EmptyDataset("empty distribution");
  write_file(csv_path, distribution_csv(dist));
  write_file(svg_path, distribution_svg(dist, title));
}

}  // namespace simpdeg
