#include "simpdeg/cross_check.hpp"

#include <sstream>

#include "simpdeg/degrees.hpp"
#include "simpdeg/laplacian.hpp"

namespace simpdeg {

namespace {

class Recorder {
 public:
  explicit Recorder(CrossCheckReport& r) : r_(r) {}

  void expect(std::int64_t a, std::int64_t b, const std::string& what, const Simplex& s) {
    ++r_.checks;
    if (a != b) {
      std::ostringstream os;
      os << what << " at " << s << ": " << a << " vs " << b;
      r_.mismatches.push_back(os.str());
    }
  }

  CrossCheckReport& report() { return r_; }

 private:
  CrossCheckReport& r_;
};

std::string label(const char* name, int a, int b = -1, int c = -1) {
  std::string s = std::string(name) + "(" + std::to_string(a);
  if (b >= 0) s += "," + std::to_string(b);
  if (c >= 0) s += "," + std::to_string(c);
  return s + ")";
}

/// 1 - chi(link of t) = sum over stored r ⊇ t of (-1)^(|r| - |t|).
std::int64_t link_defect(const SimplicialComplex& k, const Simplex& t) {
  std::int64_t total = 0;
  for (int d = t.dim(); d <= k.dim(); ++d) {
    const auto n = static_cast<std::int64_t>(k.cofacets(t, d).size());
    total += (d - t.dim()) % 2 == 0 ? n : -n;
  }
  return total;
}

}  // namespace

CrossCheckReport cross_check(const SimplicialComplex& k, std::size_t cap) {
  CrossCheckReport report;
  Recorder rec(report);
  const int d = k.dim();

  for (int q = 0; q <= d; ++q)
    for (int h = 1; h <= std::max(1, d - q); ++h)
      for (int hp = 1; hp <= std::max(1, q); ++hp) {
        auto bad = verify_entries(k, q, h, hp);
        report.checks += k.count(q) * k.count(q) * 2;
        for (const auto& m : bad)
          report.mismatches.push_back(m.part + " entry (" + std::to_string(m.row) + "," + std::to_string(m.col) +
                                      ") of " + label("L", q, h, hp) + ": " + std::to_string(m.expected) + " vs " +
                                      std::to_string(m.actual));
      }

  const MatrixDegreePath path(k, cap);
  for (int q = 0; q <= d; ++q) {
    const auto& basis = k.simplices(q);
    for (int p = 0; p <= q; ++p) {
      const auto lo = path.lower(q, p);
      const auto adj = path.adjacency(q, p);
      const auto adjmax = path.adjacency_maximal(q, p);
      for (int qp = p; qp <= d; ++qp) {
        const auto part = path.lower_dim(q, qp, p);
        for (std::size_t i = 0; i < basis.size(); ++i)
          rec.expect(part[i], deg_L_hp(k, basis[i], q - qp, p), label("lower_hp", q - qp, p), basis[i]);
      }
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const Simplex& s = basis[i];
        rec.expect(lo[i], deg_L_p(k, s, p), label("lower_p", p), s);
        rec.expect(adj[i], deg_A_p(k, s, p), label("adj_p", p), s);
        rec.expect(adjmax[i], deg_A_p_maximal(k, s, p), label("adj_p_maximal", p), s);
        for (int h = q - d; h <= q - p; ++h) {
          const std::int64_t next = p + 1 <= q ? deg_L_hp(k, s, h, p + 1) : 0;
          rec.expect(deg_L_hp_strict(k, s, h, p), deg_L_hp(k, s, h, p) - next, label("lower_strict", h, p), s);
        }
      }
    }
    for (int p = q; p <= d; ++p) {
      const auto up = path.upper(q, p);
      for (int qp = 0; qp <= p; ++qp) {
        const auto part = path.upper_dim(q, qp, p);
        for (std::size_t i = 0; i < basis.size(); ++i)
          rec.expect(part[i], deg_U_hp(k, basis[i], qp - q, p), label("upper_hp", qp - q, p), basis[i]);
      }
      for (std::size_t i = 0; i < basis.size(); ++i) rec.expect(up[i], deg_U_p(k, basis[i], p), label("upper_p", p), basis[i]);
    }
    for (int h = 1; q + h <= d; ++h)
      for (const Simplex& s : basis) {
        const std::int64_t formula = deg_U_top_strict_alternating(k, s, h);
        const std::int64_t direct = deg_U_top_strict(k, s, h);
        if (formula != direct) ++report.alternating_gaps;
        std::int64_t correction = 0;
        for (const Simplex& t : k.cofacets(s, q + h))
          if (!k.is_facet(t)) correction += link_defect(k, t);
        rec.expect(formula, direct + correction, label("strict_upper", h), s);
      }
  }
  return report;
}

}  // namespace simpdeg
