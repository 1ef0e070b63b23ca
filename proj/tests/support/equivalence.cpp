#include "equivalence.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "simpdeg/degree_matrix.hpp"
#include "simpdeg/degrees.hpp"

#include "oracle.hpp"

namespace oracle {

using namespace simpdeg;

void Equivalence::merge(const Equivalence& o) {
  comparisons += o.comparisons;
  mismatch_count += o.mismatch_count;
  for (const auto& m : o.mismatches)
    if (mismatches.size() < 20) mismatches.push_back(m);
  telescoping_checks += o.telescoping_checks;
  telescoping_failures += o.telescoping_failures;
  alternating_checks += o.alternating_checks;
  alternating_failures += o.alternating_failures;
  corrected_failures += o.corrected_failures;
  if (first_alternating_failure.empty()) first_alternating_failure = o.first_alternating_failure;
  monotonicity_checks += o.monotonicity_checks;
  monotonicity_failures += o.monotonicity_failures;
}

namespace {

class Tally {
 public:
  explicit Tally(Equivalence& e) : e_(e) {}

  void same(const char* what, const Simplex& s, int a, int b, std::int64_t naive, std::int64_t lib,
            std::int64_t other) {
    ++e_.comparisons;
    if (naive == lib && lib == other) return;
    ++e_.mismatch_count;
    if (e_.mismatches.size() < 20) {
      std::ostringstream os;
      os << what << " s=" << s << " args=(" << a << "," << b << ") brute=" << naive << " lib=" << lib
         << " other=" << other;
      e_.mismatches.push_back(os.str());
    }
  }
  void same(const char* what, const Simplex& s, int a, int b, std::int64_t naive, std::int64_t lib) {
    same(what, s, a, b, naive, lib, lib);
  }

 private:
  Equivalence& e_;
};

}  // namespace

Equivalence check_equivalence(const std::vector<Simplex>& facets) {
  Equivalence e;
  Tally t(e);
  const Naive naive(facets);
  const auto k = build_complex(facets, ClosureMode::Closed);
  const MatrixDegreePath path(k);
  const FacetDegreeEngine engine(k.facet_index());
  const int d = k.dim();

  std::map<std::tuple<int, int, int>, std::vector<std::int64_t>> mat;  // (kind, q, p)
  auto column = [&](int kind, int q, int p) -> const std::vector<std::int64_t>& {
    auto key = std::make_tuple(kind, q, p);
    auto it = mat.find(key);
    if (it != mat.end()) return it->second;
    std::vector<std::int64_t> v;
    switch (kind) {
      case 0: v = path.lower(q, p); break;
      case 1: v = path.upper(q, p); break;
      case 2: v = path.adjacency(q, p); break;
      default: v = path.adjacency_maximal(q, p); break;
    }
    return mat.emplace(key, std::move(v)).first->second;
  };

  for (int q = 0; q <= d; ++q) {
    const auto& basis = k.simplices(q);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Simplex& s = basis[j];
      const Mask m = to_mask(s);

      for (int p = 0; p <= q; ++p) {
        t.same("lower", s, p, 0, naive.deg_lower(m, p, false), deg_L_p(k, s, p), column(0, q, p)[j]);
        t.same("lower*", s, p, 0, naive.deg_lower(m, p, true), deg_L_p_strict(k, s, p));
        t.same("adj", s, p, 0, naive.deg_adjacent(m, p), deg_A_p(k, s, p), column(2, q, p)[j]);
        t.same("adj-max", s, p, 0, naive.deg_adjacent_maximal(m, p), deg_A_p_maximal(k, s, p), column(3, q, p)[j]);
        if (p < q) t.same("adj-max-engine", s, p, 0, naive.deg_adjacent_maximal(m, p), engine.maximal_adjacency(s, p));
        for (int qp = p; qp <= d; ++qp) {
          const int h = q - qp;
          const auto lib = deg_L_hp(k, s, h, p);
          t.same("lower-hp", s, h, p, naive.deg_lower(m, p, false, qp), lib, path.lower_dim(q, qp, p)[j]);
          t.same("lower-hp*", s, h, p, naive.deg_lower(m, p, true, qp), deg_L_hp_strict(k, s, h, p));
          ++e.telescoping_checks;
          const auto next = p < q ? deg_L_hp(k, s, h, p + 1) : 0;
          if (deg_L_hp_strict(k, s, h, p) != lib - next) ++e.telescoping_failures;
        }
      }

      for (int p = 0; p <= d; ++p) {
        const auto lib = deg_U_p(k, s, p);
        t.same("upper", s, p, 0, naive.deg_upper(m, p, false), lib, p >= q ? column(1, q, p)[j] : lib);
        t.same("upper*", s, p, 0, naive.deg_upper(m, p, true), deg_U_p_strict(k, s, p));
        for (int qp = 0; qp <= d; ++qp) {
          const int h = qp - q;
          const auto hp = deg_U_hp(k, s, h, p);
          const auto other = p >= std::max(q, qp) ? path.upper_dim(q, qp, p)[j] : hp;
          t.same("upper-hp", s, h, p, naive.deg_upper(m, p, false, qp), hp, other);
          t.same("upper-hp*", s, h, p, naive.deg_upper(m, p, true, qp), deg_U_hp_strict(k, s, h, p));
        }
      }

      for (int h = 1; q + h <= d; ++h) {
        const auto direct = naive.top_strict(m, h);
        t.same("top-strict", s, h, 0, direct, deg_U_top_strict(k, s, h), deg_U_hp_strict(k, s, h, q + h));
        const auto alternating = deg_U_top_strict_alternating(k, s, h);
        ++e.alternating_checks;
        if (alternating != direct) {
          ++e.alternating_failures;
          if (e.first_alternating_failure.empty()) {
            std::ostringstream os;
            os << "s=" << s << " h=" << h << " alternating=" << alternating << " direct=" << direct;
            e.first_alternating_failure = os.str();
          }
        }
        std::int64_t correction = 0;
        for (Mask tau : naive.of_dim(q + h))
          if (subset(m, tau) && std::find(naive.facets().begin(), naive.facets().end(), tau) == naive.facets().end())
            correction += naive.link_defect(tau);
        if (alternating != direct + correction) ++e.corrected_failures;
      }

      for (bool include : {false, true}) {
        const auto self = include ? FacetSelfCount::Include : FacetSelfCount::Exclude;
        const auto lib = maximal_simplicial_degree(k, s, self);
        t.same("max-degree", s, include, 0, naive.maximal_degree(m, include), lib.total,
               engine.maximal_degree(s, self).total);
        t.same("max-upper", s, include, 0, naive.facets_containing(m, include), lib.upper, engine.upper(s, self));
      }
    }
  }

  // Pairwise relations, exhaustively.
  for (Mask s : naive.all())
    for (Mask u : naive.all()) {
      if (s == u) continue;
      const int q = dim_of(s), qp = dim_of(u);
      for (int p = 0; p <= std::min(q, qp); ++p) {
        t.same("adj-pair", to_simplex(s), p, qp, naive.adjacent(s, u, p),
               adj_p(k, to_simplex(s), to_simplex(u), p));
        // Lower adjacency is downward closed in p.
        ++e.monotonicity_checks;
        if (naive.lower(s, u, p) && p > 0 && !naive.lower(s, u, p - 1)) ++e.monotonicity_failures;
        if (!naive.lower_strict(s, u, p)) continue;
        const int pp = q + qp - p;
        if (naive.upper(s, u, pp)) continue;
        for (int h = 1; pp + h <= d; ++h) {
          ++e.monotonicity_checks;
          if (naive.upper(s, u, pp + h)) ++e.monotonicity_failures;
        }
      }
    }
  return e;
}

}  // namespace oracle
