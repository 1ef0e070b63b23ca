#include "doctest.h"

#include "simpdeg/boundary.hpp"
#include "simpdeg/degrees.hpp"
#include "simpdeg/error.hpp"
#include "simpdeg/laplacian.hpp"
#include "simpdeg/random_complex.hpp"

#include "oracle.hpp"
#include "reference_complexes.hpp"

using namespace simpdeg;
using Dense = std::vector<std::vector<std::int64_t>>;

TEST_CASE("upper and lower parts on the triangle fan") {
  const auto k = refcx::closed(refcx::triangle_fan());
  const Dense up{{5, -1, 0, -2, 1, 2},  {-1, 1, -1, 0, 0, 0}, {0, -1, 2, 0, -1, 0},
                 {-2, 0, 0, 3, -2, 0},  {1, 0, -1, -2, 4, -2}, {2, 0, 0, 0, -2, 3}};
  const Dense low{{3, 0, 1, 1, 1, 0}, {0, 3, 2, 1, 0, -1}, {1, 2, 3, 2, 0, -2},
                  {1, 1, 2, 3, 2, 0}, {1, 0, 0, 2, 3, 2},  {0, -1, -2, 0, 2, 3}};
  CHECK(upper_laplacian(k, 0, 2).to_dense() == up);
  CHECK(lower_laplacian(k, 2, 2).to_dense() == low);
  // A lower adjacent pair whose shared faces cancel.
  CHECK(lower_laplacian(k, 2, 2).at(0, 1) == 0);
}

TEST_CASE("laplacians are symmetric with nonnegative quadratic form") {
  for (std::uint64_t seed = 200; seed < 215; ++seed) {
    const auto k = random_complex(seed);
    for (int q = 0; q <= k.dim(); ++q)
      for (int h = 1; q + h <= k.dim() + 1; ++h)
        for (int hp = 1; hp <= std::max(1, q); ++hp) {
          const auto l = multi_laplacian(k, q, h, hp);
          CHECK(l.full.symmetric());
          CHECK(l.full == l.upper + l.lower);
          const auto d = l.full.to_dense();
          // x^T L x = |B^T x|^2 + |B x|^2 >= 0 on a few integer vectors.
          for (int pattern = 1; pattern < 8; ++pattern) {
            std::vector<std::int64_t> x(d.size());
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<std::int64_t>((i * 7 + pattern) % 5) - 2;
            std::int64_t quad = 0;
            for (std::size_t i = 0; i < d.size(); ++i)
              for (std::size_t j = 0; j < d.size(); ++j) quad += x[i] * d[i][j] * x[j];
            CHECK(quad >= 0);
          }
        }
  }
}

TEST_CASE("entries are degrees and oriented degrees") {
  for (std::uint64_t seed = 300; seed < 320; ++seed) {
    const auto k = random_complex(seed);
    for (int q = 0; q <= k.dim(); ++q)
      for (int h = 1; h <= std::max(1, k.dim() - q); ++h)
        for (int hp = 1; hp <= std::max(1, q); ++hp) CHECK(verify_entries(k, q, h, hp).empty());
  }
}

TEST_CASE("h = h' = 1 gives the classical Laplacian") {
  for (std::uint64_t seed = 400; seed < 420; ++seed) {
    const auto facets = random_facets(seed);
    const auto k = build_complex(facets, ClosureMode::Closed);
    const oracle::Naive naive(facets);
    for (int q = 0; q <= k.dim(); ++q) {
      const auto l = multi_laplacian(k, q, 1, 1);
      CHECK(l.upper.to_dense() == oracle::classical_upper(naive, q));
      CHECK(l.lower.to_dense() == oracle::classical_lower(naive, q));
      CHECK(l.full.to_dense() == oracle::classical_laplacian(naive, q));
    }
  }
}

TEST_CASE("graph Laplacian") {
  const auto g = random_graph(3, 9, 40);
  const auto l = multi_laplacian(g, 0, 1, 1).full.to_dense();
  for (std::size_t i = 0; i < l.size(); ++i) {
    std::int64_t row = 0;
    for (auto v : l[i]) row += v;
    CHECK(row == 0);
    CHECK(l[i][i] == deg_U_hp(g, g.simplices(0)[i], 1, 1));
  }
}

TEST_CASE("laplacian parameter errors") {
  const auto k = refcx::closed(refcx::two_triangles());
  CHECK_THROWS_AS(lower_laplacian(k, 1, 2), DimensionError);
  CHECK_THROWS_AS(upper_laplacian(k, 1, -1), DimensionError);
  CHECK(upper_laplacian(k, 2, 1).nonzeros() == 0);
  CHECK(upper_laplacian(k, 2, 1).rows() == 2);
  CHECK_THROWS_AS(verify_entries(k, 1, 0, 1), ParamError);
  CHECK(multi_laplacian(k, 0, 1, 1).lower.nonzeros() == 0);
  const auto e = build_complex(refcx::two_triangles(), ClosureMode::Explicit);
  CHECK_THROWS_AS(upper_laplacian(e, 0, 1), ModeError);
}
