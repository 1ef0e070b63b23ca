#include "doctest.h"

#include <sstream>

#include "simpdeg/boundary.hpp"
#include "simpdeg/error.hpp"
#include "simpdeg/laplacian.hpp"
#include "simpdeg/random_complex.hpp"

#include "oracle.hpp"
#include "reference_complexes.hpp"

using namespace simpdeg;
using Dense = std::vector<std::vector<std::int64_t>>;

TEST_CASE("epsilon sign matches permutation parity") {
  for (int q = 0; q <= 6; ++q)
    for (int h = 1; h <= q + 1; ++h)
      for_each_combination(q + 1, h, [&](std::span<const int> pos) {
        const std::vector<int> removed(pos.begin(), pos.end());
        CHECK(epsilon_sign(pos, q) == oracle::parity_sign(removed, q));
      });
  const int bad[] = {2, 1};
  CHECK_THROWS_AS(epsilon_sign(bad, 3), DimensionError);
  const int out[] = {0, 4};
  CHECK_THROWS_AS(epsilon_sign(out, 3), DimensionError);
}

TEST_CASE("boundary of the triangle fan at (2,2)") {
  const auto k = refcx::closed(refcx::triangle_fan());
  const Dense expected{{1, 1, 1, 1, 1, 0},   {-1, 0, 0, 0, 0, 0},  {1, -1, 0, 0, 0, 0},
                       {0, 0, -1, -1, 0, 1}, {0, 1, 1, 0, -1, -1}, {0, 0, 0, 1, 1, 1}};
  const auto b = boundary_matrix(k, 2, 2);
  CHECK(b.to_dense() == expected);
  CHECK(b.row_basis() == k.simplices(0));
  CHECK(b.col_basis() == k.simplices(2));
  CHECK(coboundary_matrix(k, 2, 2) == b.transpose());
}

TEST_CASE("boundary matrices agree with the dense oracle") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const auto facets = random_facets(seed);
    const auto k = build_complex(facets, ClosureMode::Closed);
    const oracle::Naive naive(facets);
    for (int q = 0; q <= k.dim(); ++q)
      for (int h = 0; h <= q; ++h) {
        const auto b = boundary_matrix(k, q, h);
        if (h == 0) {
          CHECK(b == SparseIntMatrix::identity(k.count(q)));
          continue;
        }
        CHECK(b.to_dense() == oracle::dense_boundary(naive, q, h));
        for (std::size_t c = 0; c < b.cols(); ++c)
          CHECK(b.col_rows(c).size() == static_cast<std::size_t>(binomial(q + 1, h)));
      }
  }
}

TEST_CASE("boundary rejects bad ranges and explicit complexes") {
  const auto k = refcx::closed(refcx::two_triangles());
  CHECK_THROWS_AS(boundary_matrix(k, 3, 1), DimensionError);
  CHECK_THROWS_AS(boundary_matrix(k, 1, 2), DimensionError);
  CHECK_THROWS_AS(boundary_matrix(k, 1, -1), DimensionError);
  const auto e = build_complex(refcx::two_triangles(), ClosureMode::Explicit);
  CHECK_THROWS_AS(boundary_matrix(e, 2, 1), ModeError);
}

TEST_CASE("classical boundary squares to zero") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto k = random_complex(seed);
    for (int q = 2; q <= k.dim(); ++q) CHECK((boundary_matrix(k, q - 1, 1) * boundary_matrix(k, q, 1)).nonzeros() == 0);
  }
}

TEST_CASE("multi-parameter boundary need not square to zero") {
  // On a single tetrahedron the (1,1) after (3,2) composition survives.
  const auto k = refcx::closed({{0, 1, 2, 3}});
  CHECK((boundary_matrix(k, 1, 1) * boundary_matrix(k, 3, 2)).nonzeros() > 0);
}

TEST_CASE("oriented degrees on the triangle fan") {
  const auto k = refcx::closed(refcx::triangle_fan());
  CHECK(odeg_U(k, 2, oriented({0}), oriented({2})) == 0);
  CHECK(odeg_U(k, 2, oriented({0}), oriented({3})) == -2);
  CHECK(odeg_L(k, 0, oriented({0, 1, 2}), oriented({0, 2, 4})) == 0);
  // Flipping an orientation flips the sign.
  CHECK(odeg_U(k, 2, oriented({0}), {Simplex{3}, -1}) == 2);
}

TEST_CASE("sign_of includes both orientations") {
  const OrientedSimplex t{Simplex{0, 1, 2}, 1};
  CHECK(sign_of(t, oriented({0, 2})) == -1);
  CHECK(sign_of(-t, oriented({0, 2})) == 1);
  CHECK(sign_of(t, {Simplex{0, 2}, -1}) == 1);
  CHECK(sign_of(t, oriented({3})) == 0);
  CHECK(sig_U(oriented({0}), oriented({3}), t) == 0);
  CHECK(sig_L(oriented({0, 1}), oriented({1, 2}), oriented({1})) == -1);
}

TEST_CASE("chain boundary matches the matrix") {
  const auto k = refcx::closed(refcx::triangle_fan());
  Chain c{2, {{Simplex{0, 1, 2}, 2}, {Simplex{3, 4, 5}, -1}}};
  const Chain d = apply_boundary(c, 2);
  const auto b = boundary_matrix(k, 2, 2);
  for (const auto& [s, coeff] : d.coefficients) {
    const auto row = *k.index_of(s);
    CHECK(coeff == 2 * b.at(row, 0) - b.at(row, 5));
  }
  CHECK(inner_product(d, d) == 4 * 3 + 3);
}
