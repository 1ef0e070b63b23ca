#include "simpdeg/random_complex.hpp"

#include <algorithm>
#include <random>

#include "simpdeg/error.hpp"

namespace simpdeg {

std::vector<Simplex> random_facets(std::uint64_t seed, const RandomComplexSpec& spec) {
  if (spec.min_vertices < 1 || spec.max_vertices < spec.min_vertices || spec.max_dim < 0 || spec.max_facets < 1)
    throw ParamError("invalid random complex spec");
  std::mt19937_64 rng(seed);
  auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };

  const int n = draw(spec.min_vertices, spec.max_vertices);
  const int facets = draw(1, spec.max_facets);
  const int top = std::min(spec.max_dim + 1, n);
  std::vector<Simplex> out;
  for (int f = 0; f < facets; ++f) {
    const int size = draw(1, top);
    std::vector<VertexId> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = static_cast<VertexId>(i);
    // Partial Fisher-Yates.
    for (int i = 0; i < size; ++i) std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(draw(i, n - 1))]);
    pool.resize(static_cast<std::size_t>(size));
    out.push_back(Simplex::from_unsorted(std::move(pool)));
  }
  return out;
}

SimplicialComplex random_complex(std::uint64_t seed, const RandomComplexSpec& spec) {
  return build_complex(random_facets(seed, spec), ClosureMode::Closed);
}

SimplicialComplex random_graph(std::uint64_t seed, int n, int percent) {
  if (n < 1) throw ParamError("graph needs at least one vertex");
  std::mt19937_64 rng(seed);
  std::vector<Simplex> simplices;
  for (int v = 0; v < n; ++v) simplices.push_back(Simplex{static_cast<VertexId>(v)});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (static_cast<int>(rng() % 100) < percent)
        simplices.push_back(Simplex{static_cast<VertexId>(a), static_cast<VertexId>(b)});
  return build_complex(std::move(simplices), ClosureMode::Closed);
}

}  // namespace simpdeg
