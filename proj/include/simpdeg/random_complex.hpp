#pragma once

#include <cstdint>
#include <vector>

#include "simpdeg/complex.hpp"

namespace simpdeg {

struct RandomComplexSpec {
  int min_vertices = 4;
  int max_vertices = 12;
  int max_dim = 4;
  int max_facets = 8;
};

/// Facet list of a seeded random complex. Draws use mt19937_64 with plain
/// modulo reduction, so a seed gives the same complex on every platform.
std::vector<Simplex> random_facets(std::uint64_t seed, const RandomComplexSpec& spec = {});

SimplicialComplex random_complex(std::uint64_t seed, const RandomComplexSpec& spec = {});

/// Random graph on n vertices: every vertex plus each edge with probability
/// percent/100, as a closed complex of dimension <= 1.
SimplicialComplex random_graph(std::uint64_t seed, int n, int percent);

}  // namespace simpdeg
