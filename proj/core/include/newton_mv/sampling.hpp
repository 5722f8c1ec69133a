#pragma once

// Random instance generators shared by the fuzz command, the tests and the
// benchmarks. All draws go through the caller's engine, so runs are
// reproducible from a seed.

#include "newton_mv/lattice_geometry.hpp"

#include <random>

namespace newton_mv {

/// Between min_points and max_points draws from [-max_coord, max_coord]^dim
/// (duplicates collapse, so the result may be smaller).
SupportSet random_support(std::mt19937_64& rng, std::size_t dim, std::size_t max_points, long max_coord,
                          std::size_t min_points = 1);

/// Hull of a random support; it has at most max_points vertices.
Polytope random_lattice_polytope(std::mt19937_64& rng, std::size_t dim, std::size_t max_points, long max_coord,
                                 std::size_t min_points = 1);

} // namespace newton_mv
