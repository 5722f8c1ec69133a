#include "newton_mv/sampling.hpp"

namespace newton_mv {

SupportSet random_support(std::mt19937_64& rng, std::size_t dim, std::size_t max_points, long max_coord,
                          std::size_t min_points)
{
    if (min_points == 0 || min_points > max_points)
        throw InvalidArgument("random_support needs 1 <= min_points <= max_points");
    std::uniform_int_distribution<std::size_t> count(min_points, max_points);
    std::uniform_int_distribution<long> coord(-max_coord, max_coord);
    const std::size_t k = count(rng);
    std::vector<LatticePoint> pts;
    pts.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Integer> c(dim);
        for (auto& x : c)
            x = coord(rng);
        pts.emplace_back(std::move(c));
    }
    return SupportSet(dim, std::move(pts));
}

Polytope random_lattice_polytope(std::mt19937_64& rng, std::size_t dim, std::size_t max_points, long max_coord,
                                 std::size_t min_points)
{
    return convex_hull(random_support(rng, dim, max_points, max_coord, min_points));
}

} // namespace newton_mv
