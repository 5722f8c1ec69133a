#pragma once

// Exact convex hulls of full-dimensional integer point clouds, built by
// beneath-beyond insertion with integer orientation determinants.
//
// Every routine expects a cloud of pairwise distinct points of Z^k whose
// affine hull is all of R^k (k >= 1). Callers project lower-dimensional
// inputs onto a coordinate subspace first.

#include "newton_mv/rational.hpp"

#include <cstddef>
#include <vector>

namespace newton_mv::detail {

using IntegerCloud = std::vector<std::vector<Integer>>;

/// normal . x <= offset, with a primitive outward normal.
struct FacetInequality {
    std::vector<Integer> normal;
    Integer offset;
};

std::vector<FacetInequality> facet_inequalities(const IntegerCloud& cloud);

/// Flags the points that are vertices of conv(cloud).
std::vector<bool> extreme_points(const IntegerCloud& cloud);

/// k! * Vol(conv(cloud)), summed over cones on a boundary triangulation
/// seen from the first point.
Integer normalized_volume(const IntegerCloud& cloud);

} // namespace newton_mv::detail
