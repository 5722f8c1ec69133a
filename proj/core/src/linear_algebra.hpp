#pragma once

// Small exact linear algebra helpers shared by the geometry code.

#include "newton_mv/rational.hpp"

#include <cstddef>
#include <vector>

namespace newton_mv::detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct RowEchelon {
    RationalMatrix reduced;            // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination over Q. `cols` is needed when `rows` is empty.
RowEchelon row_echelon(RationalMatrix rows, std::size_t cols);

/// Basis of { c : r . c = 0 for every row r }.
RationalMatrix null_space(const RowEchelon& echelon, std::size_t cols);

/// Least common multiple of all denominators.
Integer common_denominator(const RationalMatrix& rows);

} // namespace newton_mv::detail
