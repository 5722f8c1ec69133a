#include "linear_algebra.hpp"

#include <utility>

namespace newton_mv::detail {

RowEchelon row_echelon(RationalMatrix rows, std::size_t cols)
{
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[row], rows[pivot]);
        const Rational inv = 1 / rows[row][col];
        for (std::size_t c = col; c < cols; ++c)
            rows[row][c] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == row || rows[r][col] == 0)
                continue;
            const Rational factor = rows[r][col];
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] -= factor * rows[row][c];
        }
        out.pivots.push_back(col);
        ++row;
    }
    rows.resize(row);
    out.reduced = std::move(rows);
    return out;
}

RationalMatrix null_space(const RowEchelon& echelon, std::size_t cols)
{
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : echelon.pivots)
        is_pivot[p] = true;
    RationalMatrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < echelon.rank(); ++r)
            v[echelon.pivots[r]] = -echelon.reduced[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Integer common_denominator(const RationalMatrix& rows)
{
    Integer l = 1;
    for (const auto& row : rows)
        for (const auto& q : row)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

} // namespace newton_mv::detail
