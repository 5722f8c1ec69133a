#include "hull_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <map>
#include <set>

namespace newton_mv::detail {
namespace {

// The kernel is instantiated twice: on `long` when every intermediate value is
// provably below 2^62, and on Integer otherwise. All intermediates are minors of
// the difference matrix, bounded by k! * (2M)^k for coordinates |x| <= M.

inline int sign_of(long v) { return (v > 0) - (v < 0); }
inline int sign_of(const Integer& v) { return sgn(v); }

inline long gcd_abs(long a, long b) { return std::gcd(a, b); }
inline Integer gcd_abs(const Integer& a, const Integer& b) { return gcd(a, b); }

inline Integer to_integer(long v) { return Integer(v); }
inline Integer to_integer(const Integer& v) { return v; }

template <class Int>
using Cloud = std::vector<std::vector<Int>>;

template <class Int>
struct Facet {
    std::vector<Int> normal;
    Int offset;
    std::vector<std::size_t> on; // sorted indices of points on the hyperplane
};

// Determinant of rows [row, nrows) restricted to the columns in `colmask`,
// by cofactor expansion. Matrices here are at most 6x6.
template <class Int>
Int minor_det(const std::vector<Int>& m, std::size_t stride, std::size_t row, std::size_t nrows,
              unsigned colmask)
{
    if (row == nrows)
        return Int(1);
    Int acc(0);
    bool positive = true;
    for (unsigned c = 0; c < stride; ++c) {
        if (!((colmask >> c) & 1u))
            continue;
        const Int& e = m[row * stride + c];
        if (e != 0) {
            const Int sub = minor_det(m, stride, row + 1, nrows, colmask & ~(1u << c));
            if (positive)
                acc += e * sub;
            else
                acc -= e * sub;
        }
        positive = !positive;
    }
    return acc;
}

template <class Int>
Int dot(const std::vector<Int>& a, const std::vector<Int>& b)
{
    Int acc(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a[i] * b[i];
    return acc;
}

// normal . x = offset through the k points `ids`; false when they are affinely dependent.
template <class Int>
bool hyperplane_through(const Cloud<Int>& pts, const std::vector<std::size_t>& ids, std::vector<Int>& normal,
                        Int& offset)
{
    const std::size_t k = pts.front().size();
    const unsigned all_cols = (1u << k) - 1u;
    std::vector<Int> diff((k - 1) * k);
    const auto& base = pts[ids[0]];
    for (std::size_t r = 1; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
            diff[(r - 1) * k + c] = pts[ids[r]][c] - base[c];
    normal.assign(k, Int(0));
    bool zero = true;
    for (std::size_t c = 0; c < k; ++c) {
        normal[c] = minor_det(diff, k, 0, k - 1, all_cols & ~(1u << c));
        if (c % 2 == 1)
            normal[c] = -normal[c];
        zero = zero && normal[c] == 0;
    }
    offset = dot(normal, base);
    return !zero;
}

// Fraction-free elimination; true when the rows have full row rank.
template <class Int>
bool independent_rows(std::vector<std::vector<Int>> m)
{
    const std::size_t rows = m.size(), cols = m.front().size();
    Int prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r == rows;
}

template <class Int>
struct BoundarySimplex {
    std::vector<std::size_t> ids; // k points spanning a supporting hyperplane
    std::vector<Int> normal;      // outward
    Int offset;
};

// Orients normal . x <= offset so that `inside` lies strictly below it.
template <class Int>
void orient_away_from(std::vector<Int>& normal, Int& offset, const std::vector<Int>& inside)
{
    if (dot(normal, inside) > offset) {
        for (auto& a : normal)
            a = -a;
        offset = -offset;
    }
}

// Beneath-beyond: a triangulation of the boundary of conv(pts) into (k-1)-simplices.
// A simplex is visible from a new point only when the point is strictly beyond
// its hyperplane, so coplanar points extend facets instead of splitting them.
template <class Int>
std::vector<BoundarySimplex<Int>> boundary_triangulation(const Cloud<Int>& pts)
{
    const std::size_t n = pts.size();
    const std::size_t k = pts.front().size();

    // Greedy affinely independent start.
    std::vector<std::size_t> start{0};
    std::vector<std::vector<Int>> diffs;
    for (std::size_t i = 1; i < n && start.size() <= k; ++i) {
        std::vector<Int> d(k);
        for (std::size_t c = 0; c < k; ++c)
            d[c] = pts[i][c] - pts[0][c];
        diffs.push_back(std::move(d));
        if (independent_rows(diffs))
            start.push_back(i);
        else
            diffs.pop_back();
    }

    std::vector<BoundarySimplex<Int>> live;
    for (std::size_t skip = 0; skip <= k; ++skip) {
        BoundarySimplex<Int> s;
        for (std::size_t j = 0; j <= k; ++j)
            if (j != skip)
                s.ids.push_back(start[j]);
        hyperplane_through(pts, s.ids, s.normal, s.offset);
        orient_away_from(s.normal, s.offset, pts[start[skip]]);
        live.push_back(std::move(s));
    }

    std::vector<bool> used(n, false);
    for (auto i : start)
        used[i] = true;
    for (std::size_t p = 0; p < n; ++p) {
        if (used[p])
            continue;
        std::vector<BoundarySimplex<Int>> keep, visible;
        for (auto& s : live)
            (dot(s.normal, pts[p]) > s.offset ? visible : keep).push_back(std::move(s));
        if (visible.empty()) {
            live = std::move(keep);
            continue;
        }
        // Horizon ridges belong to exactly one visible simplex; remember the
        // vertex opposite each one, which stays strictly inside the new facet.
        std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> ridges;
        for (const auto& s : visible) {
            for (std::size_t drop = 0; drop < k; ++drop) {
                std::vector<std::size_t> r;
                for (std::size_t j = 0; j < k; ++j)
                    if (j != drop)
                        r.push_back(s.ids[j]);
                std::sort(r.begin(), r.end());
                auto& entry = ridges[r];
                ++entry.first;
                entry.second = s.ids[drop];
            }
        }
        for (auto& [ridge, entry] : ridges) {
            if (entry.first != 1)
                continue;
            BoundarySimplex<Int> s;
            s.ids = ridge;
            s.ids.push_back(p);
            hyperplane_through(pts, s.ids, s.normal, s.offset);
            orient_away_from(s.normal, s.offset, pts[entry.second]);
            keep.push_back(std::move(s));
        }
        live = std::move(keep);
    }
    return live;
}

template <class Int>
std::vector<Facet<Int>> enumerate_facets(const Cloud<Int>& pts)
{
    std::vector<Facet<Int>> facets;
    std::set<std::vector<Int>> seen;
    for (auto& s : boundary_triangulation(pts)) {
        Facet<Int> f;
        f.normal = std::move(s.normal);
        f.offset = std::move(s.offset);
        Int g(0);
        for (const auto& a : f.normal)
            g = gcd_abs(g, a);
        if (g != 1) {
            for (auto& a : f.normal)
                a /= g;
            f.offset /= g;
        }
        if (!seen.insert(f.normal).second)
            continue;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (dot(f.normal, pts[i]) == f.offset)
                f.on.push_back(i);
        facets.push_back(std::move(f));
    }
    return facets;
}

template <class Int>
std::vector<bool> extreme_points_impl(const Cloud<Int>& pts)
{
    const std::size_t n = pts.size();
    if (n == 1)
        return {true};
    const auto facets = enumerate_facets(pts);

    // A point is a vertex iff no other point lies on every facet through it.
    const std::size_t words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> masks;
    masks.reserve(facets.size());
    for (const auto& f : facets) {
        std::vector<std::uint64_t> m(words, 0);
        for (std::size_t i : f.on)
            m[i / 64] |= std::uint64_t{1} << (i % 64);
        masks.push_back(std::move(m));
    }
    std::vector<bool> out(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::uint64_t> acc(words, ~std::uint64_t{0});
        bool on_boundary = false;
        for (const auto& m : masks) {
            if (!((m[i / 64] >> (i % 64)) & 1u))
                continue;
            on_boundary = true;
            for (std::size_t w = 0; w < words; ++w)
                acc[w] &= m[w];
        }
        if (!on_boundary)
            continue;
        std::size_t count = 0;
        for (std::size_t j = 0; j < n && count < 2; ++j)
            if ((acc[j / 64] >> (j % 64)) & 1u)
                ++count;
        out[i] = count == 1;
    }
    return out;
}

// Cones from pts[0] over the boundary simplices; those through pts[0] are flat
// and contribute nothing.
template <class Int>
Integer normalized_volume_impl(const Cloud<Int>& pts)
{
    const std::size_t k = pts.front().size();
    Integer total = 0;
    std::vector<Int> m(k * k);
    for (const auto& s : boundary_triangulation(pts)) {
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c)
                m[r * k + c] = pts[s.ids[r]][c] - pts[0][c];
        total += abs(to_integer(minor_det(m, k, 0, k, (1u << k) - 1u)));
    }
    return total;
}

bool fits_machine_word(const IntegerCloud& cloud)
{
    const std::size_t k = cloud.front().size();
    Integer max_abs = 0;
    for (const auto& p : cloud)
        for (const auto& x : p)
            if (abs(x) > max_abs)
                max_abs = abs(x);
    if (!max_abs.fits_slong_p())
        return false;
    const long double bound = std::tgamma(static_cast<long double>(k) + 1)
                              * std::pow(2.0L * static_cast<long double>(max_abs.get_si()) + 1.0L,
                                         static_cast<long double>(k));
    return bound < 0x1p61L;
}

Cloud<long> to_machine(const IntegerCloud& cloud)
{
    Cloud<long> out;
    out.reserve(cloud.size());
    for (const auto& p : cloud) {
        std::vector<long> q;
        q.reserve(p.size());
        for (const auto& x : p)
            q.push_back(x.get_si());
        out.push_back(std::move(q));
    }
    return out;
}

template <class Int>
std::vector<FacetInequality> to_inequalities(const std::vector<Facet<Int>>& facets)
{
    std::vector<FacetInequality> out;
    out.reserve(facets.size());
    for (const auto& f : facets) {
        FacetInequality h;
        for (const auto& a : f.normal)
            h.normal.push_back(to_integer(a));
        h.offset = to_integer(f.offset);
        out.push_back(std::move(h));
    }
    return out;
}

} // namespace

std::vector<FacetInequality> facet_inequalities(const IntegerCloud& cloud)
{
    if (fits_machine_word(cloud))
        return to_inequalities(enumerate_facets(to_machine(cloud)));
    return to_inequalities(enumerate_facets(cloud));
}

std::vector<bool> extreme_points(const IntegerCloud& cloud)
{
    if (fits_machine_word(cloud))
        return extreme_points_impl(to_machine(cloud));
    return extreme_points_impl(cloud);
}

Integer normalized_volume(const IntegerCloud& cloud)
{
    if (fits_machine_word(cloud))
        return normalized_volume_impl(to_machine(cloud));
    return normalized_volume_impl(cloud);
}

} // namespace newton_mv::detail
