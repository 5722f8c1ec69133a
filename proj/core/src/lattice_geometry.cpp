#include "newton_mv/lattice_geometry.hpp"

#include "hull_kernel.hpp"
#include "linear_algebra.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace newton_mv {

namespace {

std::atomic<std::size_t> g_max_dimension{kDefaultMaxDimension};

void check_dimension(std::size_t dim)
{
    if (dim == 0)
        throw UnsupportedDimension("ambient dimension must be at least 1");
    if (dim > max_dimension())
        throw UnsupportedDimension("ambient dimension " + std::to_string(dim) + " exceeds the configured cap "
                                   + std::to_string(max_dimension()));
}

template <class Point>
std::string join_points(const std::vector<Point>& pts)
{
    std::string out = "{";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i)
            out += ", ";
        out += pts[i].str();
    }
    return out + "}";
}

// Coordinates of a point set relative to its first point, scaled to integers,
// together with a coordinate projection that is injective on the affine hull.
struct AffineFrame {
    RationalPoint origin;
    Integer scale = 1;
    detail::IntegerCloud lifted;
    detail::RowEchelon echelon;
    detail::IntegerCloud projected;
};

AffineFrame make_frame(const std::vector<RationalPoint>& pts)
{
    AffineFrame frame;
    frame.origin = pts.front();
    const std::size_t dim = frame.origin.dim();

    detail::RationalMatrix diffs;
    diffs.reserve(pts.size());
    for (const auto& p : pts) {
        std::vector<Rational> row(dim);
        for (std::size_t c = 0; c < dim; ++c)
            row[c] = p[c] - frame.origin[c];
        diffs.push_back(std::move(row));
    }
    frame.scale = detail::common_denominator(diffs);
    for (const auto& row : diffs) {
        std::vector<Integer> lifted(dim);
        for (std::size_t c = 0; c < dim; ++c) {
            const Rational v = row[c] * frame.scale;
            lifted[c] = v.get_num();
        }
        frame.lifted.push_back(std::move(lifted));
    }
    frame.echelon = detail::row_echelon(std::move(diffs), dim);
    for (const auto& row : frame.lifted) {
        std::vector<Integer> proj;
        proj.reserve(frame.echelon.rank());
        for (std::size_t c : frame.echelon.pivots)
            proj.push_back(row[c]);
        frame.projected.push_back(std::move(proj));
    }
    return frame;
}

// Exact H-representation: equations cut out the affine hull, inequalities are
// the facets inside it (in pivot coordinates of the scaled frame).
struct HRep {
    AffineFrame frame;
    detail::RationalMatrix equations;
    std::vector<detail::FacetInequality> facets;
};

HRep make_hrep(const Polytope& p)
{
    HRep h;
    h.frame = make_frame(p.vertices());
    h.equations = detail::null_space(h.frame.echelon, p.dim());
    if (h.frame.echelon.rank() > 0)
        h.facets = detail::facet_inequalities(h.frame.projected);
    return h;
}

bool satisfies(const HRep& h, const RationalPoint& x)
{
    const std::size_t dim = x.dim();
    std::vector<Rational> y(dim);
    for (std::size_t c = 0; c < dim; ++c)
        y[c] = (x[c] - h.frame.origin[c]) * h.frame.scale;
    for (const auto& eq : h.equations) {
        Rational acc = 0;
        for (std::size_t c = 0; c < dim; ++c)
            acc += eq[c] * y[c];
        if (acc != 0)
            return false;
    }
    const auto& pivots = h.frame.echelon.pivots;
    for (const auto& f : h.facets) {
        Rational acc = 0;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            acc += f.normal[i] * y[pivots[i]];
        if (acc > f.offset)
            return false;
    }
    return true;
}

Integer floor_of(const Rational& q)
{
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Integer ceil_of(const Rational& q)
{
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

} // namespace

std::size_t max_dimension() noexcept { return g_max_dimension.load(std::memory_order_relaxed); }

void set_max_dimension(std::size_t n)
{
    if (n == 0)
        throw InvalidArgument("dimension cap must be positive");
    g_max_dimension.store(n, std::memory_order_relaxed);
}

// ---------------------------------------------------------------------------
// Points and supports

LatticePoint::LatticePoint(std::initializer_list<long> coords)
{
    coords_.reserve(coords.size());
    for (long c : coords)
        coords_.emplace_back(c);
}

LatticePoint LatticePoint::operator+(const LatticePoint& other) const
{
    if (dim() != other.dim())
        throw DimensionMismatch("cannot add lattice points of dimensions " + std::to_string(dim()) + " and "
                                + std::to_string(other.dim()));
    std::vector<Integer> out(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        out[i] = coords_[i] + other.coords_[i];
    return LatticePoint(std::move(out));
}

LatticePoint LatticePoint::operator-(const LatticePoint& other) const
{
    if (dim() != other.dim())
        throw DimensionMismatch("cannot subtract lattice points of dimensions " + std::to_string(dim()) + " and "
                                + std::to_string(other.dim()));
    std::vector<Integer> out(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        out[i] = coords_[i] - other.coords_[i];
    return LatticePoint(std::move(out));
}

std::string LatticePoint::str() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i)
            out += ",";
        out += coords_[i].get_str();
    }
    return out + ")";
}

RationalPoint::RationalPoint(std::vector<Rational> coords) : coords_(std::move(coords))
{
    for (auto& c : coords_)
        c.canonicalize();
}

RationalPoint::RationalPoint(const LatticePoint& p)
{
    coords_.reserve(p.dim());
    for (const auto& c : p.coords())
        coords_.emplace_back(c);
}

RationalPoint::RationalPoint(std::initializer_list<Rational> coords) : RationalPoint(std::vector<Rational>(coords)) {}

bool RationalPoint::is_integral() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return is_integer(q); });
}

LatticePoint RationalPoint::to_lattice() const
{
    if (!is_integral())
        throw InvalidArgument("point " + str() + " is not a lattice point");
    std::vector<Integer> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_)
        out.push_back(c.get_num());
    return LatticePoint(std::move(out));
}

RationalPoint RationalPoint::operator+(const RationalPoint& other) const
{
    if (dim() != other.dim())
        throw DimensionMismatch("cannot add points of dimensions " + std::to_string(dim()) + " and "
                                + std::to_string(other.dim()));
    std::vector<Rational> out(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        out[i] = coords_[i] + other.coords_[i];
    return RationalPoint(std::move(out));
}

std::string RationalPoint::str() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i)
            out += ",";
        out += to_string(coords_[i]);
    }
    return out + ")";
}

SupportSet::SupportSet(std::size_t dim, std::vector<LatticePoint> points) : dim_(dim), points_(std::move(points))
{
    normalize();
}

SupportSet::SupportSet(std::vector<LatticePoint> points)
    : dim_(points.empty() ? 0 : points.front().dim()), points_(std::move(points))
{
    normalize();
}

void SupportSet::normalize()
{
    if (points_.empty())
        throw EmptyInput("support set must be nonempty");
    check_dimension(dim_);
    for (const auto& p : points_)
        if (p.dim() != dim_)
            throw DimensionMismatch("support point " + p.str() + " does not have dimension " + std::to_string(dim_));
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

namespace {
std::vector<LatticePoint> to_points(std::initializer_list<std::initializer_list<long>> pts)
{
    if (pts.size() == 0)
        throw EmptyInput("support set must be nonempty");
    std::vector<LatticePoint> out;
    out.reserve(pts.size());
    for (const auto& p : pts)
        out.emplace_back(p);
    return out;
}
} // namespace

SupportSet::SupportSet(std::initializer_list<std::initializer_list<long>> points) : SupportSet(to_points(points)) {}

bool SupportSet::contains(const LatticePoint& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

std::string SupportSet::str() const { return join_points(points_); }

// ---------------------------------------------------------------------------
// Polytopes

bool Polytope::is_lattice() const
{
    return std::all_of(vertices_.begin(), vertices_.end(), [](const RationalPoint& v) { return v.is_integral(); });
}

std::string Polytope::str() const { return "conv" + join_points(vertices_); }

Polytope convex_hull(std::span<const RationalPoint> points)
{
    if (points.empty())
        throw EmptyInput("convex hull of an empty point set");
    const std::size_t dim = points.front().dim();
    check_dimension(dim);
    for (const auto& p : points)
        if (p.dim() != dim)
            throw DimensionMismatch("point " + p.str() + " does not have dimension " + std::to_string(dim));

    std::vector<RationalPoint> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1)
        return Polytope(dim, std::move(pts));

    const AffineFrame frame = make_frame(pts);
    const std::vector<bool> extreme = detail::extreme_points(frame.projected);
    std::vector<RationalPoint> vertices;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (extreme[i])
            vertices.push_back(std::move(pts[i]));
    return Polytope(dim, std::move(vertices));
}

Polytope convex_hull(const SupportSet& support)
{
    std::vector<RationalPoint> pts;
    pts.reserve(support.size());
    for (const auto& p : support.points())
        pts.emplace_back(p);
    return convex_hull(pts);
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q)
{
    if (p.dim() != q.dim())
        throw DimensionMismatch("Minkowski sum of polytopes in dimensions " + std::to_string(p.dim()) + " and "
                                + std::to_string(q.dim()));
    std::vector<RationalPoint> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices())
            sums.push_back(a + b);
    return convex_hull(sums);
}

Polytope scale(const Polytope& p, const Rational& lambda)
{
    if (lambda < 0)
        throw InvalidArgument("scale factor must be nonnegative, got " + to_string(lambda));
    if (lambda == 0)
        return Polytope(p.dim(), {RationalPoint(std::vector<Rational>(p.dim(), Rational(0)))});
    std::vector<RationalPoint> out;
    out.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) {
        std::vector<Rational> c(v.coords());
        for (auto& x : c)
            x *= lambda;
        out.emplace_back(std::move(c));
    }
    // Positive scaling preserves lexicographic order.
    return Polytope(p.dim(), std::move(out));
}

Polytope translate(const Polytope& p, const LatticePoint& t)
{
    if (p.dim() != t.dim())
        throw DimensionMismatch("translation vector has dimension " + std::to_string(t.dim()) + ", polytope "
                                + std::to_string(p.dim()));
    std::vector<RationalPoint> pts;
    pts.reserve(p.vertices().size());
    const RationalPoint shift(t);
    for (const auto& v : p.vertices())
        pts.push_back(v + shift);
    return convex_hull(pts);
}

Rational volume(const Polytope& p)
{
    const std::size_t n = p.dim();
    if (p.vertices().size() < n + 1)
        return 0;
    const AffineFrame frame = make_frame(p.vertices());
    if (frame.echelon.rank() < n)
        return 0;
    const Integer total = detail::normalized_volume(frame.lifted);
    Integer denom = factorial(static_cast<unsigned>(n));
    Integer scale_pow;
    mpz_pow_ui(scale_pow.get_mpz_t(), frame.scale.get_mpz_t(), n);
    denom *= scale_pow;
    Rational out(total, denom);
    out.canonicalize();
    return out;
}

SupportSet lattice_points(const Polytope& p)
{
    const std::size_t n = p.dim();
    std::vector<Integer> lo(n), hi(n);
    for (std::size_t c = 0; c < n; ++c) {
        Rational mn = p.vertices().front()[c], mx = mn;
        for (const auto& v : p.vertices()) {
            mn = std::min(mn, v[c]);
            mx = std::max(mx, v[c]);
        }
        lo[c] = ceil_of(mn);
        hi[c] = floor_of(mx);
        if (lo[c] > hi[c])
            throw NoLatticePoints(p.str() + " contains no lattice point");
    }

    const HRep h = make_hrep(p);
    std::vector<LatticePoint> found;
    std::vector<Integer> cur = lo;
    while (true) {
        LatticePoint candidate(cur);
        if (satisfies(h, RationalPoint(candidate)))
            found.push_back(std::move(candidate));
        std::size_t c = 0;
        while (c < n && cur[c] == hi[c]) {
            cur[c] = lo[c];
            ++c;
        }
        if (c == n)
            break;
        ++cur[c];
    }
    if (found.empty())
        throw NoLatticePoints(p.str() + " contains no lattice point");
    return SupportSet(n, std::move(found));
}

bool polytope_equal(const Polytope& p, const Polytope& q)
{
    if (p.dim() != q.dim())
        throw DimensionMismatch("comparing polytopes of dimensions " + std::to_string(p.dim()) + " and "
                                + std::to_string(q.dim()));
    return p == q;
}

bool contains(const Polytope& p, const RationalPoint& x)
{
    if (p.dim() != x.dim())
        throw DimensionMismatch("point " + x.str() + " does not have dimension " + std::to_string(p.dim()));
    return satisfies(make_hrep(p), x);
}

bool is_subset(const Polytope& inner, const Polytope& outer)
{
    if (inner.dim() != outer.dim())
        throw DimensionMismatch("containment test between dimensions " + std::to_string(inner.dim()) + " and "
                                + std::to_string(outer.dim()));
    const HRep h = make_hrep(outer);
    return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                       [&](const RationalPoint& v) { return satisfies(h, v); });
}

std::size_t affine_dim(const Polytope& p)
{
    if (p.is_point())
        return 0;
    return make_frame(p.vertices()).echelon.rank();
}

} // namespace newton_mv
