#include "newton_mv/virtual_polytope.hpp"

#include "newton_mv/mixed_volume.hpp"

#include <bit>

namespace newton_mv {

namespace {

Polytope origin(std::size_t dim)
{
    const RationalPoint o(std::vector<Rational>(dim, Rational(0)));
    return convex_hull(std::span<const RationalPoint>(&o, 1));
}

void require_same_dim(const VirtualPolytope& a, const VirtualPolytope& b)
{
    if (a.dim() != b.dim())
        throw DimensionMismatch("virtual polytopes in dimensions " + std::to_string(a.dim()) + " and "
                                + std::to_string(b.dim()));
}

} // namespace

VirtualPolytope::VirtualPolytope(Polytope plus, Polytope minus) : plus_(std::move(plus)), minus_(std::move(minus))
{
    if (plus_.dim() != minus_.dim())
        throw DimensionMismatch("virtual polytope parts in dimensions " + std::to_string(plus_.dim()) + " and "
                                + std::to_string(minus_.dim()));
}

VirtualPolytope::VirtualPolytope(Polytope p) : plus_(std::move(p)), minus_(origin(plus_.dim())) {}

VirtualPolytope VirtualPolytope::zero(std::size_t dim) { return VirtualPolytope(origin(dim), origin(dim)); }

std::string VirtualPolytope::str() const { return plus_.str() + " - " + minus_.str(); }

VirtualPolytope vp_add(const VirtualPolytope& a, const VirtualPolytope& b)
{
    require_same_dim(a, b);
    return VirtualPolytope(minkowski_sum(a.plus(), b.plus()), minkowski_sum(a.minus(), b.minus()));
}

VirtualPolytope vp_neg(const VirtualPolytope& a) { return VirtualPolytope(a.minus(), a.plus()); }

bool vp_equal(const VirtualPolytope& a, const VirtualPolytope& b)
{
    require_same_dim(a, b);
    return minkowski_sum(a.plus(), b.minus()) == minkowski_sum(b.plus(), a.minus());
}

bool vp_is_zero(const VirtualPolytope& a) { return vp_equal(a, VirtualPolytope::zero(a.dim())); }

VirtualPolytope vp_scale(const VirtualPolytope& a, const Rational& lambda)
{
    if (lambda < 0)
        throw InvalidArgument("virtual scale factor must be nonnegative (use vp_neg), got " + to_string(lambda));
    return VirtualPolytope(scale(a.plus(), lambda), scale(a.minus(), lambda));
}

VirtualPolytope virtual_newton_polytope(const SupportSet& numer, const SupportSet& denom)
{
    if (numer.dim() != denom.dim())
        throw DimensionMismatch("numerator and denominator supports in dimensions " + std::to_string(numer.dim())
                                + " and " + std::to_string(denom.dim()));
    return VirtualPolytope(convex_hull(numer), convex_hull(denom));
}

Rational mixed_volume_virtual(std::span<const VirtualPolytope> bodies)
{
    if (bodies.empty())
        throw InvalidArgument("virtual mixed volume needs at least one body");
    const std::size_t n = bodies.front().dim();
    for (const auto& b : bodies)
        require_same_dim(bodies.front(), b);
    if (bodies.size() != n)
        throw InvalidArgument("virtual mixed volume in R^" + std::to_string(n) + " needs " + std::to_string(n)
                              + " bodies, got " + std::to_string(bodies.size()));

    Rational total = 0;
    std::vector<Polytope> tuple;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        tuple.clear();
        for (std::size_t i = 0; i < n; ++i)
            tuple.push_back(((mask >> i) & 1u) ? bodies[i].plus() : bodies[i].minus());
        const Rational term = mixed_volume(tuple).value;
        if ((n - static_cast<std::size_t>(std::popcount(mask))) % 2 == 1)
            total -= term;
        else
            total += term;
    }
    return total;
}

} // namespace newton_mv
