#include "newton_mv/support_semigroup.hpp"

#include "newton_mv/mixed_volume.hpp"

#include <bit>

namespace newton_mv {

VirtualSupport::VirtualSupport(SupportSet n, SupportSet d) : numer(std::move(n)), denom(std::move(d))
{
    if (numer.dim() != denom.dim())
        throw DimensionMismatch("virtual support parts in dimensions " + std::to_string(numer.dim()) + " and "
                                + std::to_string(denom.dim()));
}

SupportSet product(const SupportSet& a, const SupportSet& b)
{
    if (a.dim() != b.dim())
        throw DimensionMismatch("product of supports in dimensions " + std::to_string(a.dim()) + " and "
                                + std::to_string(b.dim()));
    std::vector<LatticePoint> sums;
    sums.reserve(a.size() * b.size());
    for (const auto& p : a.points())
        for (const auto& q : b.points())
            sums.push_back(p + q);
    return SupportSet(a.dim(), std::move(sums));
}

SupportSet power(const SupportSet& a, unsigned k)
{
    SupportSet out(a.dim(), {LatticePoint(std::vector<Integer>(a.dim(), Integer(0)))});
    for (unsigned i = 0; i < k; ++i)
        out = product(out, a);
    return out;
}

SupportSet completion(const SupportSet& a) { return lattice_points(convex_hull(a)); }

bool equivalent(const SupportSet& a, const SupportSet& b)
{
    if (a.dim() != b.dim())
        throw DimensionMismatch("comparing supports in dimensions " + std::to_string(a.dim()) + " and "
                                + std::to_string(b.dim()));
    return convex_hull(a) == convex_hull(b);
}

Integer bk_count(std::span<const SupportSet> supports)
{
    std::vector<Polytope> hulls;
    hulls.reserve(supports.size());
    for (const auto& s : supports)
        hulls.push_back(convex_hull(s));
    return *mixed_volume(hulls).normalized;
}

Integer kushnirenko_count(const SupportSet& a)
{
    const Rational v = volume(convex_hull(a)) * factorial(static_cast<unsigned>(a.dim()));
    return v.get_num();
}

std::vector<SupportSet> index_term_supports(std::span<const VirtualSupport> supports, unsigned mask)
{
    std::vector<SupportSet> tuple;
    tuple.reserve(supports.size());
    for (std::size_t i = 0; i < supports.size(); ++i)
        tuple.push_back(((mask >> i) & 1u) ? supports[i].numer : supports[i].denom);
    return tuple;
}

IndexReport virtual_index(std::span<const VirtualSupport> supports)
{
    if (supports.empty())
        throw InvalidArgument("virtual index needs at least one virtual support");
    const std::size_t n = supports.front().numer.dim();
    for (const auto& s : supports)
        if (s.numer.dim() != n)
            throw DimensionMismatch("virtual supports in dimensions " + std::to_string(n) + " and "
                                    + std::to_string(s.numer.dim()));
    if (supports.size() != n)
        throw InvalidArgument("virtual index in Z^" + std::to_string(n) + " needs " + std::to_string(n)
                              + " virtual supports, got " + std::to_string(supports.size()));

    IndexReport report;
    report.predicted = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        IndexTerm term;
        term.count = bk_count(index_term_supports(supports, mask));
        term.sign = (n - static_cast<std::size_t>(std::popcount(mask))) % 2 == 1 ? -1 : 1;
        if (term.sign > 0)
            report.predicted += term.count;
        else
            report.predicted -= term.count;
        report.terms.emplace(mask, std::move(term));
    }
    return report;
}

} // namespace newton_mv
