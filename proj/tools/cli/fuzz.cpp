#include "fuzz.hpp"

#include <newton_mv/mixed_volume.hpp>
#include <newton_mv/sampling.hpp>
#include <newton_mv/support_semigroup.hpp>
#include <newton_mv/virtual_polytope.hpp>

#include <random>
#include <sstream>

namespace newton_mv::cli {

namespace {

constexpr std::size_t kMaxReported = 5;

std::string join(std::span<const SupportSet> sets)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < sets.size(); ++i)
        out << (i ? ", " : "") << sets[i].str();
    return out.str();
}

std::string join(std::span<const Polytope> bodies)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < bodies.size(); ++i)
        out << (i ? ", " : "") << bodies[i].str();
    return out.str();
}

struct Fuzzer {
    const FuzzOptions& opt;
    std::mt19937_64 rng;
    FuzzOutcome outcome;

    void violation(int instance, const std::string& what)
    {
        ++outcome.violations;
        if (outcome.failures.size() < kMaxReported)
            outcome.failures.push_back("instance " + std::to_string(instance) + ": " + what);
    }

    Polytope polytope() { return random_lattice_polytope(rng, opt.dim, opt.max_points, opt.max_coord); }
    SupportSet support(std::size_t min_points = 1)
    {
        return random_support(rng, opt.dim, opt.max_points, opt.max_coord, min_points);
    }

    void af(int i)
    {
        std::vector<Polytope> bodies;
        for (std::size_t k = 0; k < opt.dim; ++k)
            bodies.push_back(polytope());
        const auto check = check_alexandrov_fenchel(bodies);
        if (!check.holds)
            violation(i, "V^2 = " + to_string(check.lhs) + " < " + to_string(check.rhs) + " for " + join(bodies));
    }

    void bm(int i)
    {
        const Polytope a = polytope();
        const Polytope b = polytope();
        const auto check = check_brunn_minkowski(a, b, {});
        if (check.near_tie)
            ++outcome.near_ties;
        if (!check.holds) {
            std::ostringstream msg;
            msg.precision(20);
            msg << "F(A) + F(B) = " << check.lhs << " > F(A + B) = " << check.rhs << " for " << a.str() << ", "
                << b.str();
            violation(i, msg.str());
        }
    }

    void multilinearity(int i)
    {
        std::vector<SupportSet> rest;
        for (std::size_t k = 1; k < opt.dim; ++k)
            rest.push_back(support());
        const SupportSet a1 = support();
        const SupportSet a2 = support();
        auto count_with = [&](const SupportSet& first) {
            std::vector<SupportSet> all{first};
            all.insert(all.end(), rest.begin(), rest.end());
            return bk_count(all);
        };
        const Integer sum = count_with(product(a1, a2));
        const Integer parts = count_with(a1) + count_with(a2);
        if (sum != parts)
            violation(i, "[A'A'', ...] = " + sum.get_str() + " but [A', ...] + [A'', ...] = " + parts.get_str()
                             + " for A' = " + a1.str() + ", A'' = " + a2.str() + ", rest = " + join(rest));
        for (unsigned k : {2u, 3u}) {
            const Integer lhs = count_with(power(a1, k));
            const Integer rhs = k * count_with(a1);
            if (lhs != rhs)
                violation(i, "power rule k = " + std::to_string(k) + ": " + lhs.get_str() + " != " + rhs.get_str()
                                 + " for A = " + a1.str() + ", rest = " + join(rest));
        }
    }

    void cancellation(int i)
    {
        const Polytope p = polytope();
        const Polytope r = polytope();
        // Alternate positive (P == Q) and negative (fresh Q) cases.
        const Polytope q = i % 2 == 0 ? p : polytope();
        const bool sums_equal = polytope_equal(minkowski_sum(p, r), minkowski_sum(q, r));
        if (sums_equal != polytope_equal(p, q))
            violation(i, std::string(sums_equal ? "P + R == Q + R but P != Q" : "P == Q but P + R != Q + R")
                             + " for P = " + p.str() + ", Q = " + q.str() + ", R = " + r.str());
    }

    void rational_bk(int i)
    {
        std::vector<VirtualSupport> vs;
        std::vector<VirtualPolytope> bodies;
        for (std::size_t k = 0; k < opt.dim; ++k) {
            vs.emplace_back(support(), support());
            bodies.push_back(virtual_newton_polytope(vs.back().numer, vs.back().denom));
        }
        const Integer predicted = virtual_index(vs).predicted;
        const Rational expected = Rational(factorial(static_cast<unsigned>(opt.dim))) * mixed_volume_virtual(bodies);
        if (Rational(predicted) != expected) {
            std::ostringstream msg;
            msg << "index " << predicted.get_str() << " != n!V = " << to_string(expected) << " for";
            for (const auto& v : vs)
                msg << " " << v.numer.str() << "/" << v.denom.str();
            violation(i, msg.str());
        }
    }
};

} // namespace

std::string property_name(FuzzProperty p)
{
    switch (p) {
    case FuzzProperty::af:
        return "af";
    case FuzzProperty::bm:
        return "bm";
    case FuzzProperty::multilinearity:
        return "multilinearity";
    case FuzzProperty::cancellation:
        return "cancellation";
    case FuzzProperty::rational_bk:
        return "rational-bk";
    }
    return "?";
}

FuzzProperty parse_fuzz_property(std::string_view name)
{
    for (auto p : {FuzzProperty::af, FuzzProperty::bm, FuzzProperty::multilinearity, FuzzProperty::cancellation,
                   FuzzProperty::rational_bk})
        if (property_name(p) == name)
            return p;
    throw InvalidArgument("unknown fuzz property '" + std::string(name) + "'");
}

FuzzOutcome run_fuzz(const FuzzOptions& options)
{
    if (options.dim < 1 || options.dim > max_dimension())
        throw InvalidArgument("fuzz dimension must lie in [1, " + std::to_string(max_dimension()) + "]");
    if ((options.property == FuzzProperty::af || options.property == FuzzProperty::bm) && options.dim < 2)
        throw InvalidArgument(property_name(options.property) + " needs dimension at least 2");
    if (options.count < 0 || options.max_coord < 0 || options.max_points < 1)
        throw InvalidArgument("fuzz count, max-coord and max-points must be nonnegative (max-points positive)");

    Fuzzer f{options, std::mt19937_64(options.seed), {}};
    for (int i = 0; i < options.count; ++i) {
        switch (options.property) {
        case FuzzProperty::af:
            f.af(i);
            break;
        case FuzzProperty::bm:
            f.bm(i);
            break;
        case FuzzProperty::multilinearity:
            f.multilinearity(i);
            break;
        case FuzzProperty::cancellation:
            f.cancellation(i);
            break;
        case FuzzProperty::rational_bk:
            f.rational_bk(i);
            break;
        }
        ++f.outcome.instances;
    }
    return f.outcome;
}

} // namespace newton_mv::cli
