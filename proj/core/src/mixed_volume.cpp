#include "newton_mv/mixed_volume.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <bit>
#include <map>
#include <numeric>

namespace newton_mv {

namespace {

using Quad = boost::multiprecision::cpp_bin_float_quad;

void check_tuple(std::span<const Polytope> bodies)
{
    if (bodies.empty())
        throw InvalidArgument("mixed volume needs at least one body");
    const std::size_t n = bodies.front().dim();
    for (const auto& b : bodies)
        if (b.dim() != n)
            throw DimensionMismatch("mixed volume arguments live in dimensions " + std::to_string(n) + " and "
                                    + std::to_string(b.dim()));
    if (bodies.size() != n)
        throw InvalidArgument("mixed volume in R^" + std::to_string(n) + " needs " + std::to_string(n)
                              + " bodies, got " + std::to_string(bodies.size()));
}

Quad to_quad(const Rational& q)
{
    return Quad(q.get_num().get_str()) / Quad(q.get_den().get_str());
}

std::vector<Polytope> repeat(std::span<const Polytope> repeated, std::span<const unsigned> counts,
                             std::span<const Polytope> fixed)
{
    std::vector<Polytope> out;
    for (std::size_t j = 0; j < repeated.size(); ++j)
        for (unsigned c = 0; c < counts[j]; ++c)
            out.push_back(repeated[j]);
    out.insert(out.end(), fixed.begin(), fixed.end());
    return out;
}

} // namespace

MixedVolumeResult mixed_volume(std::span<const Polytope> bodies)
{
    check_tuple(bodies);
    const std::size_t n = bodies.size();

    // Equal arguments give equal partial sums, so key subsets by the multiset
    // of distinct bodies they contain.
    std::vector<std::size_t> body_id(n);
    std::vector<const Polytope*> distinct;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t id = 0;
        while (id < distinct.size() && !(*distinct[id] == bodies[i]))
            ++id;
        if (id == distinct.size())
            distinct.push_back(&bodies[i]);
        body_id[i] = id;
    }

    std::map<std::vector<unsigned>, Polytope> sums;
    std::map<std::vector<unsigned>, Rational> volumes;
    Rational total = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<unsigned> key(distinct.size(), 0);
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1u)
                ++key[body_id[i]];

        auto vol = volumes.find(key);
        if (vol == volumes.end()) {
            // Build the sum from the one with a single copy of the last body removed.
            std::size_t last = n;
            while (!((mask >> (last - 1)) & 1u))
                --last;
            const std::size_t drop = body_id[last - 1];
            std::vector<unsigned> prev = key;
            --prev[drop];
            const bool empty_prev = std::accumulate(prev.begin(), prev.end(), 0u) == 0;
            Polytope sum = empty_prev ? *distinct[drop] : minkowski_sum(sums.at(prev), *distinct[drop]);
            vol = volumes.emplace(key, volume(sum)).first;
            sums.emplace(key, std::move(sum));
        }
        const bool negative = (n - static_cast<std::size_t>(std::popcount(mask))) % 2 == 1;
        if (negative)
            total -= vol->second;
        else
            total += vol->second;
    }

    MixedVolumeResult out;
    out.value = total / factorial(static_cast<unsigned>(n));
    bool lattice = true;
    for (const auto& b : bodies)
        lattice = lattice && b.is_lattice();
    if (lattice) {
        if (!is_integer(total) || total < 0)
            throw std::logic_error("normalized mixed volume of lattice polytopes is " + to_string(total)
                                   + ", expected a nonnegative integer");
        out.normalized = total.get_num();
    }
    return out;
}

bool check_nonnegativity(std::span<const Polytope> bodies) { return mixed_volume(bodies).value >= 0; }

bool check_monotonicity(std::span<const Polytope> smaller, std::span<const Polytope> larger)
{
    if (smaller.size() != larger.size())
        throw InvalidArgument("monotonicity check needs tuples of equal length");
    for (std::size_t i = 0; i < smaller.size(); ++i)
        if (!is_subset(smaller[i], larger[i]))
            throw PreconditionViolated("argument " + std::to_string(i) + ": " + smaller[i].str()
                                       + " is not contained in " + larger[i].str());
    return mixed_volume(smaller).value <= mixed_volume(larger).value;
}

AlexandrovFenchelCheck check_alexandrov_fenchel(std::span<const Polytope> bodies)
{
    if (bodies.size() < 2)
        throw InvalidArgument("Alexandrov-Fenchel needs at least two bodies");
    check_tuple(bodies);
    std::vector<Polytope> first(bodies.begin(), bodies.end());
    std::vector<Polytope> second(bodies.begin(), bodies.end());
    first[1] = bodies[0];
    second[0] = bodies[1];

    AlexandrovFenchelCheck out;
    const Rational mixed = mixed_volume(bodies).value;
    out.lhs = mixed * mixed;
    out.rhs = mixed_volume(first).value * mixed_volume(second).value;
    out.holds = out.lhs >= out.rhs;
    return out;
}

bool check_repetition_inequality(std::span<const unsigned> partition, std::span<const Polytope> repeated,
                                 std::span<const Polytope> fixed)
{
    if (partition.size() != repeated.size() || partition.empty())
        throw InvalidArgument("partition must have one positive part per repeated body");
    unsigned m = 0;
    for (unsigned k : partition) {
        if (k == 0)
            throw InvalidArgument("partition parts must be positive");
        m += k;
    }
    const std::size_t n = m + fixed.size();
    if (m < 2 || (!repeated.empty() && n != repeated.front().dim()))
        throw InvalidArgument("repetition inequality needs 2 <= m <= n and m + |fixed| == n");

    const Rational left = pow(mixed_volume(repeat(repeated, partition, fixed)).value, m);
    Rational right = 1;
    for (std::size_t j = 0; j < repeated.size(); ++j) {
        const unsigned all_m[] = {m};
        const Polytope single[] = {repeated[j]};
        right *= pow(mixed_volume(repeat(single, all_m, fixed)).value, partition[j]);
    }
    return left >= right;
}

BrunnMinkowskiCheck check_brunn_minkowski(const Polytope& a, const Polytope& b, std::span<const Polytope> fixed)
{
    const std::size_t n = a.dim();
    if (b.dim() != n)
        throw DimensionMismatch("Brunn-Minkowski bodies live in different dimensions");
    if (fixed.size() + 2 > n)
        throw InvalidArgument("Brunn-Minkowski needs 2 <= m <= n, i.e. at most n - 2 fixed bodies");
    const unsigned m = static_cast<unsigned>(n - fixed.size());
    const unsigned counts[] = {m};

    auto repeated_volume = [&](const Polytope& p) {
        const Polytope single[] = {p};
        return mixed_volume(repeat(single, counts, fixed)).value;
    };
    const Rational va = repeated_volume(a);
    const Rational vb = repeated_volume(b);
    const Rational vab = repeated_volume(minkowski_sum(a, b));

    const Quad inv_m = Quad(1) / Quad(m);
    const Quad lhs = boost::multiprecision::pow(to_quad(va), inv_m) + boost::multiprecision::pow(to_quad(vb), inv_m);
    const Quad rhs = boost::multiprecision::pow(to_quad(vab), inv_m);

    BrunnMinkowskiCheck out;
    out.lhs = static_cast<long double>(lhs);
    out.rhs = static_cast<long double>(rhs);
    const Quad gap = abs(lhs - rhs);
    const Quad magnitude = rhs > lhs ? rhs : lhs;
    out.near_tie = gap <= Quad(kBrunnMinkowskiRelTol) * magnitude;

    if (m == 2) {
        // sqrt(x) + sqrt(y) <= sqrt(z)  <=>  z - x - y >= 0  and  4xy <= (z - x - y)^2
        const Rational slack = vab - va - vb;
        out.exact = true;
        out.holds = slack >= 0 && 4 * va * vb <= slack * slack;
    } else {
        out.holds = lhs <= rhs || out.near_tie;
    }
    return out;
}

} // namespace newton_mv
