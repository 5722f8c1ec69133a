#include "newton_mv/sparse_solver.hpp"

#include <cmath>
#include <random>

namespace newton_mv {

namespace {

Complex int_power(Complex z, long e)
{
    if (e < 0) {
        z = 1.0 / z;
        e = -e;
    }
    Complex out = 1.0;
    while (e > 0) {
        if (e & 1)
            out *= z;
        z *= z;
        e >>= 1;
    }
    return out;
}

Complex monomial(const LatticePoint& k, std::span<const Complex> z)
{
    Complex out = 1.0;
    for (std::size_t i = 0; i < k.dim(); ++i)
        out *= int_power(z[i], k[i].get_si());
    return out;
}

} // namespace

LaurentPolynomial::LaurentPolynomial(std::size_t dim, std::map<LatticePoint, Complex> terms) : dim_(dim)
{
    for (auto& [k, c] : terms) {
        if (k.dim() != dim)
            throw DimensionMismatch("exponent " + k.str() + " does not have dimension " + std::to_string(dim));
        if (c != Complex(0))
            terms_.emplace(k, c);
    }
    if (terms_.empty())
        throw EmptyInput("Laurent polynomial has no nonzero coefficient");
}

SupportSet LaurentPolynomial::support() const
{
    std::vector<LatticePoint> pts;
    pts.reserve(terms_.size());
    for (const auto& [k, c] : terms_)
        pts.push_back(k);
    return SupportSet(dim_, std::move(pts));
}

Complex LaurentPolynomial::evaluate(std::span<const Complex> z) const
{
    Complex acc = 0;
    for (const auto& [k, c] : terms_)
        acc += c * monomial(k, z);
    return acc;
}

Complex LaurentPolynomial::derivative(std::size_t var, std::span<const Complex> z) const
{
    Complex acc = 0;
    for (const auto& [k, c] : terms_) {
        const long e = k[var].get_si();
        if (e != 0)
            acc += c * static_cast<double>(e) * monomial(k, z) / z[var];
    }
    return acc;
}

double LaurentPolynomial::magnitude(std::span<const Complex> z) const
{
    double acc = 0;
    for (const auto& [k, c] : terms_)
        acc += std::abs(c) * std::abs(monomial(k, z));
    return acc;
}

LaurentPolynomial random_polynomial(const SupportSet& a, std::uint64_t seed, int coeff_range)
{
    if (coeff_range < 1)
        throw InvalidArgument("coefficient range must be at least 1, got " + std::to_string(coeff_range));
    std::mt19937_64 engine(seed);
    // Uniform on [-range, range] \ {0}: draw from 2*range values and skip zero.
    std::uniform_int_distribution<int> draw(-coeff_range, coeff_range - 1);
    auto nonzero = [&] {
        const int v = draw(engine);
        return static_cast<double>(v >= 0 ? v + 1 : v);
    };
    std::map<LatticePoint, Complex> terms;
    for (const auto& p : a.points()) {
        const double re = nonzero();
        const double im = nonzero();
        terms.emplace(p, Complex(re, im));
    }
    return LaurentPolynomial(a.dim(), std::move(terms));
}

} // namespace newton_mv
