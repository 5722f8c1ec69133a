#include "newton_mv/sparse_solver.hpp"

#include "root_finding.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace newton_mv {

namespace {

// Relative size below which a resultant coefficient is treated as rounding noise.
constexpr double kResultantNoise = 1e-11;
// Sylvester determinants this small against the Hadamard bound at every sample
// mean the resultant vanishes identically.
constexpr double kVanishingResultant = 1e-13;
// Accepted roots closer than this (relative) are flagged as clustered.
constexpr double kClusterWarning = 1e-4;
// |det J| / |J|^2 below this marks a numerically singular root.
constexpr double kSingularJacobian = 1e-10;

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) { return splitmix64(base ^ splitmix64(salt)); }

double relative_distance(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(a)); }

double point_distance(const std::vector<Complex>& a, const std::vector<Complex>& b)
{
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::max(d, relative_distance(a[i], b[i]));
    return d;
}

// Keeps one representative per cluster and records the smallest separation
// between the survivors. Returns false when the root merged into an earlier one.
bool add_distinct(RootCount& out, std::vector<Complex> root, double residual, const OracleConfig& config)
{
    for (const auto& r : out.roots)
        if (point_distance(r, root) <= config.cluster_radius)
            return false;
    for (const auto& r : out.roots)
        out.min_separation = std::min(out.min_separation, point_distance(r, root));
    out.max_residual = std::max(out.max_residual, residual);
    out.roots.push_back(std::move(root));
    out.count = static_cast<int>(out.roots.size());
    return true;
}

void flag_clusters(RootCount& out)
{
    if (out.min_separation < kClusterWarning) {
        out.degenerate = true;
        out.diagnostic = "clustered roots (separation " + std::to_string(out.min_separation) + ")";
    }
}

// Dense coefficients of x^-a y^-b P, i.e. P with its exponents shifted to start at 0.
struct Grid {
    std::size_t deg_x = 0;
    std::size_t deg_y = 0;
    std::vector<Complex> c; // c[i * (deg_y + 1) + j] multiplies x^i y^j

    Complex at(std::size_t i, std::size_t j) const { return c[i * (deg_y + 1) + j]; }

    Grid transposed() const
    {
        Grid t;
        t.deg_x = deg_y;
        t.deg_y = deg_x;
        t.c.assign(c.size(), Complex(0));
        for (std::size_t i = 0; i <= deg_x; ++i)
            for (std::size_t j = 0; j <= deg_y; ++j)
                t.c[j * (t.deg_y + 1) + i] = at(i, j);
        return t;
    }

    // Coefficients in y of P(x, .), lowest degree first.
    std::vector<Complex> slice(Complex x) const
    {
        std::vector<Complex> out(deg_y + 1, Complex(0));
        Complex xp = 1.0;
        for (std::size_t i = 0; i <= deg_x; ++i, xp *= x)
            for (std::size_t j = 0; j <= deg_y; ++j)
                out[j] += at(i, j) * xp;
        return out;
    }
};

Grid to_grid(const LaurentPolynomial& p)
{
    long min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    bool first = true;
    for (const auto& [k, c] : p.terms()) {
        const long kx = k[0].get_si(), ky = k[1].get_si();
        if (first) {
            min_x = max_x = kx;
            min_y = max_y = ky;
            first = false;
        }
        min_x = std::min(min_x, kx);
        max_x = std::max(max_x, kx);
        min_y = std::min(min_y, ky);
        max_y = std::max(max_y, ky);
    }
    Grid g;
    g.deg_x = static_cast<std::size_t>(max_x - min_x);
    g.deg_y = static_cast<std::size_t>(max_y - min_y);
    g.c.assign((g.deg_x + 1) * (g.deg_y + 1), Complex(0));
    for (const auto& [k, c] : p.terms())
        g.c[static_cast<std::size_t>(k[0].get_si() - min_x) * (g.deg_y + 1)
            + static_cast<std::size_t>(k[1].get_si() - min_y)] = c;
    return g;
}

// Nonzero roots of Res_y(p, q) as a polynomial in x. The resultant is sampled
// at roots of unity and interpolated by an inverse DFT.
std::vector<Complex> resultant_roots(const Grid& p, const Grid& q, const OracleConfig& config)
{
    const std::size_t m = p.deg_y;
    const std::size_t l = q.deg_y;
    const std::size_t size = m + l;
    if (size == 0)
        return {};
    const std::size_t degree = l * p.deg_x + m * q.deg_x;
    const std::size_t samples = degree + 1;

    std::vector<Complex> values(samples);
    double largest_value = 0;
    double largest_bound = 0;
    Eigen::MatrixXcd sylvester(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
    for (std::size_t s = 0; s < samples; ++s) {
        const Complex x = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(samples));
        const auto a = p.slice(x);
        const auto b = q.slice(x);
        sylvester.setZero();
        for (std::size_t r = 0; r < l; ++r)
            for (std::size_t j = 0; j <= m; ++j)
                sylvester(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r + m - j)) = a[j];
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t j = 0; j <= l; ++j)
                sylvester(static_cast<Eigen::Index>(l + r), static_cast<Eigen::Index>(r + l - j)) = b[j];
        values[s] = sylvester.partialPivLu().determinant();

        double bound = 1;
        for (Eigen::Index r = 0; r < sylvester.rows(); ++r)
            bound *= sylvester.row(r).norm();
        largest_bound = std::max(largest_bound, bound);
        largest_value = std::max(largest_value, std::abs(values[s]));
    }
    if (largest_value <= kVanishingResultant * largest_bound)
        throw DegenerateSystem("resultant vanishes identically");

    std::vector<Complex> coeffs(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        Complex acc = 0;
        for (std::size_t s = 0; s < samples; ++s)
            acc += values[s]
                   * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>((s * k) % samples)
                                         / static_cast<double>(samples));
        coeffs[k] = acc / static_cast<double>(samples);
    }
    detail::trim_negligible(coeffs, kResultantNoise);

    std::vector<Complex> out;
    for (const auto& x : detail::polynomial_roots(std::move(coeffs)))
        if (std::abs(x) > config.torus_eps && std::isfinite(x.real()) && std::isfinite(x.imag()))
            out.push_back(x);
    return out;
}

std::vector<Complex> slice_roots(const Grid& g, Complex x)
{
    auto coeffs = g.slice(x);
    detail::trim_negligible(coeffs, 1e-14);
    return detail::polynomial_roots(std::move(coeffs));
}

struct Polished {
    std::vector<Complex> z;
    double residual = std::numeric_limits<double>::infinity();
    bool singular = false;
};

double relative_residual(const LaurentPolynomial& p, std::span<const Complex> z)
{
    const double scale = p.magnitude(z);
    return scale == 0 ? std::abs(p.evaluate(z)) : std::abs(p.evaluate(z)) / scale;
}

// Newton iteration on the original Laurent system.
Polished polish(const LaurentPolynomial& p1, const LaurentPolynomial& p2, std::vector<Complex> z,
                const OracleConfig& config)
{
    Polished out;
    for (int it = 0; it < 50; ++it) {
        const Complex f1 = p1.evaluate(z), f2 = p2.evaluate(z);
        const Complex a = p1.derivative(0, z), b = p1.derivative(1, z);
        const Complex c = p2.derivative(0, z), d = p2.derivative(1, z);
        const Complex det = a * d - b * c;
        if (det == Complex(0))
            break;
        const Complex dx = (d * f1 - b * f2) / det;
        const Complex dy = (a * f2 - c * f1) / det;
        z[0] -= dx;
        z[1] -= dy;
        for (const auto& v : z)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) || std::abs(v) < config.torus_eps * 1e-3
                || std::abs(v) > 1e12)
                return out;
        if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(z[0]))
            && std::abs(dy) <= 1e-15 * std::max(1.0, std::abs(z[1])))
            break;
    }
    out.residual = std::max(relative_residual(p1, z), relative_residual(p2, z));
    const Complex a = p1.derivative(0, z), b = p1.derivative(1, z);
    const Complex c = p2.derivative(0, z), d = p2.derivative(1, z);
    const double jnorm = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
    out.singular = jnorm == 0 || std::abs(a * d - b * c) < kSingularJacobian * jnorm;
    out.z = std::move(z);
    return out;
}

int mode_of(const std::vector<TrialRecord>& trials)
{
    std::map<int, int> freq;
    for (const auto& t : trials)
        ++freq[t.observed];
    int best = 0, best_count = -1;
    // Ties go to the larger count: failures of the oracle lose roots, they do not invent them.
    for (const auto& [value, count] : freq)
        if (count >= best_count) {
            best = value;
            best_count = count;
        }
    return best;
}

} // namespace

RootCount count_roots_torus_1d(const LaurentPolynomial& p, const OracleConfig& config)
{
    if (p.dim() != 1)
        throw DimensionMismatch("one-variable oracle got a polynomial in " + std::to_string(p.dim()) + " variables");
    RootCount out;
    if (p.is_monomial())
        return out;

    const long low = p.terms().begin()->first[0].get_si();
    const long high = p.terms().rbegin()->first[0].get_si();
    std::vector<Complex> coeffs(static_cast<std::size_t>(high - low) + 1, Complex(0));
    for (const auto& [k, c] : p.terms())
        coeffs[static_cast<std::size_t>(k[0].get_si() - low)] = c;

    for (auto r : detail::polynomial_roots(coeffs)) {
        if (std::abs(r) <= config.torus_eps)
            continue;
        // A few Newton steps against the original coefficients.
        for (int it = 0; it < 3; ++it) {
            const Complex z[] = {r};
            const Complex d = p.derivative(0, z);
            if (d == Complex(0))
                break;
            r -= p.evaluate(z) / d;
        }
        const Complex z[] = {r};
        const double residual = relative_residual(p, z);
        // Eigenvalues come with multiplicity, so a merge means a multiple root.
        if (residual >= config.residual_tol || std::abs(r) <= config.torus_eps)
            continue;
        if (!add_distinct(out, {r}, residual, config)) {
            out.degenerate = true;
            out.diagnostic = "multiple root near " + std::to_string(r.real()) + "+" + std::to_string(r.imag()) + "i";
        }
    }
    if (!out.degenerate)
        flag_clusters(out);
    return out;
}

RootCount count_roots_torus_2d(const LaurentPolynomial& p1, const LaurentPolynomial& p2, const OracleConfig& config)
{
    if (p1.dim() != 2 || p2.dim() != 2)
        throw DimensionMismatch("two-variable oracle needs polynomials in 2 variables");
    if (p1.is_monomial() || p2.is_monomial())
        throw InvalidArgument("two-variable oracle needs non-monomial polynomials");

    const Grid g1 = to_grid(p1);
    const Grid g2 = to_grid(p2);

    // Candidate points from eliminating y and, symmetrically, x.
    std::vector<std::vector<Complex>> candidates;
    for (const Complex x : resultant_roots(g1, g2, config)) {
        for (const Complex y : slice_roots(g1, x))
            candidates.push_back({x, y});
        for (const Complex y : slice_roots(g2, x))
            candidates.push_back({x, y});
    }
    const Grid t1 = g1.transposed();
    const Grid t2 = g2.transposed();
    for (const Complex y : resultant_roots(t1, t2, config)) {
        for (const Complex x : slice_roots(t1, y))
            candidates.push_back({x, y});
        for (const Complex x : slice_roots(t2, y))
            candidates.push_back({x, y});
    }

    RootCount out;
    bool singular = false;
    for (auto& z : candidates) {
        if (std::abs(z[0]) <= config.torus_eps || std::abs(z[1]) <= config.torus_eps)
            continue;
        Polished p = polish(p1, p2, std::move(z), config);
        if (p.z.empty() || p.residual >= config.residual_tol)
            continue;
        if (std::abs(p.z[0]) <= config.torus_eps || std::abs(p.z[1]) <= config.torus_eps)
            continue;
        const std::size_t before = out.roots.size();
        add_distinct(out, std::move(p.z), p.residual, config);
        singular = singular || (p.singular && out.roots.size() > before);
    }
    flag_clusters(out);
    if (singular) {
        out.degenerate = true;
        out.diagnostic = "numerically singular Jacobian at a root";
    }
    return out;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

Verdict parse_verdict(std::string_view text)
{
    if (text == "pass")
        return Verdict::pass;
    if (text == "fail")
        return Verdict::fail;
    if (text == "inconclusive")
        return Verdict::inconclusive;
    throw InvalidArgument("unknown verdict '" + std::string(text) + "'");
}

VerificationReport verify_bk(std::span<const SupportSet> supports, int trials, const OracleConfig& config)
{
    if (supports.empty())
        throw InvalidArgument("verification needs at least one support");
    const std::size_t n = supports.front().dim();
    if (n != 1 && n != 2)
        throw UnsupportedDimension("root-count oracle supports n = 1 or 2, got n = " + std::to_string(n));
    if (trials < 1)
        throw InvalidArgument("verification needs at least one trial");

    VerificationReport report;
    report.predicted = bk_count(supports);
    const bool has_singleton = std::any_of(supports.begin(), supports.end(),
                                           [](const SupportSet& s) { return s.is_singleton(); });

    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = derive_seed(config.seed, static_cast<std::uint64_t>(t));
        TrialRecord record;
        record.seed = trial_seed;
        if (has_singleton) {
            // A monomial never vanishes on the torus.
            report.trials.push_back(record);
            continue;
        }
        for (int attempt = 0; attempt <= config.max_resamples; ++attempt) {
            const std::uint64_t seed = attempt == 0 ? trial_seed : derive_seed(trial_seed, 0x100u + attempt);
            record.seed = seed;
            record.resamples = attempt;
            try {
                RootCount rc;
                if (n == 1) {
                    rc = count_roots_torus_1d(random_polynomial(supports[0], seed, config.coeff_range), config);
                } else {
                    const auto p1 = random_polynomial(supports[0], derive_seed(seed, 1), config.coeff_range);
                    const auto p2 = random_polynomial(supports[1], derive_seed(seed, 2), config.coeff_range);
                    rc = count_roots_torus_2d(p1, p2, config);
                }
                record.observed = rc.count;
                record.max_residual = rc.max_residual;
                record.min_separation = rc.min_separation;
                record.diagnostic = rc.diagnostic;
                record.inconclusive = rc.degenerate;
            } catch (const DegenerateSystem& e) {
                record.observed = 0;
                record.diagnostic = e.what();
                record.inconclusive = true;
            }
            if (!record.inconclusive)
                break;
        }
        report.trials.push_back(record);
    }

    int inconclusive = 0;
    bool exceeded = false;
    for (const auto& t : report.trials) {
        if (t.observed == report.predicted)
            ++report.matches;
        if (t.inconclusive)
            ++inconclusive;
        exceeded = exceeded || t.observed > report.predicted;
    }
    const int required = static_cast<int>(std::ceil(config.pass_fraction * trials - 1e-9));
    if (exceeded)
        report.verdict = Verdict::fail;
    else if (report.matches >= required)
        report.verdict = Verdict::pass;
    else if (report.matches + inconclusive >= required)
        report.verdict = Verdict::inconclusive;
    else
        report.verdict = Verdict::fail;
    return report;
}

VirtualVerificationReport verify_virtual_index(std::span<const VirtualSupport> supports, int trials,
                                               const OracleConfig& config)
{
    const IndexReport index = virtual_index(supports);
    VirtualVerificationReport out;
    out.predicted = index.predicted;
    out.empirical = 0;
    bool any_fail = false, any_inconclusive = false;
    for (const auto& [mask, term] : index.terms) {
        OracleConfig term_config = config;
        term_config.seed = derive_seed(config.seed, 0x1000u + mask);
        TermVerification tv;
        tv.sign = term.sign;
        tv.report = verify_bk(index_term_supports(supports, mask), trials, term_config);
        tv.empirical = mode_of(tv.report.trials);
        if (tv.sign > 0)
            out.empirical += tv.empirical;
        else
            out.empirical -= tv.empirical;
        any_fail = any_fail || tv.report.verdict == Verdict::fail;
        any_inconclusive = any_inconclusive || tv.report.verdict == Verdict::inconclusive;
        out.terms.emplace(mask, std::move(tv));
    }
    if (any_fail || (!any_inconclusive && out.empirical != out.predicted))
        out.verdict = Verdict::fail;
    else if (any_inconclusive)
        out.verdict = Verdict::inconclusive;
    else
        out.verdict = Verdict::pass;
    return out;
}

} // namespace newton_mv
