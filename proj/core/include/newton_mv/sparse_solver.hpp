#pragma once

// Independent root-counting oracle for sparse Laurent systems in (C*)^1 and
// (C*)^2. It never touches the mixed-volume code: one variable goes through
// companion-matrix eigenvalues, two variables through Sylvester resultants
// followed by Newton polishing on the original system.

#include "newton_mv/lattice_geometry.hpp"
#include "newton_mv/support_semigroup.hpp"

#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace newton_mv {

using Complex = std::complex<double>;

/// Numerical cutoffs and the genericity protocol.
struct OracleConfig {
    double torus_eps = 1e-8;      // |coordinate| must exceed this to lie in the torus
    double residual_tol = 1e-6;   // max relative residual of an accepted root
    double cluster_radius = 1e-6; // roots closer than this (relative) are one point
    int coeff_range = 50;         // coefficient parts drawn from [-range, range] \ {0}
    int max_resamples = 5;        // fresh coefficients tried per degenerate trial
    double pass_fraction = 0.8;   // fraction of trials that must hit the prediction
    std::uint64_t seed = 0x5eed5eedULL;
};

/// sum c_k z^k with complex double coefficients; zero coefficients are dropped.
class LaurentPolynomial {
public:
    /// Throws EmptyInput when every coefficient is zero, DimensionMismatch on
    /// exponents of the wrong length.
    LaurentPolynomial(std::size_t dim, std::map<LatticePoint, Complex> terms);

    std::size_t dim() const noexcept { return dim_; }
    const std::map<LatticePoint, Complex>& terms() const noexcept { return terms_; }
    SupportSet support() const;
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    Complex evaluate(std::span<const Complex> z) const;
    Complex derivative(std::size_t var, std::span<const Complex> z) const;
    /// sum |c_k| |z^k|, the natural scale for residuals at z.
    double magnitude(std::span<const Complex> z) const;

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
    std::size_t dim_;
    std::map<LatticePoint, Complex> terms_;
};

/// Independent nonzero coefficients with integer real and imaginary parts
/// uniform in [-coeff_range, coeff_range] \ {0}. Deterministic in `seed`.
/// Throws InvalidArgument when coeff_range < 1.
LaurentPolynomial random_polynomial(const SupportSet& a, std::uint64_t seed, int coeff_range);

struct RootCount {
    int count = 0;
    double max_residual = 0; // largest relative residual among counted roots
    double min_separation = std::numeric_limits<double>::infinity();
    bool degenerate = false; // near-multiple roots or other non-generic symptoms
    std::string diagnostic;
    std::vector<std::vector<Complex>> roots;
};

/// Distinct roots in C* of a univariate Laurent polynomial. A monomial has none.
RootCount count_roots_torus_1d(const LaurentPolynomial& p, const OracleConfig& config = {});

/// Distinct common roots in (C*)^2. Throws DegenerateSystem when a resultant
/// vanishes identically, InvalidArgument when either input is a monomial.
RootCount count_roots_torus_2d(const LaurentPolynomial& p1, const LaurentPolynomial& p2,
                               const OracleConfig& config = {});

enum class Verdict { pass, fail, inconclusive };

std::string to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

struct TrialRecord {
    std::uint64_t seed = 0; // seed of the coefficients actually used
    int observed = 0;
    int resamples = 0;
    double max_residual = 0;
    double min_separation = std::numeric_limits<double>::infinity();
    bool inconclusive = false;
    std::string diagnostic;

    friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct VerificationReport {
    Integer predicted;
    std::vector<TrialRecord> trials;
    int matches = 0;
    Verdict verdict = Verdict::inconclusive;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Runs `trials` random systems with the given supports (n = 1 or 2) through
/// the oracle. Pass iff at least pass_fraction of the trials observe exactly
/// bk_count(supports) and no trial observes more.
VerificationReport verify_bk(std::span<const SupportSet> supports, int trials, const OracleConfig& config = {});

struct TermVerification {
    int sign = 1;
    Integer empirical; // most frequent observed count
    VerificationReport report;

    friend bool operator==(const TermVerification&, const TermVerification&) = default;
};

struct VirtualVerificationReport {
    Integer predicted;
    Integer empirical;
    std::map<unsigned, TermVerification> terms;
    Verdict verdict = Verdict::inconclusive;

    friend bool operator==(const VirtualVerificationReport&, const VirtualVerificationReport&) = default;
};

/// Estimates every N(I) of virtual_index() empirically and compares the signed sum.
VirtualVerificationReport verify_virtual_index(std::span<const VirtualSupport> supports, int trials,
                                               const OracleConfig& config = {});

} // namespace newton_mv
