#pragma once

// Mixed volume of n polytopes in R^n, computed from the volume polynomial by
// inclusion-exclusion over Minkowski sums:
//
//     n! V(P_1, ..., P_n) = sum over nonempty I of (-1)^(n-|I|) Vol(sum_{i in I} P_i)
//
// plus checkers for the classical mixed-volume inequalities.

#include "newton_mv/lattice_geometry.hpp"

#include <optional>
#include <span>
#include <vector>

namespace newton_mv {

struct MixedVolumeResult {
    Rational value;                    // V(P_1, ..., P_n)
    std::optional<Integer> normalized; // n! * V, set when every input is a lattice polytope

    friend bool operator==(const MixedVolumeResult&, const MixedVolumeResult&) = default;
};

/// Throws InvalidArgument when bodies.size() is not the ambient dimension,
/// DimensionMismatch when the bodies disagree on it.
MixedVolumeResult mixed_volume(std::span<const Polytope> bodies);

/// V(P_1,...,P_n) >= 0.
bool check_nonnegativity(std::span<const Polytope> bodies);

/// V(smaller) <= V(larger); throws PreconditionViolated unless smaller[i] is
/// contained in larger[i] for every i.
bool check_monotonicity(std::span<const Polytope> smaller, std::span<const Polytope> larger);

struct AlexandrovFenchelCheck {
    Rational lhs; // V(P1, P2, P3, ..., Pn)^2
    Rational rhs; // V(P1, P1, P3, ..., Pn) * V(P2, P2, P3, ..., Pn)
    bool holds = false;
};

AlexandrovFenchelCheck check_alexandrov_fenchel(std::span<const Polytope> bodies);

/// V(k_1*P_1, ..., k_r*P_r, F...)^m >= prod_j V(m*P_j, F...)^{k_j} with
/// m = k_1 + ... + k_r, where `repeated` holds P_1..P_r and `fixed` holds the
/// remaining n - m bodies. Exact; no roots are taken.
bool check_repetition_inequality(std::span<const unsigned> partition, std::span<const Polytope> repeated,
                                 std::span<const Polytope> fixed);

struct BrunnMinkowskiCheck {
    bool holds = false;
    bool exact = false;    // decided by exact integer comparison (m == 2)
    bool near_tie = false; // floating comparison within tolerance; flagged for review
    long double lhs = 0;   // F(A) + F(B)
    long double rhs = 0;   // F(A + B)
};

inline constexpr long double kBrunnMinkowskiRelTol = 1e-12L;

/// F(A) + F(B) <= F(A + B) with F(P) = V(m*P, F...)^{1/m}, m = n - fixed.size().
BrunnMinkowskiCheck check_brunn_minkowski(const Polytope& a, const Polytope& b, std::span<const Polytope> fixed);

} // namespace newton_mv
