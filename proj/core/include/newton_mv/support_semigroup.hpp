#pragma once

// Monomial spaces L_A, identified with their finite supports A in Z^n.
// The product of spaces is the sumset of supports; the intersection index of
// n such spaces is the Bernstein-Kushnirenko count n! V(conv A_1, ..., conv A_n).

#include "newton_mv/lattice_geometry.hpp"

#include <map>
#include <span>
#include <vector>

namespace newton_mv {

/// The virtual subspace L_A / L_B.
struct VirtualSupport {
    SupportSet numer;
    SupportSet denom;

    /// Throws DimensionMismatch when the parts differ in dimension.
    VirtualSupport(SupportSet numer, SupportSet denom);
};

/// Sumset {a + b}: the support of L_A * L_B.
SupportSet product(const SupportSet& a, const SupportSet& b);

/// k-fold sumset; power(A, 0) is {0}.
SupportSet power(const SupportSet& a, unsigned k);

/// All lattice points of conv(A).
SupportSet completion(const SupportSet& a);

/// Same completion, equivalently the same convex hull.
bool equivalent(const SupportSet& a, const SupportSet& b);

/// n! V(conv A_1, ..., conv A_n): the number of solutions in the torus of a
/// generic system with these supports.
Integer bk_count(std::span<const SupportSet> supports);

/// n! Vol(conv A); equals bk_count(A, ..., A).
Integer kushnirenko_count(const SupportSet& a);

struct IndexTerm {
    Integer count; // N(I)
    int sign = 1;  // (-1)^(n - |I|)
};

struct IndexReport {
    Integer predicted;
    /// Keyed by the bitmask of I (bit i set iff i is in I).
    std::map<unsigned, IndexTerm> terms;
};

/// Signed inclusion-exclusion index of n virtual subspaces:
///     sum over I of (-1)^(n-|I|) N(I),  N(I) = bk_count(A_i for i in I, B_j for j not in I)
IndexReport virtual_index(std::span<const VirtualSupport> supports);

/// The supports of the term N(I), in argument order.
std::vector<SupportSet> index_term_supports(std::span<const VirtualSupport> supports, unsigned mask);

} // namespace newton_mv
