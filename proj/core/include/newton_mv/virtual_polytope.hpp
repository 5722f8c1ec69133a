#pragma once

// Virtual polytopes: formal differences P - Q of convex polytopes, i.e. the
// Grothendieck group of the Minkowski-sum semigroup. Pairs are stored as given;
// two pairs are equal when P1 + Q2 == P2 + Q1.

#include "newton_mv/lattice_geometry.hpp"

#include <span>

namespace newton_mv {

class VirtualPolytope {
public:
    /// Throws DimensionMismatch if the parts differ in dimension.
    VirtualPolytope(Polytope plus, Polytope minus);
    /// The ordinary polytope P, embedded as P - {0}.
    explicit VirtualPolytope(Polytope p);

    static VirtualPolytope zero(std::size_t dim);

    std::size_t dim() const noexcept { return plus_.dim(); }
    const Polytope& plus() const noexcept { return plus_; }
    const Polytope& minus() const noexcept { return minus_; }

    std::string str() const;

private:
    Polytope plus_;
    Polytope minus_;
};

VirtualPolytope vp_add(const VirtualPolytope& a, const VirtualPolytope& b);
VirtualPolytope vp_neg(const VirtualPolytope& a);
bool vp_equal(const VirtualPolytope& a, const VirtualPolytope& b);
bool vp_is_zero(const VirtualPolytope& a);

/// lambda * (P, Q) = (lambda P, lambda Q); negative lambda is rejected, negate explicitly.
VirtualPolytope vp_scale(const VirtualPolytope& a, const Rational& lambda);

/// (conv numer, conv denom): the virtual Newton polytope of a quotient P/Q.
VirtualPolytope virtual_newton_polytope(const SupportSet& numer, const SupportSet& denom);

/// Multilinear extension of the mixed volume to n virtual bodies in R^n:
///     V(P_1 - Q_1, ..., P_n - Q_n) = sum over I of (-1)^(n-|I|) V(P_i for i in I, Q_j for j not in I)
/// The result may be negative.
Rational mixed_volume_virtual(std::span<const VirtualPolytope> bodies);

} // namespace newton_mv
