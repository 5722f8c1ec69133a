#pragma once

// Exact polytope primitives over arbitrary-precision rationals: convex hulls,
// Minkowski sums, nonnegative scaling, volume and lattice-point enumeration.
//
// Everything here uses exact arithmetic. Hulls are built incrementally with
// integer orientation determinants; there are no floating-point predicates. Lower-dimensional polytopes are ordinary values with volume 0.

#include "newton_mv/errors.hpp"
#include "newton_mv/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace newton_mv {

inline constexpr std::size_t kDefaultMaxDimension = 6;

/// Upper bound on the ambient dimension accepted by every constructor below.
/// Thread-safe to read; set it once at startup if the default is too small.
std::size_t max_dimension() noexcept;
void set_max_dimension(std::size_t n);

/// An exponent vector in Z^n.
class LatticePoint {
public:
    LatticePoint() = default;
    explicit LatticePoint(std::vector<Integer> coords) : coords_(std::move(coords)) {}
    LatticePoint(std::initializer_list<long> coords);

    std::size_t dim() const noexcept { return coords_.size(); }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Integer>& coords() const noexcept { return coords_; }

    LatticePoint operator+(const LatticePoint& other) const;
    LatticePoint operator-(const LatticePoint& other) const;

    friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.coords_ == b.coords_; }
    friend bool operator<(const LatticePoint& a, const LatticePoint& b) { return a.coords_ < b.coords_; }

    std::string str() const;

private:
    std::vector<Integer> coords_;
};

/// A point of Q^n; fractions are kept in lowest terms with positive denominators.
class RationalPoint {
public:
    RationalPoint() = default;
    explicit RationalPoint(std::vector<Rational> coords);
    explicit RationalPoint(const LatticePoint& p);
    RationalPoint(std::initializer_list<Rational> coords);

    std::size_t dim() const noexcept { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Rational>& coords() const noexcept { return coords_; }

    bool is_integral() const;
    /// Throws InvalidArgument if some coordinate is not an integer.
    LatticePoint to_lattice() const;

    RationalPoint operator+(const RationalPoint& other) const;

    friend bool operator==(const RationalPoint& a, const RationalPoint& b) { return a.coords_ == b.coords_; }
    friend bool operator<(const RationalPoint& a, const RationalPoint& b) { return a.coords_ < b.coords_; }

    std::string str() const;

private:
    std::vector<Rational> coords_;
};

/// A nonempty finite subset A of Z^n, deduplicated and sorted lexicographically.
class SupportSet {
public:
    /// Throws EmptyInput, DimensionMismatch, or UnsupportedDimension.
    SupportSet(std::size_t dim, std::vector<LatticePoint> points);
    /// Dimension taken from the first point.
    explicit SupportSet(std::vector<LatticePoint> points);
    SupportSet(std::initializer_list<std::initializer_list<long>> points);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<LatticePoint>& points() const noexcept { return points_; }
    bool contains(const LatticePoint& p) const;
    bool is_singleton() const noexcept { return points_.size() == 1; }

    friend bool operator==(const SupportSet& a, const SupportSet& b) = default;

    std::string str() const;

private:
    void normalize();

    std::size_t dim_ = 0;
    std::vector<LatticePoint> points_;
};

/// A convex polytope stored by its vertices in lexicographic order, so two
/// polytopes are equal as point sets iff their vertex lists are identical.
/// Only the operations below can produce one.
class Polytope {
public:
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<RationalPoint>& vertices() const noexcept { return vertices_; }
    bool is_point() const noexcept { return vertices_.size() == 1; }
    /// All vertices have integer coordinates.
    bool is_lattice() const;

    friend bool operator==(const Polytope& a, const Polytope& b) = default;

    std::string str() const;

private:
    Polytope(std::size_t dim, std::vector<RationalPoint> vertices)
        : dim_(dim), vertices_(std::move(vertices)) {}

    friend Polytope convex_hull(std::span<const RationalPoint> points);
    friend Polytope scale(const Polytope& p, const Rational& lambda);

    std::size_t dim_ = 0;
    std::vector<RationalPoint> vertices_;
};

Polytope convex_hull(std::span<const RationalPoint> points);
Polytope convex_hull(const SupportSet& support);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

/// lambda * P for lambda >= 0; lambda == 0 collapses to the origin.
/// Throws InvalidArgument for negative lambda.
Polytope scale(const Polytope& p, const Rational& lambda);

/// Translate by an integer vector.
Polytope translate(const Polytope& p, const LatticePoint& t);

/// Euclidean n-volume; 0 for polytopes that are not full-dimensional.
Rational volume(const Polytope& p);

/// All integer points of P. Throws NoLatticePoints if there are none.
SupportSet lattice_points(const Polytope& p);

bool polytope_equal(const Polytope& p, const Polytope& q);
bool contains(const Polytope& p, const RationalPoint& x);
/// Every vertex of `inner` lies in `outer`.
bool is_subset(const Polytope& inner, const Polytope& outer);
std::size_t affine_dim(const Polytope& p);

} // namespace newton_mv
