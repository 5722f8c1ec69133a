#pragma once

#include <stdexcept>
#include <string>

namespace newton_mv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

/// Bad arity, negative scale factor, malformed partition and similar.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Raised by lattice_points() when a (rational) polytope has no integer point.
class NoLatticePoints : public Error {
public:
    using Error::Error;
};

/// A caller-supplied relation (e.g. containment for monotonicity) does not hold.
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

/// The root-count oracle met a non-generic system and needs fresh coefficients.
class DegenerateSystem : public Error {
public:
    using Error::Error;
};

class UnsupportedDimension : public Error {
public:
    using Error::Error;
};

} // namespace newton_mv
