#pragma once

#include <stdexcept>
#include <string>

namespace gweyl {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Matrix operands have incompatible shapes.
class ShapeMismatch : public Error {
public:
    using Error::Error;
};

/// The seed mass divides in the construction and must be strictly positive.
class NonPositiveSeedMass : public Error {
public:
    using Error::Error;
};

/// A physical parameter failed validation (negative mass, non-positive hbar/c, ...).
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// The equivalence transform does not exist at vanishing physical mass.
class MasslessLimit : public Error {
public:
    using Error::Error;
};

/// Eigen-decomposition failed to meet the residual tolerance.
class EigenFailure : public Error {
public:
    using Error::Error;
};

/// Requested an operation that needs a diagonalizable matrix.
class NonDiagonalizable : public Error {
public:
    using Error::Error;
};

/// Helicity is undefined for a vanishing momentum direction.
class ZeroMomentumDirection : public Error {
public:
    using Error::Error;
};

/// A seed spinor's momentum violates the required mass shell.
class OffShell : public Error {
public:
    OffShell(const std::string& what, double violation)
        : Error(what), shell_violation(violation) {}
    double shell_violation;
};

}  // namespace gweyl
