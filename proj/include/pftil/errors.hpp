#pragma once

#include <stdexcept>
#include <string>

namespace pftil {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the defined domain of an operation (n < 1, p > q, ...).
struct DomainError : Error {
    using Error::Error;
};

// Exact polynomial division left a remainder or a fractional coefficient.
struct NotDivisibleError : Error {
    using Error::Error;
};

// Pfaffian requested for a matrix of odd order.
struct OddOrderError : Error {
    using Error::Error;
};

// Row/column or source index outside the matrix/graph.
struct IndexError : Error {
    using Error::Error;
};

struct VertexNotInGraphError : Error {
    using Error::Error;
};

struct InvalidTilingError : Error {
    using Error::Error;
};

struct ShapeMismatchError : Error {
    using Error::Error;
};

// pf(M_[2i]) = 0 for some leading minor; the decomposition does not exist.
struct SingularPrincipalMinorError : Error {
    using Error::Error;
};

// Index set not of the form [2n] or [2d-2] u {i,j} supported by the
// decomposition shortcut.
struct UnsupportedIndexSetError : Error {
    using Error::Error;
};

// The three constructions of the matrix A disagree.
struct ConstructionMismatchError : Error {
    using Error::Error;
};

// Brute-force enumeration refused without --force.
struct SizeGuardError : Error {
    using Error::Error;
};

// The product form failed at step n: the Pfaffian is not divisible by the
// attempted divisor.  This is a reportable finding, not a bug; callers are
// expected to surface n, the Pfaffian and the divisor.
struct ConjectureViolated : Error {
    ConjectureViolated(int n, std::string pfaffian, std::string divisor)
        : Error("product form fails at n = " + std::to_string(n)),
          n(n),
          pfaffian(std::move(pfaffian)),
          divisor(std::move(divisor)) {}

    int n;
    std::string pfaffian;
    std::string divisor;
};

}  // namespace pftil
