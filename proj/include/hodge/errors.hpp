#pragma once

#include <stdexcept>
#include <string>

namespace hodge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Resource / domain errors raised by the factorization oracle.
struct BudgetExceeded : Error {
    using Error::Error;
};
struct InvalidDomain : Error {
    using Error::Error;
};

// Cache file problems (bad header, wrong normalization tag, conflicting values).
struct CacheFormatError : Error {
    using Error::Error;
};
struct CacheIncomplete : Error {
    using Error::Error;
};

// Interpolation layer.
struct InvalidRange : Error {
    using Error::Error;
};
struct SingularSystem : Error {
    using Error::Error;
};
struct PolynomialityViolation : Error {
    using Error::Error;
};
struct DimensionViolation : Error {
    using Error::Error;
};
struct MissingWittenEntries : Error {
    using Error::Error;
};

// Polynomial / series algebra.
struct NotSymmetric : Error {
    using Error::Error;
};
struct NotDivisible : Error {
    using Error::Error;
};
struct NotInvertible : Error {
    using Error::Error;
};
struct TruncationTooLow : Error {
    using Error::Error;
};

}  // namespace hodge
