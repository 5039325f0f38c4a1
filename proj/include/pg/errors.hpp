#pragma once

#include <stdexcept>
#include <string>

namespace pg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A function was evaluated outside its domain (sqrt of a negative value,
/// tan at a pole, log of a non-positive value, ...).
struct DomainError : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

/// W < tol_admissible: the surface normal degenerates (lightlike tangent
/// situation), the point is inadmissible.
struct LightlikeNormal : Error {
    using Error::Error;
};

/// Both chart derivatives x1 and x2 vanish: no admissible chart at the point.
struct InadmissiblePoint : Error {
    using Error::Error;
};

/// |LN - M^2| < tol_nondeg: the second-form Laplacian is undefined.
struct DegenerateSecondForm : Error {
    using Error::Error;
};

struct InsufficientData : Error {
    using Error::Error;
};

struct UnknownCase : Error {
    using Error::Error;
};

/// Structural and numeric null-K verdicts disagree.
struct ClassifierConflict : Error {
    using Error::Error;
};

/// Factor-function grammar error; carries the input offset.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (at offset " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

} // namespace pg
