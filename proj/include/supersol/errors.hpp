#ifndef SUPERSOL_ERRORS_HPP
#define SUPERSOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace supersol {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixing exact and floating-point scalar backends in one operation.
struct BackendMismatchError : Error {
    using Error::Error;
};

// Inversion of a Grassmann number with vanishing body.
struct NotInvertibleError : Error {
    using Error::Error;
};

// Operation whose result leaves the exact scalar field (e.g. exp of a
// nonzero rational body).
struct ExactUnsupportedError : Error {
    using Error::Error;
};

// Even/odd grading violated (odd denominator, odd field where an even one
// is required, ...).
struct ParityError : Error {
    using Error::Error;
};

// Argument of a superfield exponential that is not linear-plus-nilpotent.
struct UnsupportedExponentError : Error {
    using Error::Error;
};

// Internal consistency failure, e.g. nonzero remainder in the exact
// polynomial division of the Yablonskii-Vorob'ev recurrence.
struct IntegrityError : Error {
    using Error::Error;
};

// kappa_i + kappa_j = 0 while forming interaction coefficients.
struct PoleError : Error {
    using Error::Error;
};

// Malformed solution-spec JSON.
struct SchemaError : Error {
    using Error::Error;
};

struct SingularPointError : Error {
    using Error::Error;
};

}  // namespace supersol

#endif
