#pragma once

#include <stdexcept>

namespace ratdist {

/// A mathematical precondition was violated (off-curve point, excluded
/// parameter, singular matrix, ...).
struct PreconditionError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Malformed textual input (rationals, matrices, points).
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace ratdist
