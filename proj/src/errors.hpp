#pragma once

#include <stdexcept>

namespace pexeq {

/// Raised when a verification or assertion step fails: an exceptional triple
/// missing its second solution, an oracle mismatch, a quotient that should
/// have been integral but is not. Invalid inputs throw std::invalid_argument
/// instead.
struct VerifyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace pexeq
