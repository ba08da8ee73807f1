#ifndef CQS_ERRORS_HPP
#define CQS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cqs {

/// Caller handed us data outside the documented domain.
struct InvalidInput : std::invalid_argument {
    explicit InvalidInput(const std::string& msg) : std::invalid_argument(msg) {}
};

/// An internal cross-check that must hold for valid inputs failed; this
/// signals a bug, never a user error.
struct VerificationFailure : std::logic_error {
    explicit VerificationFailure(const std::string& msg) : std::logic_error(msg) {}
};

/// The delta oracle could not certify its truncation within the configured
/// ceiling. Never silently wrong: the caller gets this instead of a number.
struct InconclusiveTruncation : std::runtime_error {
    explicit InconclusiveTruncation(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cqs

#endif  // CQS_ERRORS_HPP
