#pragma once

#include <stdexcept>
#include <string>

namespace bidisc {

/// A forward shift would push a coefficient past a hard degree cap.
/// Shifts never truncate silently; hitting the cap is always an error.
struct CapExceededError : std::runtime_error {
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// A reconstructed bidisc grid failed the constant-antidiagonal self-check.
struct NotSymmetricError : std::runtime_error {
    explicit NotSymmetricError(const std::string& what) : std::runtime_error(what) {}
};

/// Orthonormalization received no input, or every input fell below the rank tolerance.
struct EmptySpanError : std::runtime_error {
    explicit EmptySpanError(const std::string& what) : std::runtime_error(what) {}
};

/// Coefficient vector length does not match the rank of a frame.
struct RankMismatchError : std::runtime_error {
    explicit RankMismatchError(const std::string& what) : std::runtime_error(what) {}
};

/// A subspace chain failed its containment requirement.
struct ChainBrokenError : std::runtime_error {
    explicit ChainBrokenError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation with checked premises was invoked on invalid input.
/// `failed_check` names the premise that did not hold.
struct PremiseViolatedError : std::runtime_error {
    std::string failed_check;
    PremiseViolatedError(std::string check, const std::string& what)
        : std::runtime_error(what), failed_check(std::move(check)) {}
};

/// Scenario file could not be parsed (malformed JSON, wrong types). Exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Scenario parsed but is semantically invalid (unresolved names, bad caps). Exit code 2.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bidisc
