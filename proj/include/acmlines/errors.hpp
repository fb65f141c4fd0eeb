#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace acmlines {

enum class ErrorCode {
    OutOfBounds,
    DuplicateLine,
    UnusedHyperplane,
    EmptyPointSet,
    UnknownHyperplane,
    BadPermutation,
    BadN,
    CriteriaDisagreement,
    NotFerrers,
    NotAcm,
    EmptyVariety,
    SizeLimit,
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every failure raised by the library. Carries a
/// machine-readable code next to the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace acmlines
