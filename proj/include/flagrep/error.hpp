#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flagrep {

enum class ErrorCode {
    InvalidCartan,
    NotFiniteType,
    DimensionMismatch,
    IndexOutOfRange,
    NonTermination,
    SingularWeight,
    NotDominant,
    NonIntegerWeight,
    NonIntegerResult,
    ResourceLimit,
    SampleFailure,
    ParseError,
    InvalidArgument,
    InternalError,
};

// Stable kebab-case identifier, used verbatim in CLI diagnostics.
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace flagrep
