#include "flagrep/error.hpp"

namespace flagrep {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidCartan: return "invalid-cartan";
        case ErrorCode::NotFiniteType: return "not-finite-type";
        case ErrorCode::DimensionMismatch: return "dimension-mismatch";
        case ErrorCode::IndexOutOfRange: return "index-out-of-range";
        case ErrorCode::NonTermination: return "non-termination";
        case ErrorCode::SingularWeight: return "singular-weight";
        case ErrorCode::NotDominant: return "not-dominant";
        case ErrorCode::NonIntegerWeight: return "non-integer-weight";
        case ErrorCode::NonIntegerResult: return "non-integer-result";
        case ErrorCode::ResourceLimit: return "resource-limit";
        case ErrorCode::SampleFailure: return "sample-failure";
        case ErrorCode::ParseError: return "parse-error";
        case ErrorCode::InvalidArgument: return "invalid-argument";
        case ErrorCode::InternalError: return "internal-error";
    }
    return "unknown";
}

}  // namespace flagrep
