#include "antidiag/error.hpp"

namespace antidiag {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ClosureExceedsCap: return "ClosureExceedsCap";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NoPrimeFound: return "NoPrimeFound";
    case ErrorCode::DegenerateEigenspace: return "DegenerateEigenspace";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::InvalidArgs: return "InvalidArgs";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace antidiag
