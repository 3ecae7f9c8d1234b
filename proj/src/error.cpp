#include "uzmorph/error.hpp"

namespace uzmorph {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyAfterNormalization: return "EmptyAfterNormalization";
    case ErrorCode::NonAlphabetGrapheme: return "NonAlphabetGrapheme";
    case ErrorCode::MalformedPattern: return "MalformedPattern";
    case ErrorCode::ConflictingConditions: return "ConflictingConditions";
    case ErrorCode::DuplicateEnding: return "DuplicateEnding";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::EmptyCandidateList: return "EmptyCandidateList";
    case ErrorCode::NotAPrefix: return "NotAPrefix";
    case ErrorCode::EmptyGoldFile: return "EmptyGoldFile";
    case ErrorCode::MalformedGoldRow: return "MalformedGoldRow";
    case ErrorCode::CorpusTooSmall: return "CorpusTooSmall";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace uzmorph
