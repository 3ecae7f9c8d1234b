#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace uzmorph {

enum class ErrorCode {
  EmptyAfterNormalization,
  NonAlphabetGrapheme,
  MalformedPattern,
  ConflictingConditions,
  DuplicateEnding,
  SchemaError,
  InvariantViolation,
  EmptyCandidateList,
  NotAPrefix,
  EmptyGoldFile,
  MalformedGoldRow,
  CorpusTooSmall,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the engine carries one of the codes above so that
/// front ends (CLI exit codes, service error fields) can map it without
/// parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace uzmorph
