#pragma once

#include <stdexcept>
#include <string>

namespace ipf {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  Io,
  NotClosed,
  NotAssociative,
  EmptyGeneratorSet,
  InvalidParameters,
  EmptySequence,
  SequenceTooLong,
  NotCommutative,
  NotArchimedean,
  NotInNilPart,
  WrongLength,
  NotAssociativeAfterGlue,
  OrderTooLarge,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures are reported through this exception; the C API maps
// `code()` onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ipf
