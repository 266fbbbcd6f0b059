#include "ipf/error.hpp"

namespace ipf {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::EmptyGeneratorSet: return "EmptyGeneratorSet";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::SequenceTooLong: return "SequenceTooLong";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::NotArchimedean: return "NotArchimedean";
    case ErrorCode::NotInNilPart: return "NotInNilPart";
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::NotAssociativeAfterGlue: return "NotAssociativeAfterGlue";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::Internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace ipf
