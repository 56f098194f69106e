#pragma once

#include <stdexcept>
#include <string>

namespace affrsk {

enum class ErrorCode {
  DuplicateOrbit,
  InvalidValue,
  EmptyMatrix,
  NotDescending,
  NotAChannel,
  InternalError,
  NotExtremal,
  NonTermination,
  UnsupportedIndex,
  AmbiguousPreimage,
  NotFound,
  ParseError,
};

inline const char* code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DuplicateOrbit: return "DuplicateOrbit";
    case ErrorCode::InvalidValue: return "InvalidValue";
    case ErrorCode::EmptyMatrix: return "EmptyMatrix";
    case ErrorCode::NotDescending: return "NotDescending";
    case ErrorCode::NotAChannel: return "NotAChannel";
    case ErrorCode::InternalError: return "InternalError";
    case ErrorCode::NotExtremal: return "NotExtremal";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::UnsupportedIndex: return "UnsupportedIndex";
    case ErrorCode::AmbiguousPreimage: return "AmbiguousPreimage";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "?";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode c, const std::string& what)
      : std::runtime_error(std::string(code_name(c)) + ": " + what), code_(c) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace affrsk
