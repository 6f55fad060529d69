#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tnet {

// Every failure the library reports. The CLI prints name(code) on stderr.
enum class ErrorCode {
  TooLarge,
  TooSmall,
  NeedsDedup,
  DomainError,
  BadDimension,
  NoProgress,
  TransversalFound,
  GaveUp,
  Infeasible,
  WrongDimension,
  SizeExceeded,
  TooFewPoints,
  BadInput,
  ParseError,
};

constexpr std::string_view name(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::NeedsDedup: return "NeedsDedup";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::NoProgress: return "NoProgress";
    case ErrorCode::TransversalFound: return "TransversalFound";
    case ErrorCode::GaveUp: return "GaveUp";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::SizeExceeded: return "SizeExceeded";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(name(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  // Message without the code prefix, for re-raising under another code.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace tnet
