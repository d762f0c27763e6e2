#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dlcombi {

enum class ErrorCode {
  SingularPresentation,
  InvalidCartan,
  NonFiniteType,
  MismatchedContext,
  ScaleExceeded,
  IndexOutOfRange,
  InconsistentInput,
  IncompatibleFrobenius,
  OrderClash,
  ParseError,
  ValidationError,
};

constexpr std::string_view code_name(ErrorCode c) {
  switch (c) {
  case ErrorCode::SingularPresentation: return "SingularPresentation";
  case ErrorCode::InvalidCartan: return "InvalidCartan";
  case ErrorCode::NonFiniteType: return "NonFiniteType";
  case ErrorCode::MismatchedContext: return "MismatchedContext";
  case ErrorCode::ScaleExceeded: return "ScaleExceeded";
  case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorCode::InconsistentInput: return "InconsistentInput";
  case ErrorCode::IncompatibleFrobenius: return "IncompatibleFrobenius";
  case ErrorCode::OrderClash: return "OrderClash";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string &msg) {
  throw Error(c, msg);
}

inline void require(bool cond, ErrorCode c, const std::string &msg) {
  if (!cond)
    fail(c, msg);
}

} // namespace dlcombi
