#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace paratop {

enum class ErrorCode {
  NotATopology,
  EmptyCarrier,
  CarrierTooLarge,
  NotT0,
  DuplicateChosenPoints,
  SyntaxError,
  UnknownPoint,
  NegativeBound,
  EqualElements,
  RadiusTooLarge,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; the code drives CLI exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the word and vector parsers; `position` is a byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::SyntaxError,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace paratop
