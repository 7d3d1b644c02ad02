#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace complat {

enum class ErrorCode {
  NotALattice,
  NotBounded,
  CycleDetected,
  UnknownLabel,
  DuplicateLabel,
  ParseError,
  UnknownKey,
  NoComplementation,
  SyntaxError,
  UnboundVariable,
  UnknownIdentity,
  TrivialAlgebra,
  InvalidLength,
  CapTooSmall,
  IncompleteClosure,
  SizeLimitExceeded,
  UnknownTheorem,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        _code(code) {}

  ErrorCode code() const noexcept { return _code; }

 private:
  ErrorCode _code;
};

// Parse failures carry the byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string const& what)
      : Error(ErrorCode::SyntaxError,
              "at position " + std::to_string(position) + ": " + what),
        _position(position) {}

  std::size_t position() const noexcept { return _position; }

 private:
  std::size_t _position;
};

}  // namespace complat
