#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shapetop {

enum class ErrorCode {
  DegenerateElement,
  KindMismatch,
  MemberNotPart,
  EmptyGenerator,
  DoesNotExhaust,
  GeneratorBudgetExceeded,
  AlreadyOpen,
  NotABasis,
  NotATopology,
  CarrierMismatch,
  SingularAffine,
  NotOnto,
  NotContinuous,
  TooLarge,
  TooManyFragments,
  EmptyShape,
};

std::string_view to_string(ErrorCode code);

/// Semantic failure raised by the library. Parse failures use ParseError.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed input text. Carries the source name, 1-based line and offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, std::string token, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message +
                           (token.empty() ? std::string() : " near '" + token + "'")),
        source_(std::move(source)),
        line_(line),
        token_(std::move(token)) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::string source_;
  std::size_t line_;
  std::string token_;
};

}  // namespace shapetop
