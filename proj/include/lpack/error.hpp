#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpack {

enum class ErrorKind {
  BadParams,
  ParseError,
  TooSmall,
  TooManyEdges,
  SizeLimit,
  NoTwoTrees,
  NotATree,
  NotBijective,
  OutOfTheoremRange,
  Unknown,
  ExtensionInvalid,
  DispatchFailure,
  VerificationFailure,
};

const char *to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Edge-list parse failure; `line` is 1-based.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string &reason)
      : Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ": " + reason),
        line_(line), reason_(reason) {}

  std::size_t line() const noexcept { return line_; }
  const std::string &reason() const noexcept { return reason_; }

private:
  std::size_t line_;
  std::string reason_;
};

} // namespace lpack
