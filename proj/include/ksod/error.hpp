#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ksod {

enum class ErrorKind {
  ZeroPolynomial,
  NotIsolated,
  MonomialGerm,
  ExtensionUnsupported,
  RecursionLimit,
  CommonFactor,
  UnknownLabel,
  NegativeRank,
  NotATree,
  InfiniteDimensionalSuspected,
  DefectExceedsL,
  MatrixShapeMismatch,
  RankDeficient,
  NegativeResult,
  OutOfRange,
  InvalidInput,
  SyntaxError,
  SchemaError,
};

std::string_view to_string(ErrorKind kind);

// Errors that mean "the input is fine, the tool cannot compute this".
bool is_unsupported(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::SyntaxError,
              "syntax error at line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ksod
