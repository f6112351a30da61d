#pragma once

#include <stdexcept>
#include <string>

namespace trias {

/// Operand shape or ambient-dimension mismatch.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Violated operation precondition, including catalog parameter constraints.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Error in a ".trias" or ".mat" text file, with source location.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string file, std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(file + ":" + std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        file_(std::move(file)),
        line_(line),
        column_(column) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string file_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace trias
