#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfreal {

// Base of every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An algebra presentation that is not associative or has no two-sided unit.
class InvalidAlgebra : public Error {
 public:
  using Error::Error;
};

// A degree-1 operator that does not commute with the coproduct as required.
class InvarianceViolation : public Error {
 public:
  InvarianceViolation(const std::string& what, std::size_t witness)
      : Error(what), witness_(witness) {}
  std::size_t witness() const noexcept { return witness_; }

 private:
  std::size_t witness_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

// Raised when two independent constructions disagree. Should be unreachable.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class ResolutionError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> failures)
      : Error(join(failures)), failures_(std::move(failures)) {}
  const std::vector<std::string>& failures() const noexcept { return failures_; }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) {
      if (!out.empty()) out += "; ";
      out += item;
    }
    return out;
  }
  std::vector<std::string> failures_;
};

}  // namespace hopfreal
