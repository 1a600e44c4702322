#pragma once

#include <stdexcept>
#include <string>

namespace kneser {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ElementOutOfRange : public Error {
 public:
  using Error::Error;
};

class DuplicateElement : public Error {
 public:
  using Error::Error;
};

class DuplicateMember : public Error {
 public:
  using Error::Error;
};

class GroundSetMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidPattern : public Error {
 public:
  using Error::Error;
};

class OracleSizeExceeded : public Error {
 public:
  using Error::Error;
};

class PatternTooLarge : public Error {
 public:
  using Error::Error;
};

class ChromaticTooSmall : public Error {
 public:
  using Error::Error;
};

class ParamsInfeasible : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Parse failure in the family text format; carries 1-based line/column.
class FamilyParseError : public Error {
 public:
  FamilyParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace kneser
