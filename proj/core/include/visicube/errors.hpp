#pragma once

#include <stdexcept>
#include <string>

namespace visicube {

// Base class for everything this library throws on purpose.  Plain
// std::invalid_argument is still used for garden-variety bad parameters
// (negative sizes, out-of-range dimensions); the subclasses below mark
// conditions a caller may reasonably want to catch separately.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two objects built over different cube dimensions were combined.
class DimensionMismatch : public Error {
public:
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// An exhaustive operation was asked to run beyond its configured cap.
// Deliberate refusal, not a failure of the input.
class ScaleCapExceeded : public Error {
public:
  explicit ScaleCapExceeded(const std::string& what) : Error(what) {}
};

// A caller-supplied layer family breaks a precondition (wrong layer,
// forbidden pattern present, wrong dimension).
class InvalidFamily : public Error {
public:
  explicit InvalidFamily(const std::string& what) : Error(what) {}
};

// Internal guarantee failed, e.g. a gap vertex that provably exists was
// not found.  Seeing this means a bug, not bad input.
class InvariantBreach : public Error {
public:
  explicit InvariantBreach(const std::string& what) : Error(what) {}
};

// Text input could not be parsed.  Positions are 1-based; column 0 means
// the whole line is at fault.
class ParseError : public Error {
public:
  ParseError(int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) +
              (column > 0 ? ", column " + std::to_string(column) : "") + ": " +
              message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace visicube
