#pragma once

#include <stdexcept>
#include <string>

namespace softtop {

// Malformed or inconsistent caller input (bad literal, ground mismatch,
// violated precondition).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A literal that failed to parse, with its 1-based position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line, int column)
      : InputError(what + " at line " + std::to_string(line) + ", column " +
                   std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// The requested ground is larger than the enumeration guard allows.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent routes disagreed. Carries a printable witness.
class ConsistencyError : public std::runtime_error {
 public:
  ConsistencyError(const std::string& what, std::string witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}

  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

}  // namespace softtop
