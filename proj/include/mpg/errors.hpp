#pragma once

#include <stdexcept>
#include <string>

namespace mpg {

/// Input violates an operation's precondition (CLI exit code 2).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed `.rot` or coloring text.
class ParseError : public PreconditionError {
 public:
  ParseError(int line, const std::string& what)
      : PreconditionError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A step that the underlying theorems guarantee has failed. Either the
/// implementation is wrong or the instance is a counterexample; both must be
/// loud (CLI exit code 3).
class TheoremAlarm : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mpg
