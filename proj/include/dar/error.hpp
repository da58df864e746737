#pragma once

#include <stdexcept>
#include <string>

namespace dar {

// Caller supplied an argument outside an operation's domain (k < 3, a star
// where a non-star tree is required, an improper colouring, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal guarantee failed. Raised where a step is proven never to fail
// when its preconditions hold, so reaching it means a hypothesis was breached.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed graph, colouring, or family file.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidInput(message);
}

inline void ensure(bool condition, const std::string& message) {
  if (!condition) throw InvariantViolation(message);
}

}  // namespace dar
