#pragma once

#include <stdexcept>
#include <string>

namespace kingdom {

/// Malformed user input (board strings, ranges, CSV).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size guard was exceeded (oracle vertex cap, frontier height, sweep length).
class GuardError : public std::runtime_error {
 public:
  GuardError(std::string guard, const std::string& what)
      : std::runtime_error(what), guard_(std::move(guard)) {}
  const std::string& guard() const noexcept { return guard_; }

 private:
  std::string guard_;
};

/// The requested operation is not defined for this board family or boundary.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kingdom
