#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lamis {

/// Malformed caller input (bad vertex ids, out-of-range generator parameters).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid oracle or algorithm configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was invoked on an oracle whose noise mode it does not support.
class ModeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Requested work exceeds what the routine is built for (e.g. exact MIS on large graphs).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text input could not be parsed. Carries the 1-based line number (0 when not line-specific).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An algorithm produced an output that failed validation.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lamis
