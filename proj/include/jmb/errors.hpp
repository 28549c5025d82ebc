#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jmb {

/// Argument outside the domain an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A request would exceed a hard resource cap (e.g. factorial argument).
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Data that parsed but violates an invariant (non-prime characteristic,
/// duplicate catalog row, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input. `line()` is 1-based, 0 when not line-oriented.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::invalid_argument(line == 0 ? what
                                        : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A search over a finite window found nothing.
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jmb
