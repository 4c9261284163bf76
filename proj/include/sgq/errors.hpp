#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sgq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters outside an operation's domain (bad group parameters, singular
/// matrices, values beyond the supported integer range).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// divide_exact with a non-divisor.
class NonDivisibleError : public Error {
 public:
  using Error::Error;
};

/// Unknown sporadic name, unknown group token, missing vendored entry.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Data that contradicts a theorem it must satisfy (Sylow congruence,
/// census sums).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Text input that does not follow its format. Carries the 1-based line.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Enumeration or order computation exceeded its configured cap.
class CapExceededError : public Error {
 public:
  CapExceededError(const std::string& what, std::size_t reached)
      : Error(what), reached_(reached) {}

  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t reached_;
};

}  // namespace sgq
