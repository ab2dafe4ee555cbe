// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coqa {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument to a generator, metric or option.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line()` is 1-based, 0 when not line-specific.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Random generation gave up after its retry budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// Problem graph does not fit on the layout.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Coupling map cannot be decomposed into backbone + danglers.
class LinearizationError : public Error {
 public:
  using Error::Error;
};

/// Input outside what a verifier supports (gate kind, qubit count).
class ScopeError : public Error {
 public:
  using Error::Error;
};

}  // namespace coqa
