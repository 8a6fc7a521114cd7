#pragma once

#include <stdexcept>
#include <string>

namespace lplab {

// Base for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (JSON or edge list).
struct ParseError : Error {
  using Error::Error;
};

// Well-formed input that violates graph simplicity or range rules.
struct ValidationError : Error {
  using Error::Error;
};

// An operation was called outside its documented domain.
struct PreconditionError : Error {
  using Error::Error;
};

// Input exceeds what an exact engine can handle.
struct TooLargeError : Error {
  using Error::Error;
};

// Cooperative cancellation fired inside a search loop.
struct TimeoutError : Error {
  using Error::Error;
};

}  // namespace lplab
