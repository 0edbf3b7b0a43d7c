#pragma once

#include <stdexcept>
#include <string>

namespace alex {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (documents, polynomial text, sizes).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Arguments that violate an operation's preconditions.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal identity failed; indicates a bug or an invalid diagram that
/// slipped through validation.
class MathError : public Error {
 public:
  using Error::Error;
};

}  // namespace alex
