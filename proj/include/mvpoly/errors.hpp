#pragma once

#include <stdexcept>
#include <string>

namespace mvpoly {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (e.g. twisting a datum with a
// nonzero simple-root entry, or a Saito reflection with phi != 0).
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// The operation only exists for one of the two algebras.
class UnsupportedKind : public Error {
 public:
  using Error::Error;
};

// remove_part called with a part size that does not occur.
class PartAbsent : public Error {
 public:
  using Error::Error;
};

// Malformed user input (documents, operator words, flags).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A mathematical invariant that must always hold was observed broken, e.g. a
// Lusztig datum with zero or several MV completions. Never recoverable.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

}  // namespace mvpoly
