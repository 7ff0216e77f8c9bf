#pragma once

#include <stdexcept>
#include <string>

namespace bck {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: wrong table shape, out-of-range index, invalid tree.
class StructureError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (e.g. join on an unbounded algebra).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An enumeration bound was exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

// JSON input that does not match any known schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A computed object contradicts the theory. Seeing one of these means a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bck
