#pragma once

#include <stdexcept>
#include <string>

namespace bigraph {

/// Base of every recoverable error: bad input, exceeded caps, violated
/// preconditions. The CLI maps these to exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class InputErrorKind {
  Loop,
  DuplicateEdge,
  VertexOutOfRange,
  Malformed,
  MissingParameter,
  UnknownParameter,
  BadPreset,
  EulerMismatch,
};

class InputError : public Error {
 public:
  InputError(InputErrorKind kind, const std::string& what) : Error(what), kind_(kind) {}
  InputErrorKind kind() const noexcept { return kind_; }

 private:
  InputErrorKind kind_;
};

/// A desk-scale cap (edge count, cycle count, elimination size, ...) was
/// exceeded. Never replaced by a truncated answer.
class CapError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two independent routes to the same quantity disagreed. This is a bug or a
/// failed identity, never an input problem.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bigraph
