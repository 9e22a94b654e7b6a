#pragma once

#include <stdexcept>
#include <string>

namespace sctree {

// Every failure the library reports carries one of these kinds so callers
// (and the CLI exit-code mapping) can dispatch without string matching.
enum class ErrorKind {
  InvalidToken,
  TooFewNodes,
  UnknownEndpoint,
  SelfLoop,
  DuplicateEdge,
  CycleDetected,
  DisconnectedGraph,
  UnknownNode,
  EmptySet,
  NotAPermutation,
  UnknownAlternative,
  EqualArguments,
  AlphabetMismatch,
  DuplicatePreference,
  RestrictionTooSmall,
  NotALeaf,
  WorkLimitExceeded,
  PreconditionViolated,
  ParseError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace sctree
