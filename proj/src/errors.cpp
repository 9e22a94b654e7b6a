#include "sctree/errors.hpp"

namespace sctree {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidToken: return "InvalidToken";
    case ErrorKind::TooFewNodes: return "TooFewNodes";
    case ErrorKind::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::UnknownNode: return "UnknownNode";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::UnknownAlternative: return "UnknownAlternative";
    case ErrorKind::EqualArguments: return "EqualArguments";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::DuplicatePreference: return "DuplicatePreference";
    case ErrorKind::RestrictionTooSmall: return "RestrictionTooSmall";
    case ErrorKind::NotALeaf: return "NotALeaf";
    case ErrorKind::WorkLimitExceeded: return "WorkLimitExceeded";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace sctree
