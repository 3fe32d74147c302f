#pragma once

#include <stdexcept>
#include <string>

namespace apg {

enum class ErrorKind {
  EmptyEdge,
  UnknownVertex,
  DuplicateVertex,
  TooManyVertices,
  InvalidPicks,
  AlreadyWon,
  IllegalOutcome,
  ResourceLimit,
  TooLarge,
  EdgeTooLarge,
  InvalidPath,
  BadClauseSize,
  OddVarCount,
  ScriptViolation,
  EdgelessHypergraph,
  KTooLarge,
  Parse,
  Usage,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::EmptyEdge: return "EmptyEdge";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::TooManyVertices: return "TooManyVertices";
    case ErrorKind::InvalidPicks: return "InvalidPicks";
    case ErrorKind::AlreadyWon: return "AlreadyWon";
    case ErrorKind::IllegalOutcome: return "IllegalOutcome";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::EdgeTooLarge: return "EdgeTooLarge";
    case ErrorKind::InvalidPath: return "InvalidPath";
    case ErrorKind::BadClauseSize: return "BadClauseSize";
    case ErrorKind::OddVarCount: return "OddVarCount";
    case ErrorKind::ScriptViolation: return "ScriptViolation";
    case ErrorKind::EdgelessHypergraph: return "EdgelessHypergraph";
    case ErrorKind::KTooLarge: return "KTooLarge";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace apg
