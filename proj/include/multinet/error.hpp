#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace multinet {

enum class ErrorKind {
  // exact arithmetic
  DivisionByZero,
  NotADivisor,
  SyntaxError,
  ConductorMismatch,
  // projective geometry
  IdenticalLines,
  IdenticalPoints,
  DuplicateElement,
  SingularMatrix,
  DegenerateTuple,
  ZeroVector,
  // arrangements and verdicts
  InvalidCandidate,
  NotAMultinet,
  NotANet,
  NotThreeBlocks,
  TooFewLines,
  OrderTooLarge,
  OrderMismatch,
  UnsupportedGroup,
  TooLarge,
  WrongK,
  DegreeTooSmall,
  NotComplete,
  TheoremViolation,
  // catalog
  InvalidParams,
  UnknownFamily,
  // restriction of Q_n
  ZeroPlane,
  PlaneInArrangement,
  EverythingCanceled,
  // documents
  ParseError,
  NonRealArrangement,
  IOError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace multinet
