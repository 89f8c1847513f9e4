#include "multinet/error.hpp"

namespace multinet {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ConductorMismatch: return "ConductorMismatch";
    case ErrorKind::IdenticalLines: return "IdenticalLines";
    case ErrorKind::IdenticalPoints: return "IdenticalPoints";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DegenerateTuple: return "DegenerateTuple";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::InvalidCandidate: return "InvalidCandidate";
    case ErrorKind::NotAMultinet: return "NotAMultinet";
    case ErrorKind::NotANet: return "NotANet";
    case ErrorKind::NotThreeBlocks: return "NotThreeBlocks";
    case ErrorKind::TooFewLines: return "TooFewLines";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::UnsupportedGroup: return "UnsupportedGroup";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::WrongK: return "WrongK";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::ZeroPlane: return "ZeroPlane";
    case ErrorKind::PlaneInArrangement: return "PlaneInArrangement";
    case ErrorKind::EverythingCanceled: return "EverythingCanceled";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonRealArrangement: return "NonRealArrangement";
    case ErrorKind::IOError: return "IOError";
  }
  return "Unknown";
}

}  // namespace multinet
