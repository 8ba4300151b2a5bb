#include "rdfgen/error.hpp"

namespace rdfgen {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnresolvedPrefix: return "UnresolvedPrefix";
    case ErrorKind::MalformedList: return "MalformedList";
    case ErrorKind::MissingPath: return "MissingPath";
    case ErrorKind::UnsupportedNodeRef: return "UnsupportedNodeRef";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::ContradictoryCardinality: return "ContradictoryCardinality";
    case ErrorKind::PairCycle: return "PairCycle";
    case ErrorKind::EmptyLogicalList: return "EmptyLogicalList";
    case ErrorKind::MissingShape: return "MissingShape";
    case ErrorKind::RecursionLimit: return "RecursionLimit";
    case ErrorKind::UnsatisfiableConstraint: return "UnsatisfiableConstraint";
    case ErrorKind::UnsupportedRegexFeature: return "UnsupportedRegexFeature";
    case ErrorKind::Io: return "IoError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace rdfgen
