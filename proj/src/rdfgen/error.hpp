#ifndef RDFGEN_ERROR_HPP
#define RDFGEN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace rdfgen {

enum class ErrorKind {
  Syntax,
  UnresolvedPrefix,
  MalformedList,
  MissingPath,
  UnsupportedNodeRef,
  TypeMismatch,
  ContradictoryCardinality,
  PairCycle,
  EmptyLogicalList,
  MissingShape,
  RecursionLimit,
  UnsatisfiableConstraint,
  UnsupportedRegexFeature,
  Io,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Syntax errors carry the source position that produced them.
class SyntaxError : public Error {
 public:
  SyntaxError(std::string message, std::size_t line, std::size_t column)
      : Error(ErrorKind::Syntax,
              message + " (line " + std::to_string(line) + ", column " + std::to_string(column) +
                  ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Non-fatal diagnostics (duplicate paths, unknown keywords, pointing cycles).
struct Warning {
  std::string code;
  std::string message;
};

using WarningLog = std::vector<Warning>;

inline void warn(WarningLog* log, std::string code, std::string message) {
  if (log) log->push_back({std::move(code), std::move(message)});
}

}  // namespace rdfgen

#endif
