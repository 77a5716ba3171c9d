#pragma once

#include <stdexcept>
#include <string>

namespace lgg {

enum class ErrorKind {
  DegenerateEdge,
  EndpointQuery,
  DuplicatePoint,
  SelfLoop,
  IndexOutOfRange,
  DuplicateEdge,
  BadParameter,
  BadFormula,
  TooLarge,
  TooFewVertices,
  TooManyPoints,
  SamePair,
  ParseError,
  ValidationError,
  ShapeError,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace lgg
