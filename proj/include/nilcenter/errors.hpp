#pragma once

#include <stdexcept>
#include <string>

namespace nilcenter {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A jet operation could not guarantee the truncation order it was asked for.
struct OrderError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  int line;
  int column;
};

struct ValidationError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct SingularImplicitError : Error {
  using Error::Error;
};

struct FrameError : Error {
  using Error::Error;
};

struct DegenerateInputError : Error {
  using Error::Error;
};

struct NumericError : Error {
  using Error::Error;
};

// Raised when an internal certification fails; indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace nilcenter
