#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace geomcut {

// Base of every failure raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller-supplied data violated a precondition.
struct InputError : Error {
  using Error::Error;
};

// A consistency check that should be unbreakable failed; indicates a bug.
struct InternalError : Error {
  using Error::Error;
};

// Structured input could not be parsed. line/column are 1-based; 0 means unknown.
struct ParseError : InputError {
  ParseError(std::size_t line_, std::size_t column_, const std::string& what_)
      : InputError("parse error at line " + std::to_string(line_) + ", column " +
                   std::to_string(column_) + ": " + what_),
        line(line_),
        column(column_) {}
  std::size_t line;
  std::size_t column;
};

// A coordinate string is not an exact decimal (or fraction) literal.
struct BadCoordinate : InputError {
  explicit BadCoordinate(const std::string& text)
      : InputError("bad coordinate literal: \"" + text + "\""), literal(text) {}
  std::string literal;
};

// Requested exhaustive search exceeds the configured budget.
struct TooLarge : Error {
  TooLarge(std::uint64_t count_, std::uint64_t limit_, const std::string& what_)
      : Error(what_), count(count_), limit(limit_) {}
  std::uint64_t count;  // offending size (free nodes, edges, ...)
  std::uint64_t limit;
};

struct DegenerateInput : InputError {
  using InputError::InputError;
};

struct ObjectFaceNotFound : InternalError {
  using InternalError::InternalError;
};

struct NoSeparationNeeded : InputError {
  using InputError::InputError;
};

struct ProvenanceMismatch : InternalError {
  using InternalError::InternalError;
};

struct SinkWriteFailure : Error {
  using Error::Error;
};

struct MalformedTree : InputError {
  using InputError::InputError;
};

struct BadThickness : InputError {
  using InputError::InputError;
};

struct GenerationTimeout : Error {
  using Error::Error;
};

// A color in [0, k) has no objects where the requested solver needs one.
struct EmptyColorClass : InputError {
  using InputError::InputError;
};

}  // namespace geomcut
