#pragma once

#include <stdexcept>
#include <string>

namespace braidwalk {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed word, rational, measure or config text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Operands live in braid groups with different strand counts.
class StrandMismatch : public Error {
 public:
  StrandMismatch(int lhs, int rhs)
      : Error("strand mismatch: B_" + std::to_string(lhs) + " vs B_" +
              std::to_string(rhs)) {}
};

// A closure diagram splits into independent index blocks; the Seifert
// construction needs a connected diagram.
class SplitDiagram : public Error {
 public:
  using Error::Error;
};

// An invariant is not defined for the given closure (e.g. s on a link).
class UndefinedInvariant : public Error {
 public:
  using Error::Error;
};

// A search or rewriting budget ran out before a verdict was reached. This is
// "inconclusive", never "false".
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Invalid configuration values (measure weights, experiment parameters).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace braidwalk
