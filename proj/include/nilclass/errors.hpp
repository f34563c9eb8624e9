#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilclass {

// Base class for everything this library throws on bad input.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct FieldMismatchError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

struct ArithmeticError : Error {
  using Error::Error;
};

struct SingularMatrixError : Error {
  using Error::Error;
};

// A Jacobi violation witness: the basis triple and the nonzero residual
// [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] printed as a string.
struct JacobiWitness {
  std::size_t i, j, k;
  std::string residual;
};

struct JacobiViolationError : Error {
  std::vector<JacobiWitness> witnesses;
  JacobiViolationError(const std::string& msg, std::vector<JacobiWitness> w)
      : Error(msg), witnesses(std::move(w)) {}
};

struct AntisymmetryViolationError : Error {
  using Error::Error;
};

struct NotAnIdealError : Error {
  using Error::Error;
};

struct NotNilpotentError : Error {
  using Error::Error;
};

struct NotHeisenbergError : Error {
  using Error::Error;
};

struct NotCentralError : Error {
  using Error::Error;
};

struct InvalidActionError : Error {
  using Error::Error;
};

// Parse errors carry 1-based source coordinates.
struct ParseError : Error {
  std::size_t line, column;
  ParseError(const std::string& msg, std::size_t ln, std::size_t col)
      : Error(msg + " (line " + std::to_string(ln) + ", column " +
              std::to_string(col) + ")"),
        line(ln),
        column(col) {}
};

struct UnknownGeneratorError : ParseError {
  using ParseError::ParseError;
};

struct InconsistentRelationError : ParseError {
  using ParseError::ParseError;
};

struct UnknownLabelError : Error {
  using Error::Error;
};

struct ParamOutOfRangeError : Error {
  using Error::Error;
};

struct NotEligibleError : Error {
  using Error::Error;
};

struct NoCatalogMatchError : Error {
  std::string diagnostics;
  NoCatalogMatchError(const std::string& msg, std::string diag)
      : Error(msg), diagnostics(std::move(diag)) {}
};

struct AmbiguousMatchError : Error {
  std::vector<std::string> labels;
  AmbiguousMatchError(const std::string& msg, std::vector<std::string> ls)
      : Error(msg), labels(std::move(ls)) {}
};

struct BadPrimeError : Error {
  using Error::Error;
};

struct DocumentError : Error {
  using Error::Error;
};

// Internal consistency failures: these indicate a bug in the library,
// never a property of the input.
struct InternalError : Error {
  using Error::Error;
};

struct RouteMismatchError : InternalError {
  using InternalError::InternalError;
};

inline void check_internal(bool cond, const std::string& msg) {
  if (!cond) throw InternalError("internal consistency failure: " + msg);
}

}  // namespace nilclass
