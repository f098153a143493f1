#pragma once

#include <stdexcept>
#include <string>

namespace jkron {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text/JSON input.
class ParseError : public Error {
public:
  using Error::Error;
};

class ConstantPolynomial : public Error {
public:
  ConstantPolynomial() : Error("polynomial is constant; local degree undefined") {}
};

class NotSquare : public Error {
public:
  NotSquare() : Error("matrix is not square") {}
};

class NotNilpotent : public Error {
public:
  NotNilpotent() : Error("matrix is not nilpotent") {}
};

class EqualEigenvalues : public Error {
public:
  EqualEigenvalues() : Error("eigenvalues must be distinct") {}
};

class InvalidSpec : public Error {
public:
  using Error::Error;
};

class PropertyViolation : public Error {
public:
  using Error::Error;
};

class DimensionCap : public Error {
public:
  using Error::Error;
};

} // namespace jkron
