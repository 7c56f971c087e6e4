#pragma once

#include <stdexcept>
#include <string>

namespace eulercat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonSquareBlock : public Error {
 public:
  using Error::Error;
};

class WidthMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidCategory : public Error {
 public:
  using Error::Error;
};

class InvalidFunctor : public Error {
 public:
  using Error::Error;
};

class InvalidDiagram : public Error {
 public:
  using Error::Error;
};

class SourceTargetMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class MissingWeighting : public Error {
 public:
  using Error::Error;
};

class MissingCoweighting : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or value (bad JSON, wrong shape, unknown id).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace eulercat
