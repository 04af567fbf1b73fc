#pragma once

#include <stdexcept>
#include <string>

namespace chromo {

/// Base class for every error raised by the library. The CLI maps the
/// concrete subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Field-level errors.
class InvalidField : public Error {
 public:
  using Error::Error;
};
class MixedFields : public Error {
 public:
  MixedFields() : Error("operands belong to different fields") {}
};
class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};
class ParseError : public Error {
 public:
  using Error::Error;
};
class CharacteristicThree : public Error {
 public:
  CharacteristicThree() : Error("operation needs 3 to be invertible; field has characteristic three") {}
};

// Geometric errors.
class CoincidentPoints : public Error {
 public:
  CoincidentPoints() : Error("points coincide") {}
};
class ParallelLines : public Error {
 public:
  ParallelLines() : Error("lines are parallel or equal") {}
};
class DegenerateTriangle : public Error {
 public:
  DegenerateTriangle() : Error("points are collinear or not distinct") {}
};

/// A line was null in the colour an operation needed it to be non-null.
/// `argument` is the zero-based position of the offending argument.
class NullLine : public Error {
 public:
  NullLine(int argument, const std::string& colour)
      : Error("line argument " + std::to_string(argument) + " is " + colour + " null"),
        argument_(argument) {}
  int argument() const { return argument_; }

 private:
  int argument_;
};

/// A law needed a spread at a vertex whose lines are null. `vertex` is 1-based.
class UndefinedSpread : public Error {
 public:
  explicit UndefinedSpread(int vertex)
      : Error("spread at vertex " + std::to_string(vertex) + " is undefined"), vertex_(vertex) {}
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

class EulerDegenerate : public Error {
 public:
  EulerDegenerate() : Error("orthocenter equals circumcenter; Euler line is not unique") {}
};
class OmegaDegenerate : public Error {
 public:
  OmegaDegenerate() : Error("the three orthocenters are collinear") {}
};

}  // namespace chromo
