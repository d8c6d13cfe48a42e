#pragma once

#include <stdexcept>
#include <string>

namespace origami {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// exactnum
struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};
struct NegativeRadicand : Error {
  NegativeRadicand() : Error("square root of a negative value") {}
};
struct PrecisionExhausted : Error {
  PrecisionExhausted() : Error("sign decision exceeded the precision budget") {}
};

// geom
struct CoincidentPoints : Error {
  CoincidentPoints() : Error("points coincide") {}
};
struct ParallelLines : Error {
  ParallelLines() : Error("lines are parallel") {}
};
struct CoincidentLines : Error {
  CoincidentLines() : Error("lines coincide") {}
};
struct PointAtInfinity : Error {
  PointAtInfinity() : Error("projective point lies on the line at infinity") {}
};

// folds
struct DegenerateParabola : Error {
  DegenerateParabola() : Error("focus lies on the directrix") {}
};
struct IdenticalParabolas : Error {
  IdenticalParabolas() : Error("the two parabolas coincide") {}
};
struct NotCollinear : Error {
  NotCollinear() : Error("points are not collinear") {}
};
struct DegenerateRatio : Error {
  DegenerateRatio() : Error("degenerate ratio in similarity construction") {}
};
struct AxiomNotAvailable : Error {
  explicit AxiomNotAvailable(const std::string& what)
      : Error("axiom not available at the current level: " + what) {}
};

// conics
struct DegenerateConic : Error {
  DegenerateConic() : Error("conic is degenerate") {}
};
struct NotDegenerate : Error {
  NotDegenerate() : Error("conic is not degenerate") {}
};
struct DegeneratePencil : Error {
  DegeneratePencil() : Error("pencil determinant vanishes identically") {}
};

// solvers / fields
struct NonPositiveInput : Error {
  NonPositiveInput() : Error("input must be positive") {}
};
struct OutOfRange : Error {
  explicit OutOfRange(const std::string& msg) : Error(msg) {}
};
struct ReduciblePolynomial : Error {
  ReduciblePolynomial() : Error("polynomial is reducible over the rationals") {}
};
struct UnsupportedTower : Error {
  UnsupportedTower() : Error("input lies outside the supported field tower") {}
};

// cli / render
struct EmptyViewport : Error {
  EmptyViewport() : Error("viewport is empty") {}
};

}  // namespace origami
