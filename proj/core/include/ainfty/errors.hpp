#pragma once

#include <stdexcept>
#include <string>

namespace ainfty {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands (scalars, matrices, modules) belong to different ground rings.
struct RingMismatch : Error {
  using Error::Error;
};

struct NotInvertible : Error {
  using Error::Error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};

struct ArityOutOfRange : Error {
  using Error::Error;
};

// A square of the proposed differential is nonzero.
struct NotADifferential : Error {
  using Error::Error;
};

struct NotAChainMap : Error {
  using Error::Error;
};

struct NonzeroInducedMap : Error {
  using Error::Error;
};

// Cycles or homology fail to split off the complex (over Z: torsion).
struct NotSplit : Error {
  using Error::Error;
};

struct ProjectivityViolated : Error {
  using Error::Error;
};

struct EvenWeight : Error {
  using Error::Error;
};

struct SourceNotASuspension : Error {
  using Error::Error;
};

struct NotAssociative : Error {
  using Error::Error;
};

struct NotACocycle : Error {
  using Error::Error;
};

struct InvalidArStructure : Error {
  using Error::Error;
};

struct RTooSmall : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct ValidationError : Error {
  using Error::Error;
};

}  // namespace ainfty
