#pragma once

#include <stdexcept>

namespace siegel {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input shapes disagree (vector lengths, matrix sizes, index ranges).
struct DimensionMismatch : Error {
  using Error::Error;
};

// Malformed textual input (rational strings, JSON payloads, schedules).
struct ParseError : Error {
  using Error::Error;
};

// Points fail to affinely span their ambient space; the caller should
// project to the affine hull first.
struct DegenerateSpan : Error {
  using Error::Error;
};

struct NotAdmissible : Error {
  using Error::Error;
};

struct NotCentered : Error {
  using Error::Error;
};

// The point lies outside the union of Siegel leaves: the norm infimum is
// not attained and no minimizer exists.
struct NotInSiegelSet : Error {
  using Error::Error;
};

struct SolverFailure : Error {
  using Error::Error;
};

struct InvalidFace : Error {
  using Error::Error;
};

// A documented operation precondition was violated by the caller.
struct PreconditionFailure : Error {
  using Error::Error;
};

}  // namespace siegel
