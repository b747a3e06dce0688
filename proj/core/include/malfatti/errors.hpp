#ifndef MALFATTI_ERRORS_HPP
#define MALFATTI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace malfatti {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Triangle construction.
struct NonFiniteInput : Error {
  using Error::Error;
};
struct NonPositiveSide : Error {
  using Error::Error;
};
struct TriangleInequalityViolated : Error {
  using Error::Error;
};
struct InvalidAngles : Error {
  using Error::Error;
};

// Variant lookup.
struct UnknownVariant : Error {
  using Error::Error;
};

// Candidate filtering did not leave exactly eight solutions.
struct FilterCountMismatch : Error {
  FilterCountMismatch(const std::string& what, int count)
      : Error(what), survivor_count(count) {}
  int survivor_count;
};

// No region assignment realizes the requested radii as tangent circles.
struct NoConsistentPlacement : Error {
  using Error::Error;
};

// The multi-start solver found no root for the requested case.
struct OracleDivergence : Error {
  using Error::Error;
};

}  // namespace malfatti

#endif
