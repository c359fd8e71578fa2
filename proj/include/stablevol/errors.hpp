// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef STABLEVOL_ERRORS_HPP
#define STABLEVOL_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stablevol {

using SimplexId = std::int32_t;
using VertexId = std::int32_t;

inline constexpr SimplexId kNoSimplex = -1;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (pointcloud, complex JSON, CLI values).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A complex that is not closed under faces or has inconsistent incidences.
class ComplexError : public Error {
 public:
  using Error::Error;
};

/// A level map that decreases from a face to one of its cofaces.
class MonotonicityError : public Error {
 public:
  MonotonicityError(SimplexId face, SimplexId coface, const std::string& what)
      : Error(what), face_(face), coface_(coface) {}
  SimplexId face() const { return face_; }
  SimplexId coface() const { return coface_; }

 private:
  SimplexId face_;
  SimplexId coface_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Point sets whose general position cannot be certified.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// The complex lacks the pure, embedded structure the dual graph needs.
class ConditionError : public Error {
 public:
  ConditionError(std::vector<SimplexId> offenders, const std::string& what)
      : Error(what), offenders_(std::move(offenders)) {}
  const std::vector<SimplexId>& offenders() const { return offenders_; }

 private:
  std::vector<SimplexId> offenders_;
};

class DegreeError : public Error {
 public:
  using Error::Error;
};

/// Raised when a volume is requested for an essential (never dying) class.
class StarPairError : public Error {
 public:
  using Error::Error;
};

/// A pair selector that matches zero or several pairs.
class AmbiguousPairError : public Error {
 public:
  using Error::Error;
};

class TooLargeError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class UnboundedError : public Error {
 public:
  using Error::Error;
};

/// The l1 relaxation rounded to a support that is not Z/2-feasible.
class ApproximationMismatch : public Error {
 public:
  ApproximationMismatch(std::vector<SimplexId> violated, const std::string& what)
      : Error(what), violated_(std::move(violated)) {}
  const std::vector<SimplexId>& violated() const { return violated_; }

 private:
  std::vector<SimplexId> violated_;
};

}  // namespace stablevol

#endif  // STABLEVOL_ERRORS_HPP
