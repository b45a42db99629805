#pragma once

#include <stdexcept>
#include <string>

namespace scmap {

// Base class for all failures signalled by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation requested at (or within 1e-14 of) a pole 1/conj(a) of a factor.
class PoleEvaluationError : public Error {
 public:
  using Error::Error;
};

// Leading coefficient of the pre-vertex polynomial vanished.
class DegreeCollapseError : public Error {
 public:
  using Error::Error;
};

// The Blaschke pair does not produce simple unimodular roots.
class InadmissibleError : public Error {
 public:
  using Error::Error;
};

// Boundary-sampling oracle could not separate consecutive crossings.
class OracleMissError : public Error {
 public:
  using Error::Error;
};

// |phi'| below threshold at a pre-vertex; the exterior angle is unbounded.
class DegenerateAngleError : public Error {
 public:
  using Error::Error;
};

// Convex/concave counts disagree with the degree identities.
class CountMismatchError : public Error {
 public:
  using Error::Error;
};

// Adjacent winding samples jumped by more than pi.
class UnwrapFailureError : public Error {
 public:
  using Error::Error;
};

// Input expected to be conjugate-pair symmetric is not.
class AsymmetricInputError : public Error {
 public:
  using Error::Error;
};

// An argument violates a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Input document malformed (unknown field, wrong type, bad value).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace scmap
