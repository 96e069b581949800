#pragma once

#include <stdexcept>
#include <string>

namespace magica {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& detail) : Error("parse error: " + detail) {}
};

struct TagMismatch : Error {
  TagMismatch() : Error("algebra tag mismatch") {}
};

struct DegenerateInput : Error {
  explicit DegenerateInput(const std::string& detail) : Error("degenerate input: " + detail) {}
};

struct DegreeOverflow : Error {
  DegreeOverflow() : Error("polynomial degree exceeds requested jet order") {}
};

struct SpanDeficiency : Error {
  SpanDeficiency() : Error("sampled cone points do not span the ambient space") {}
};

struct CalibrationEmpty : Error {
  CalibrationEmpty() : Error("invariance constraints admit no nonzero quartic") {}
};

struct CalibrationAmbiguous : Error {
  explicit CalibrationAmbiguous(int dim)
      : Error("invariance nullspace has dimension " + std::to_string(dim) + ", expected 1") {}
};

struct UnexpectedSignature : Error {
  explicit UnexpectedSignature(const std::string& detail)
      : Error("unexpected singular-point signature: " + detail) {}
};

struct ResampleLimit : Error {
  explicit ResampleLimit(const std::string& what_for)
      : Error("resample limit reached while sampling " + what_for) {}
};

struct RankPreconditionViolated : Error {
  explicit RankPreconditionViolated(const std::string& detail)
      : Error("rank precondition violated: " + detail) {}
};

struct RequiresNonzeroP3 : Error {
  RequiresNonzeroP3() : Error("polar combination requires p3 != 0") {}
};

struct InconclusiveZero : Error {
  InconclusiveZero() : Error("grid budget exceeded before certifying the zero polynomial") {}
};

struct ClosureDivergence : Error {
  ClosureDivergence() : Error("commutator closure exceeded the ambient dimension bound") {}
};

}  // namespace magica
