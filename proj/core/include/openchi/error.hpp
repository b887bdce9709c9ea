#pragma once

#include <stdexcept>
#include <string>

namespace openchi {

enum class Ec {
  DuplicateLabel,
  UnknownElement,
  UnknownIndex,
  UnknownPoint,
  CycleDetected,
  MissingMap,
  UnexpectedMap,
  CoherenceViolation,
  LegIncoherent,
  SquareNotCommutative,
  NotAProbabilityMeasure,
  SpaceMismatch,
  MarginalMismatch,
  InconsistentFamily,
  EmptyLimit,
  DimensionMismatch,
  UnboundedInput,
  PointOutside,
  NotSurjectiveOntoQ,
  FaceBudgetExceeded,
  ConeNotOpenMulticommutative,
  NaturalityViolation,
  PreconditionMismatch,
  ParseError,
  InternalCheckFailed,
};

inline const char* ec_name(Ec code) {
  switch (code) {
    case Ec::DuplicateLabel: return "DuplicateLabel";
    case Ec::UnknownElement: return "UnknownElement";
    case Ec::UnknownIndex: return "UnknownIndex";
    case Ec::UnknownPoint: return "UnknownPoint";
    case Ec::CycleDetected: return "CycleDetected";
    case Ec::MissingMap: return "MissingMap";
    case Ec::UnexpectedMap: return "UnexpectedMap";
    case Ec::CoherenceViolation: return "CoherenceViolation";
    case Ec::LegIncoherent: return "LegIncoherent";
    case Ec::SquareNotCommutative: return "SquareNotCommutative";
    case Ec::NotAProbabilityMeasure: return "NotAProbabilityMeasure";
    case Ec::SpaceMismatch: return "SpaceMismatch";
    case Ec::MarginalMismatch: return "MarginalMismatch";
    case Ec::InconsistentFamily: return "InconsistentFamily";
    case Ec::EmptyLimit: return "EmptyLimit";
    case Ec::DimensionMismatch: return "DimensionMismatch";
    case Ec::UnboundedInput: return "UnboundedInput";
    case Ec::PointOutside: return "PointOutside";
    case Ec::NotSurjectiveOntoQ: return "NotSurjectiveOntoQ";
    case Ec::FaceBudgetExceeded: return "FaceBudgetExceeded";
    case Ec::ConeNotOpenMulticommutative: return "ConeNotOpenMulticommutative";
    case Ec::NaturalityViolation: return "NaturalityViolation";
    case Ec::PreconditionMismatch: return "PreconditionMismatch";
    case Ec::ParseError: return "ParseError";
    case Ec::InternalCheckFailed: return "InternalCheckFailed";
  }
  return "UnknownError";
}

// Domain errors carry a code so the CLI can map them onto exit codes
// without string matching.
class Error : public std::runtime_error {
public:
  Error(Ec code, const std::string& msg)
      : std::runtime_error(std::string(ec_name(code)) + ": " + msg), code_(code) {}

  Ec code() const { return code_; }

private:
  Ec code_;
};

[[noreturn]] inline void fail(Ec code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool ok, Ec code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace openchi
