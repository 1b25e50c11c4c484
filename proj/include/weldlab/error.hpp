#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weldlab {

enum class ErrorCode {
  CoincidentEndpoints,
  NotDisjoint,
  DegenerateInput,
  InvalidCase,
  PairingViolation,
  NonParabolicCycle,
  AtBreakpoint,
  OutsideDomain,
  InconsistentDegree,
  MarkovViolation,
  NotConjugable,
  DepthTooSmall,
  RankLimit,
  BlaschkeHasNoHole,
  NonPlanar,
  InconsistentInvolution,
  AmbiguousNesting,
  DegreeMismatch,
  VerificationFailed,
  PreconditionViolation,
  GluingInconsistency,
  ZipNotSphere,
  CrosscheckFailed,
  OverlapDetected,
  RelationMismatch,
  NotHyperbolic,
  SchemaError,
  UsageError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace weldlab
