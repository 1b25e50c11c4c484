#include "weldlab/error.hpp"

namespace weldlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CoincidentEndpoints: return "CoincidentEndpoints";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::InvalidCase: return "InvalidCase";
    case ErrorCode::PairingViolation: return "PairingViolation";
    case ErrorCode::NonParabolicCycle: return "NonParabolicCycle";
    case ErrorCode::AtBreakpoint: return "AtBreakpoint";
    case ErrorCode::OutsideDomain: return "OutsideDomain";
    case ErrorCode::InconsistentDegree: return "InconsistentDegree";
    case ErrorCode::MarkovViolation: return "MarkovViolation";
    case ErrorCode::NotConjugable: return "NotConjugable";
    case ErrorCode::DepthTooSmall: return "DepthTooSmall";
    case ErrorCode::RankLimit: return "RankLimit";
    case ErrorCode::BlaschkeHasNoHole: return "BlaschkeHasNoHole";
    case ErrorCode::NonPlanar: return "NonPlanar";
    case ErrorCode::InconsistentInvolution: return "InconsistentInvolution";
    case ErrorCode::AmbiguousNesting: return "AmbiguousNesting";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::GluingInconsistency: return "GluingInconsistency";
    case ErrorCode::ZipNotSphere: return "ZipNotSphere";
    case ErrorCode::CrosscheckFailed: return "CrosscheckFailed";
    case ErrorCode::OverlapDetected: return "OverlapDetected";
    case ErrorCode::RelationMismatch: return "RelationMismatch";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace weldlab
