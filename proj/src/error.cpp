#include "shapetop/error.hpp"

namespace shapetop {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateElement: return "DegenerateElement";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::MemberNotPart: return "MemberNotPart";
    case ErrorCode::EmptyGenerator: return "EmptyGenerator";
    case ErrorCode::DoesNotExhaust: return "DoesNotExhaust";
    case ErrorCode::GeneratorBudgetExceeded: return "GeneratorBudgetExceeded";
    case ErrorCode::AlreadyOpen: return "AlreadyOpen";
    case ErrorCode::NotABasis: return "NotABasis";
    case ErrorCode::NotATopology: return "NotATopology";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::SingularAffine: return "SingularAffine";
    case ErrorCode::NotOnto: return "NotOnto";
    case ErrorCode::NotContinuous: return "NotContinuous";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooManyFragments: return "TooManyFragments";
    case ErrorCode::EmptyShape: return "EmptyShape";
  }
  return "Unknown";
}

}  // namespace shapetop
