#include "paratop/error.hpp"

namespace paratop {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotATopology: return "NotATopology";
    case ErrorCode::EmptyCarrier: return "EmptyCarrier";
    case ErrorCode::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorCode::NotT0: return "NotT0";
    case ErrorCode::DuplicateChosenPoints: return "DuplicateChosenPoints";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::NegativeBound: return "NegativeBound";
    case ErrorCode::EqualElements: return "EqualElements";
    case ErrorCode::RadiusTooLarge: return "RadiusTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace paratop
