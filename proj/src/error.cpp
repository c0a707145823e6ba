#include "pegboard/error.hpp"

namespace pegboard {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::VerticalClass: return "VerticalClass";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoCrossings: return "NoCrossings";
    case ErrorCode::NonIntegralGrading: return "NonIntegralGrading";
    case ErrorCode::ParallelComponents: return "ParallelComponents";
    case ErrorCode::NotLoopType: return "NotLoopType";
    case ErrorCode::UnsupportedPattern: return "UnsupportedPattern";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::NotACrossing: return "NotACrossing";
    case ErrorCode::AsymmetricPair: return "AsymmetricPair";
    case ErrorCode::NotExtremal: return "NotExtremal";
    case ErrorCode::NotWrapped: return "NotWrapped";
    case ErrorCode::NotFlattened: return "NotFlattened";
    case ErrorCode::Stuck: return "Stuck";
    case ErrorCode::MissingSector: return "MissingSector";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace pegboard
