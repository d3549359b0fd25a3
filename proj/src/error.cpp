#include "crosscap/error.hpp"

namespace crosscap {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NonUnimodular: return "NonUnimodular";
    case ErrorCode::ZeroDeterminant: return "ZeroDeterminant";
    case ErrorCode::SquareDiscriminant: return "SquareDiscriminant";
    case ErrorCode::NonPlanar: return "NonPlanar";
    case ErrorCode::Splittable: return "Splittable";
    case ErrorCode::TooFewRegions: return "TooFewRegions";
    case ErrorCode::NotTwoComponents: return "NotTwoComponents";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NonCyclic: return "NonCyclic";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::OddEuler: return "OddEuler";
    case ErrorCode::InfiniteH1: return "InfiniteH1";
    case ErrorCode::UnlinkExcluded: return "UnlinkExcluded";
    case ErrorCode::EmptyInterval: return "EmptyInterval";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace crosscap
