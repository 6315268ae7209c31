#include "lmi/errors.hpp"

namespace lmi {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::NotSymmetricL: return "NotSymmetricL";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::EmptyRegion: return "EmptyRegion";
    case ErrorCode::OutOfInterval: return "OutOfInterval";
    case ErrorCode::SingularSymM: return "SingularSymM";
    case ErrorCode::NotDefinite: return "NotDefinite";
    case ErrorCode::ContainsOrigin: return "ContainsOrigin";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NotReducible: return "NotReducible";
    case ErrorCode::NotCone: return "NotCone";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ShapeError: return "ShapeError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

}  // namespace lmi
