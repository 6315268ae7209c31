#pragma once

#include <stdexcept>
#include <string>

namespace lmi {

enum class ErrorCode {
  NotSymmetric,
  NotSkewSymmetric,
  NoConvergence,
  NotPositiveDefinite,
  DimensionMismatch,
  Singular,
  NotOrthogonal,
  NotSymmetricL,
  ZeroScale,
  ParameterOutOfRange,
  EmptyRegion,
  OutOfInterval,
  SingularSymM,
  NotDefinite,
  ContainsOrigin,
  IndexOutOfRange,
  NotNormal,
  NotCommuting,
  NotReducible,
  NotCone,
  InvalidArgument,
  IoError,
  ParseError,
  ShapeError,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lmi
