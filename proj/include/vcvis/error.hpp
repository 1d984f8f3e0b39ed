#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vcvis {

enum class ErrorCode {
  kNotSimple,
  kTooFewVertices,
  kRepeatedVertex,
  kPointOutsidePolygon,
  kPointOnBoundary,
  kCutNotInPolygon,
  kPointOnCut,
  kEmptyRegion,
  kParseError,
  kValidationError,
  kIoError,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this one exception type; the
// code distinguishes the cases callers are expected to handle.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vcvis
