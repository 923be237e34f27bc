#pragma once

#include "locdom/errors.hpp"

namespace locdom::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kTwinsPresent = 3,
  kRefusedScale = 4,
  kBoundViolation = 5,
  kInvalidParameter = 6,
};

inline int exit_code_for(Errc code) {
  switch (code) {
    case Errc::InvalidEdge:
    case Errc::LoopRejected:
    case Errc::MalformedGraph6:
    case Errc::MissingOrder:
    case Errc::ParseError:
      return kParseError;
    case Errc::TwinsPresent:
      return kTwinsPresent;
    case Errc::RefusedScale:
    case Errc::Unsupported:
      return kRefusedScale;
    case Errc::InvalidParameter:
      return kInvalidParameter;
    default:
      return kFailure;
  }
}

}  // namespace locdom::cli
