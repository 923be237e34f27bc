#include "locdom/errors.hpp"

namespace locdom {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidEdge: return "InvalidEdge";
    case Errc::LoopRejected: return "LoopRejected";
    case Errc::MalformedGraph6: return "MalformedGraph6";
    case Errc::Unsupported: return "Unsupported";
    case Errc::MissingOrder: return "MissingOrder";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::RefusedScale: return "RefusedScale";
    case Errc::DomainViolation: return "DomainViolation";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NotMaximal: return "NotMaximal";
    case Errc::NotGood: return "NotGood";
    case Errc::Infeasible: return "Infeasible";
    case Errc::AssertionFailure: return "AssertionFailure";
    case Errc::TwinsPresent: return "TwinsPresent";
  }
  return "Unknown";
}

}  // namespace locdom
