#include "gjg/error.hpp"

namespace gjg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::DegenerateClass: return "DegenerateClass";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::NoCommonNeighbor: return "NoCommonNeighbor";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidSet: return "InvalidSet";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::OracleInconsistency: return "OracleInconsistency";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace gjg
