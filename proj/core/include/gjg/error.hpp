#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gjg {

enum class ErrorCode {
  InvalidOrder,         // not v >= k >= i >= 0
  DegenerateClass,      // operation undefined for this graph class
  NotNormalized,        // operation requires v >= 2k
  OutOfRange,           // intersection size or rank outside its domain
  Unsupported,          // operation not defined at these parameters
  NoCommonNeighbor,
  Disconnected,
  BudgetExceeded,       // C(v,k) larger than the oracle vertex budget
  InvalidSet,           // not a k-subset of {0,...,v-1}
  InvalidConfig,
  OracleInconsistency,  // sampled checks disagree; the graph is not what we think
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gjg
