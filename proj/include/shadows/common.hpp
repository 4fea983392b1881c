#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace shadows {

enum class ErrorCode {
  NonBijectiveAttachment,
  DisconnectedSingularSet,
  ValenceViolation,
  TraceIncomplete,
  TooManyRegions,
  StepBudgetExceeded,
  SiteMismatch,
  UnbranchableInverse,
  ScaleMismatch,
  DanglingEdge,
  TorsionObstruction,
  TorsionCheckFailed,
  ReplayFailure,
  BudgetExceeded,
  PreconditionViolated,
  ParityViolation,
  ParseError,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class ShadowError : public std::runtime_error {
 public:
  ShadowError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// A permutation of {0,1,2,3}; p[i] is the image of i.
using Perm4 = std::array<int, 4>;

inline Perm4 perm_identity() { return {0, 1, 2, 3}; }

inline Perm4 perm_inverse(const Perm4& p) {
  Perm4 q{};
  for (int i = 0; i < 4; ++i) q[p[i]] = i;
  return q;
}

// (a∘b)(i) = a(b(i))
inline Perm4 perm_compose(const Perm4& a, const Perm4& b) {
  Perm4 c{};
  for (int i = 0; i < 4; ++i) c[i] = a[b[i]];
  return c;
}

}  // namespace shadows
