#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace clustercat {

enum class ErrorCode {
  EqualEndpoints,
  NeighbouringEndpoints,
  InvalidPoint,
  PreconditionViolated,
  NoExtension,
  NotInTriangulation,
  NoFlipAvailable,
  InvalidTriangulation,
  ApproximationFailure,
  MixedTriangulations,
  NotRigidTriangulation,
  NotRigidObject,
  MutationMismatch,
  ParseError,
  IoError,
};

std::string_view error_name(ErrorCode code);

// All domain failures surface as this exception; `code()` names the failure
// the way the CLI reports it.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace clustercat
