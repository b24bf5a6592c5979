#pragma once

#include <stdexcept>
#include <string>

namespace zf {

// Every recoverable failure in the library carries one of these codes so
// callers can branch without string matching.
enum class Errc {
  // graph construction
  EndpointOutOfRange,
  SelfLoop,
  // graph6 codec
  MalformedHeader,
  TruncatedBitVector,
  NonPrintableByte,
  // exponential solvers
  InstanceTooLarge,
  // structure / certification preconditions
  IsK4,
  NotClawFreeCubic,
  Disconnected,
  PartitionFailure,
  NotSimpleCubic,
  StuckNoEligibleVertex,
  PreconditionBreach,
  // generators
  BadParameter,
  InvalidSpec,
  Unsatisfiable,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace zf
