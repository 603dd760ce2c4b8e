#pragma once

#include <stdexcept>
#include <string>

namespace mgh {

enum class ErrorCode {
  MalformedMatrix = 1,
  WrongClass,
  InvalidStructure,
  DimensionMismatch,
  MalformedTriangulation,
  UnsupportedCurve,
  BasePointOnLeaf,
  InvalidLamination,
  NotConverged,
  OutOfDomain,
  LiftFailure,
  DegenerateHorizon,
  AmbiguousSide,
  CoordinateSingularity,
  NoChartWitness,
  Parse,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace mgh
