#pragma once

#include <stdexcept>
#include <string>

namespace ratdyn {

enum class ErrorCode {
  InvalidInput,
  DegreeTooLow,
  NonFinite,
  DivisionByZero,
  IndeterminateEvaluation,
  ValencyAmbiguous,
  RootFindingFailed,
  MultiplicityAmbiguous,
  AsymptoticValencyUndetermined,
  NotRepresentable,
  ExposureUndecided,
  UnresolvedContext,
  AtlasInvariant,
  RenderWindow,
  Io,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ratdyn
