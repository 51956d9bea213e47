#pragma once

#include <stdexcept>
#include <string>

namespace digspec {

enum class Errc {
  LoopArc,
  IndexOutOfRange,
  DuplicateArc,
  NotStronglyConnected,
  NotTransmissionRegular,
  NonSquare,
  NoConvergence,
  ExactModeUnavailable,
  NotAnEigenvalue,
  CardinalityMismatch,
  OrderMismatch,
  PerronNotSimple,
  DenominatorVanishes,
  HypothesisViolated,
  DegenerateDiscriminant,
  ShapeViolated,
  BadPrime,
  ParseError,
  InvalidArgument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace digspec
