#include "digspec/error.hpp"

namespace digspec {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::LoopArc: return "LoopArc";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DuplicateArc: return "DuplicateArc";
    case Errc::NotStronglyConnected: return "NotStronglyConnected";
    case Errc::NotTransmissionRegular: return "NotTransmissionRegular";
    case Errc::NonSquare: return "NonSquare";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::ExactModeUnavailable: return "ExactModeUnavailable";
    case Errc::NotAnEigenvalue: return "NotAnEigenvalue";
    case Errc::CardinalityMismatch: return "CardinalityMismatch";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::PerronNotSimple: return "PerronNotSimple";
    case Errc::DenominatorVanishes: return "DenominatorVanishes";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::DegenerateDiscriminant: return "DegenerateDiscriminant";
    case Errc::ShapeViolated: return "ShapeViolated";
    case Errc::BadPrime: return "BadPrime";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace digspec
