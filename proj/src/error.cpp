#include "grc/error.hpp"

namespace grc {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::KeyOutsideSpace: return "KeyOutsideSpace";
    case Errc::MassExceedsOne: return "MassExceedsOne";
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotColumnSubstochastic: return "NotColumnSubstochastic";
    case Errc::NotSubpermutation: return "NotSubpermutation";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::NotPartitioned: return "NotPartitioned";
    case Errc::NotDeterministic: return "NotDeterministic";
    case Errc::NotClosedTransformation: return "NotClosedTransformation";
    case Errc::UnknownGate: return "UnknownGate";
    case Errc::InvalidMultiplicity: return "InvalidMultiplicity";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace grc
