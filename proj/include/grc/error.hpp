#pragma once

#include <stdexcept>
#include <string>

namespace grc {

enum class Errc {
  KeyOutsideSpace,
  MassExceedsOne,
  NegativeEntry,
  ShapeMismatch,
  NotColumnSubstochastic,
  NotSubpermutation,
  NotAPartition,
  NotPartitioned,
  NotDeterministic,
  NotClosedTransformation,
  UnknownGate,
  InvalidMultiplicity,
  ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  Errc code() const { return code_; }
  // The message without the code prefix, for rewrapping with context.
  const std::string& detail() const { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace grc
