#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lefschetz {

enum class Errc {
  NotSquare,
  DimensionMismatch,
  ZeroCoefficient,
  InvalidIdeal,
  CapExceeded,
  NotArtinianWithinCap,
  NotGorensteinShape,
  BetaRange,
  GammaRange,
  ACOrder,
  InvalidSemigroup,
  NotInSemigroup,
  Parse,
  InvalidArgument,
};

inline const char* errc_name(Errc e) {
  switch (e) {
    case Errc::NotSquare: return "NotSquare";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ZeroCoefficient: return "ZeroCoefficient";
    case Errc::InvalidIdeal: return "InvalidIdeal";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotArtinianWithinCap: return "NotArtinianWithinCap";
    case Errc::NotGorensteinShape: return "NotGorensteinShape";
    case Errc::BetaRange: return "BetaRange";
    case Errc::GammaRange: return "GammaRange";
    case Errc::ACOrder: return "ACOrder";
    case Errc::InvalidSemigroup: return "InvalidSemigroup";
    case Errc::NotInSemigroup: return "NotInSemigroup";
    case Errc::Parse: return "Parse";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Single exception type for the library; `code()` tells callers what went wrong.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failure carrying the byte offset into the input text.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(Errc::Parse, "at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lefschetz
