#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sigfrac {

enum class Errc {
  DuplicateEdge,
  LoopEdge,
  VertexOutOfRange,
  OverlappingDistanceSets,
  NTooSmall,
  DistanceOutOfRange,
  ZeroK,
  SizeLimitExceeded,
  DimensionMismatch,
  UnknownSet,
  InvalidSignedSet,
  BadParameters,
  InfeasibleClique,
  HostMismatch,
  ParseError,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::OverlappingDistanceSets: return "OverlappingDistanceSets";
    case Errc::NTooSmall: return "NTooSmall";
    case Errc::DistanceOutOfRange: return "DistanceOutOfRange";
    case Errc::ZeroK: return "ZeroK";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::UnknownSet: return "UnknownSet";
    case Errc::InvalidSignedSet: return "InvalidSignedSet";
    case Errc::BadParameters: return "BadParameters";
    case Errc::InfeasibleClique: return "InfeasibleClique";
    case Errc::HostMismatch: return "HostMismatch";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library. The code identifies the violated
/// precondition; the message carries the offending values.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sigfrac
