#pragma once

#include <cstdlib>
#include <string>

#include "sigfrac/errors.hpp"

namespace sigfrac {

/// Largest vertex count accepted by exhaustive signed-independent-set
/// enumeration. Sets are bit masks over the signed double cover (2n bits),
/// hence the hard ceiling of 32.
inline constexpr int kDefaultEnumerationLimit = 20;
inline constexpr int kHardEnumerationLimit = 32;

/// The environment variable SIGFRAC_MAX_VERTICES overrides the default.
inline int enumeration_limit() {
  if (const char* env = std::getenv("SIGFRAC_MAX_VERTICES")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      return v > kHardEnumerationLimit ? kHardEnumerationLimit : static_cast<int>(v);
    }
  }
  return kDefaultEnumerationLimit;
}

inline void require_enumerable(int n, const char* what) {
  int limit = enumeration_limit();
  if (n > limit) {
    throw Error(Errc::SizeLimitExceeded, std::string(what) + ": " + std::to_string(n) +
                                             " vertices exceeds limit " + std::to_string(limit));
  }
}

}  // namespace sigfrac
