#pragma once

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace repkit {

// Raised when a computation would exceed the configured size or step caps.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMaxDim = 100000;
inline constexpr int kDefaultIterationCap = 64;

// Total-dimension cap for inputs of expensive operations; REPKIT_MAX_DIM overrides.
inline std::size_t max_total_dim() {
  if (const char* s = std::getenv("REPKIT_MAX_DIM")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxDim;
}

inline void check_dim_guard(std::size_t total, const char* what) {
  if (total > max_total_dim())
    throw GuardError(std::string(what) + ": total dimension " + std::to_string(total) + " exceeds cap " +
                     std::to_string(max_total_dim()));
}

}  // namespace repkit
