#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace expokit {

// Subsets of small carriers are bitmasks over element indices.
using Mask = std::uint64_t;

inline Mask full_mask(int n) { return n >= 64 ? ~Mask(0) : (Mask(1) << n) - 1; }
inline bool bit(Mask m, int i) { return (m >> i) & 1; }
inline int popcount(Mask m) { return __builtin_popcountll(m); }

struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct invalid_instance : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Default size cap for the exponential-time definitional checks.
// EXPOKIT_CAP overrides it process-wide.
int default_cap();

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw invalid_instance(msg);
}

}  // namespace expokit
