#pragma once

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

namespace lbkit::testing {

// LBKIT_SEED pins the fuzzing seed; otherwise a fixed default keeps runs
// reproducible anyway. The seed is echoed once so failures can be replayed.
inline std::uint64_t seed() {
  static const std::uint64_t value = [] {
    std::uint64_t s = 20261019;
    if (const char* env = std::getenv("LBKIT_SEED"); env && *env) s = std::stoull(env);
    std::cerr << "LBKIT_SEED=" << s << "\n";
    return s;
  }();
  return value;
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

inline int uniform(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

}  // namespace lbkit::testing
