#ifndef GNOE_RANDOM_HPP
#define GNOE_RANDOM_HPP

#include <cstdint>
#include <random>

namespace gnoe {

// mt19937_64 output is fixed by the standard; the helpers below avoid the
// library-specific distributions so seeded runs agree across toolchains.
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240601;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

inline std::int64_t uniform_between(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace gnoe

#endif  // GNOE_RANDOM_HPP
