#ifndef POINCARE21_RNG_HPP
#define POINCARE21_RNG_HPP

// Stateless counter-based generator: every draw is a pure function of
// (seed, index, slot), so sampling is reproducible and can be sharded
// across workers without coordination.

#include <cstdint>
#include <cmath>

namespace poincare21 {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t z)
{
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
} // namespace detail

class CounterRng {
public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t index, std::uint64_t slot = 0) const
  {
    std::uint64_t z = detail::splitmix64(seed_ ^ 0x6A09E667F3BCC909ull);
    z = detail::splitmix64(z ^ index);
    z = detail::splitmix64(z ^ (slot * 0x2545F4914F6CDD1Dull + 1));
    return z;
  }

  /// Uniform double in [0, 1).
  double uniform(std::uint64_t index, std::uint64_t slot = 0) const
  {
    return static_cast<double>(bits(index, slot) >> 11) * 0x1.0p-53;
  }

  double uniform(std::uint64_t index, std::uint64_t slot, double lo, double hi) const
  {
    return lo + (hi - lo) * uniform(index, slot);
  }

  /// Standard normal via Box-Muller; consumes slots (slot, slot+1).
  double gaussian(std::uint64_t index, std::uint64_t slot = 0) const
  {
    constexpr double two_pi = 6.28318530717958647692;
    const double u1 = uniform(index, slot);
    const double u2 = uniform(index, slot + 1);
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    return r * std::cos(two_pi * u2);
  }

  std::uint64_t seed() const { return seed_; }

private:
  std::uint64_t seed_;
};

} // namespace poincare21

#endif
