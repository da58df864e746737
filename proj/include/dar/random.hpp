#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dar {

inline constexpr std::uint64_t default_seed = 20150601;

// Uniform integer in [0, bound). Written out rather than using
// std::uniform_int_distribution so seeded runs agree across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = uniform_below(rng, i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace dar
