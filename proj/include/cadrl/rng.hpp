#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string_view>
#include <vector>

namespace cadrl {

using Rng = std::mt19937_64;

namespace detail {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

// Derives an independent seed from a root seed, a stream name and an index.
// Every source of randomness in the project draws from a named substream so
// components can be re-seeded without disturbing each other.
inline std::uint64_t derive_seed(std::uint64_t root, std::string_view name,
                                 std::uint64_t index = 0) {
  std::uint64_t h = detail::splitmix64(root ^ 0x6a09e667f3bcc908ULL);
  for (const char c : name) {
    h = detail::splitmix64(h ^ static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
  }
  return detail::splitmix64(h ^ detail::splitmix64(index));
}

inline Rng make_rng(std::uint64_t root, std::string_view name, std::uint64_t index = 0) {
  return Rng{derive_seed(root, name, index)};
}

// Uniform double in [lo, hi). Implemented on the raw engine output so results
// do not depend on the standard library's distribution internals.
inline double uniform_double(Rng& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

// Uniform integer in [lo, hi], inclusive.
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v = rng();
  while (v >= limit) {
    v = rng();
  }
  return lo + static_cast<std::int64_t>(v % span);
}

// k distinct indices drawn uniformly from [0, n), returned sorted so that
// downstream floating-point reductions are order-stable.
inline std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<std::size_t> out;
  if (k >= n) {
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = i;
    }
    return out;
  }
  // Floyd's algorithm.
  std::vector<bool> taken(n, false);
  out.reserve(k);
  for (std::size_t i = n - k; i < n; ++i) {
    const auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(i)));
    if (taken[j]) {
      taken[i] = true;
      out.push_back(i);
    } else {
      taken[j] = true;
      out.push_back(j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cadrl
