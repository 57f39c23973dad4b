#pragma once

#include <cstdint>

namespace gdstream {

// C(n, k) as a double; 0 when n < k.
constexpr double choose(double n, int k) noexcept {
  if (n < k || k < 0) return 0.0;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Decorrelates seeds derived from a base seed and small indices.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) noexcept {
  return splitmix64(base ^ splitmix64(a ^ splitmix64(b)));
}

}  // namespace gdstream
