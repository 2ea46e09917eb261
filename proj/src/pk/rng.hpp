#pragma once

#include <cstdint>

#include "pk/common.hpp"

namespace pk {

// splitmix64; fixed sequence independent of the standard library so that
// seeded runs reproduce bit-identically everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int lo, int hi) {  // inclusive range
    return lo + int(next_u64() % std::uint64_t(hi - lo + 1));
  }
  cplx unit() {
    double phi = uniform(0.0, 6.283185307179586476925286766559);
    return {std::cos(phi), std::sin(phi)};
  }
  cplx disk(double rlo, double rhi) { return uniform(rlo, rhi) * unit(); }

 private:
  std::uint64_t state_;
};

}  // namespace pk
