// Copyright 2026 The bs-sim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BSSIM_RNG_HPP
#define BSSIM_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace bssim {

/// Seed for every randomized routine in the library. Identical seeds give
/// bit-identical unitaries and samples.
struct RandomSeed {
  std::uint64_t value = 0;
};

namespace detail {

// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Counter-based generator: the value at a counter depends only on
/// (seed, counter), so draws can be produced in any order or in parallel
/// without changing the stream.
class CounterRng {
 public:
  explicit CounterRng(RandomSeed seed) : seed_(seed.value) {}

  std::uint64_t bits(std::uint64_t counter) const {
    return detail::mix64(detail::mix64(seed_ ^ 0x5851f42d4c957f2dULL) + counter);
  }

  /// Uniform double in [0, 1).
  double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; consumes counters 2k and 2k+1.
  double normal(std::uint64_t k) const {
    const double u1 = 1.0 - uniform(2 * k);      // (0, 1]
    const double u2 = uniform(2 * k + 1);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Standard complex normal (unit total variance).
  std::complex<double> complex_normal(std::uint64_t k) const {
    const double u1 = 1.0 - uniform(2 * k);
    const double u2 = uniform(2 * k + 1);
    const double r = std::sqrt(-std::log(u1));   // variance 1/2 per quadrature
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
  }

 private:
  std::uint64_t seed_;
};

}  // namespace bssim

#endif  // BSSIM_RNG_HPP
