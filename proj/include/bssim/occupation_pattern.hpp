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

#ifndef BSSIM_OCCUPATION_PATTERN_HPP
#define BSSIM_OCCUPATION_PATTERN_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "bssim/errors.hpp"

namespace bssim {

/// Per-mode photon counts. Heralding patterns are binary; intermediate
/// patterns in sector sums may hold any nonnegative occupation.
class OccupationPattern {
 public:
  OccupationPattern() = default;
  explicit OccupationPattern(std::vector<int> occupations)
      : occ_(std::move(occupations)) {
    for (int n : occ_) {
      if (n < 0) throw pattern_error("negative occupation");
    }
  }
  OccupationPattern(std::initializer_list<int> occupations)
      : OccupationPattern(std::vector<int>(occupations)) {}

  static OccupationPattern zeros(std::size_t modes) {
    return OccupationPattern(std::vector<int>(modes, 0));
  }

  std::size_t modes() const { return occ_.size(); }
  int operator[](std::size_t i) const { return occ_[i]; }
  int& operator[](std::size_t i) { return occ_[i]; }
  const std::vector<int>& occupations() const { return occ_; }

  int total() const { return std::accumulate(occ_.begin(), occ_.end(), 0); }

  bool is_binary() const {
    for (int n : occ_) {
      if (n > 1) return false;
    }
    return true;
  }

  /// Concatenation, e.g. joining an A-side and a B-side pattern.
  OccupationPattern concat(const OccupationPattern& tail) const {
    std::vector<int> v = occ_;
    v.insert(v.end(), tail.occ_.begin(), tail.occ_.end());
    return OccupationPattern(std::move(v));
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < occ_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(occ_[i]);
    }
    return s;
  }

  auto operator<=>(const OccupationPattern&) const = default;

 private:
  std::vector<int> occ_;
};

namespace detail {

inline std::uint64_t checked_mul_div(std::uint64_t acc, std::uint64_t num,
                                     std::uint64_t den) {
  // acc * num / den where the division is exact; guards against overflow.
  const std::uint64_t q = acc / den;
  const std::uint64_t r = acc % den;
  if (num != 0 && q > UINT64_MAX / num) {
    throw feasibility_error("binomial coefficient overflows 64 bits");
  }
  return q * num + r * num / den;
}

}  // namespace detail

/// Exact binomial coefficient C(n, k) in 64-bit arithmetic.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = detail::checked_mul_div(acc, n - k + i, i);
  }
  return acc;
}

/// Number of occupation patterns of `photons` photons in `modes` modes.
inline std::uint64_t pattern_count(std::size_t modes, int photons) {
  if (modes == 0) return photons == 0 ? 1 : 0;
  return binomial(static_cast<std::uint64_t>(photons) + modes - 1, modes - 1);
}

/// All patterns of `photons` photons in `modes` modes, ordered from
/// (N,0,...,0) down to (0,...,0,N). The ordering is the canonical one used
/// for sector-state indexing and serialization.
inline std::vector<OccupationPattern> enumerate_patterns(std::size_t modes,
                                                         int photons) {
  if (modes == 0) throw pattern_error("zero modes");
  if (photons < 0) throw pattern_error("negative photon number");
  std::vector<OccupationPattern> out;
  out.reserve(pattern_count(modes, photons));
  std::vector<int> c(modes, 0);
  c[0] = photons;
  for (;;) {
    out.push_back(OccupationPattern(c));
    // Successor: decrement the rightmost nonzero entry left of the last
    // mode and flush everything to its right into the next slot.
    std::size_t i = modes - 1;
    bool found = false;
    while (i-- > 0) {
      if (c[i] > 0) {
        found = true;
        break;
      }
    }
    if (!found) break;
    int rest = 1;
    for (std::size_t j = i + 1; j < modes; ++j) {
      rest += c[j];
      c[j] = 0;
    }
    c[i] -= 1;
    c[i + 1] = rest;
  }
  return out;
}

/// Index of `p` in enumerate_patterns(p.modes(), p.total()).
inline std::uint64_t pattern_rank(const OccupationPattern& p) {
  const std::size_t modes = p.modes();
  int remaining = p.total();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i + 1 < modes; ++i) {
    // Patterns whose ith entry exceeds p[i] come first.
    for (int c = p[i] + 1; c <= remaining; ++c) {
      rank += pattern_count(modes - i - 1, remaining - c);
    }
    remaining -= p[i];
  }
  return rank;
}

inline OccupationPattern pattern_unrank(std::size_t modes, int photons,
                                        std::uint64_t rank) {
  std::vector<int> c(modes, 0);
  int remaining = photons;
  for (std::size_t i = 0; i + 1 < modes; ++i) {
    for (int v = remaining; v >= 0; --v) {
      const std::uint64_t block = pattern_count(modes - i - 1, remaining - v);
      if (rank < block) {
        c[i] = v;
        remaining -= v;
        break;
      }
      rank -= block;
    }
  }
  c[modes - 1] = remaining;
  return OccupationPattern(std::move(c));
}

/// n! as a double (exact through 22!, ample for desk-scale photon counts).
inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Product of per-mode factorials, the bosonic normalization of a pattern.
inline double pattern_factorial(const OccupationPattern& p) {
  double f = 1.0;
  for (std::size_t i = 0; i < p.modes(); ++i) f *= factorial(p[i]);
  return f;
}

}  // namespace bssim

#endif  // BSSIM_OCCUPATION_PATTERN_HPP
