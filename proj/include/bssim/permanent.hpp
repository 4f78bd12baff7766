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

#ifndef BSSIM_PERMANENT_HPP
#define BSSIM_PERMANENT_HPP

#include <atomic>
#include <bit>
#include <cstdint>
#include <thread>
#include <vector>

#include "bssim/complex_matrix.hpp"
#include "bssim/occupation_pattern.hpp"

namespace bssim {

/// Permanent by explicit permutation sum, O(n!). Serves as the independent
/// oracle for the Ryser evaluator; capped at n = 9 to keep the factorial
/// blow-up harmless.
inline Complex permanent_naive(const ComplexMatrix& a) {
  if (!a.is_square()) throw dimension_error("permanent needs a square matrix");
  const std::size_t n = a.rows();
  if (n > 9) throw feasibility_error("permanent_naive capped at n = 9");
  if (n == 0) return {1.0, 0.0};

  Complex total(0.0, 0.0);
  // Depth-first over permutations, tracking used columns in a bitmask.
  auto rec = [&](auto&& self, std::size_t row, std::uint32_t used,
                 Complex prod) -> void {
    if (row == n) {
      total += prod;
      return;
    }
    for (std::size_t col = 0; col < n; ++col) {
      if (used & (1u << col)) continue;
      self(self, row + 1, used | (1u << col), prod * a(row, col));
    }
  };
  rec(rec, 0, 0u, Complex(1.0, 0.0));
  return total;
}

namespace detail {

// Ryser partial sum over the Gray-coded subset range [begin, end) of the
// nonempty-subset indices 1..2^n-1. Row sums are rebuilt at the chunk start
// and updated by single-column increments inside the chunk, so the value of
// a chunk does not depend on which worker runs it.
inline Complex ryser_chunk(const ComplexMatrix& a, std::uint64_t begin,
                           std::uint64_t end) {
  const std::size_t n = a.rows();
  std::vector<Complex> row_sum(n, Complex(0.0, 0.0));
  std::uint64_t gray = begin ^ (begin >> 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (gray & (1ULL << j)) {
      for (std::size_t i = 0; i < n; ++i) row_sum[i] += a(i, j);
    }
  }
  int parity = std::popcount(gray) & 1;
  Complex acc(0.0, 0.0);
  for (std::uint64_t k = begin;;) {
    Complex prod(1.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) prod *= row_sum[i];
    acc += parity ? -prod : prod;
    if (++k >= end) break;
    const std::size_t j = std::countr_zero(k);
    const std::uint64_t bit = 1ULL << j;
    gray ^= bit;
    const double sign = (gray & bit) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < n; ++i) row_sum[i] += sign * a(i, j);
    parity ^= 1;
  }
  return acc;
}

inline Complex tree_reduce(std::vector<Complex> v) {
  while (v.size() > 1) {
    std::vector<Complex> next;
    next.reserve((v.size() + 1) / 2);
    for (std::size_t i = 0; i < v.size(); i += 2) {
      next.push_back(i + 1 < v.size() ? v[i] + v[i + 1] : v[i]);
    }
    v = std::move(next);
  }
  return v.empty() ? Complex(0.0, 0.0) : v[0];
}

}  // namespace detail

/// Permanent by Ryser's inclusion-exclusion with Gray-code row-sum updates,
/// O(2^n n). The subset range is split into chunks whose boundaries depend
/// only on n; partials are combined by a fixed tree reduction, so the result
/// is bit-identical for any worker count.
inline Complex permanent_ryser(const ComplexMatrix& a) {
  if (!a.is_square()) throw dimension_error("permanent needs a square matrix");
  const std::size_t n = a.rows();
  if (n > 30) throw feasibility_error("permanent_ryser capped at n = 30");
  if (n == 0) return {1.0, 0.0};

  const std::uint64_t subsets_end = 1ULL << n;  // indices 1 .. 2^n - 1
  const std::size_t num_chunks = n < 14 ? 1 : 64;
  std::vector<std::uint64_t> bounds(num_chunks + 1);
  for (std::size_t c = 0; c <= num_chunks; ++c) {
    bounds[c] = 1 + ((subsets_end - 1) * c) / num_chunks;
  }

  std::vector<Complex> partials(num_chunks);
  if (num_chunks == 1) {
    partials[0] = detail::ryser_chunk(a, 1, subsets_end);
  } else {
    std::atomic<std::size_t> next_chunk{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t c = next_chunk.fetch_add(1);
        if (c >= num_chunks) return;
        partials[c] = detail::ryser_chunk(a, bounds[c], bounds[c + 1]);
      }
    };
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::min<unsigned>(hw, num_chunks); ++t) {
      pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) t.join();
  }

  const Complex sum = detail::tree_reduce(std::move(partials));
  return (n & 1) ? -sum : sum;
}

/// Submatrix of `u` for a transition: row j of `u` repeated rowPattern[j]
/// times and column i repeated colPattern[i] times, modes in ascending
/// order. Both patterns must carry the same photon total.
inline ComplexMatrix reduced_matrix(const ComplexMatrix& u,
                                    const OccupationPattern& row_pattern,
                                    const OccupationPattern& col_pattern) {
  if (row_pattern.modes() != u.rows() || col_pattern.modes() != u.cols()) {
    throw dimension_error("pattern length does not match matrix shape");
  }
  const int n = row_pattern.total();
  if (n != col_pattern.total()) {
    throw pattern_error("photon totals of row and column patterns differ");
  }
  std::vector<std::size_t> rows, cols;
  rows.reserve(n);
  cols.reserve(n);
  for (std::size_t i = 0; i < row_pattern.modes(); ++i) {
    for (int r = 0; r < row_pattern[i]; ++r) rows.push_back(i);
  }
  for (std::size_t j = 0; j < col_pattern.modes(); ++j) {
    for (int r = 0; r < col_pattern[j]; ++r) cols.push_back(j);
  }
  ComplexMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out(r, c) = u(rows[r], cols[c]);
    }
  }
  return out;
}

}  // namespace bssim

#endif  // BSSIM_PERMANENT_HPP
