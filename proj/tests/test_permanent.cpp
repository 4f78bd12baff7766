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

#include "bssim/permanent.hpp"

#include <gtest/gtest.h>

#include "bssim/occupation_pattern.hpp"
#include "bssim/rng.hpp"
#include "support/testing.hpp"

using namespace bssim;
using bssim::testing::complex_near;

namespace {

ComplexMatrix random_complex(std::size_t n, std::uint64_t seed) {
  const CounterRng rng(RandomSeed{seed});
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.complex_normal(i * n + j);
  return m;
}

ComplexMatrix all_ones(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = 1.0;
  return m;
}

}  // namespace

TEST(PermanentNaive, HandPickedValues) {
  EXPECT_TRUE(complex_near(permanent_naive(ComplexMatrix{{1.0}}), 1.0, 0.0));
  EXPECT_TRUE(complex_near(permanent_naive(all_ones(2)), 2.0, 0.0));
  EXPECT_TRUE(
      complex_near(permanent_naive(ComplexMatrix::identity(3)), 1.0, 0.0));
}

TEST(PermanentNaive, Guards) {
  EXPECT_THROW(permanent_naive(ComplexMatrix(2, 3)), dimension_error);
  EXPECT_THROW(permanent_naive(ComplexMatrix(10, 10)), feasibility_error);
}

TEST(PermanentRyser, AllOnesGivesFactorial) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const Complex p = permanent_ryser(all_ones(n));
    EXPECT_TRUE(complex_near(p, factorial(static_cast<int>(n)),
                             1e-10 * factorial(static_cast<int>(n))));
  }
}

TEST(PermanentRyser, MatchesNaiveOnRandomComplexMatrices) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t n = 2 + seed % 6;  // up to 7x7
    const ComplexMatrix a = random_complex(n, 1000 + seed);
    const Complex naive = permanent_naive(a);
    const Complex ryser = permanent_ryser(a);
    EXPECT_LE(std::abs(ryser - naive), 1e-10 * (1.0 + std::abs(naive)));
  }
}

TEST(PermanentRyser, BalancedBeamSplitterCancels) {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix bs{{s, s}, {-s, s}};
  EXPECT_TRUE(complex_near(permanent_ryser(bs), 0.0, 1e-15));
}

TEST(PermanentRyser, EmptyMatrixIsOne) {
  EXPECT_TRUE(complex_near(permanent_ryser(ComplexMatrix(0, 0)), 1.0, 0.0));
}

TEST(PermanentRyser, Guards) {
  EXPECT_THROW(permanent_ryser(ComplexMatrix(3, 2)), dimension_error);
  EXPECT_THROW(permanent_ryser(ComplexMatrix(31, 31)), feasibility_error);
}

// The chunked evaluator must agree with the single-chunk path; n = 14 is the
// first size that splits into 64 chunks.
TEST(PermanentRyser, ChunkedPathConsistentWithGrayCodeIdentity) {
  const ComplexMatrix a = random_complex(14, 77);
  ComplexMatrix minor(13, 13);
  // Laplace expansion along the first row as an independent route.
  Complex expansion(0.0, 0.0);
  for (std::size_t j = 0; j < 14; ++j) {
    for (std::size_t r = 1; r < 14; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < 14; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = a(r, c);
      }
    }
    expansion += a(0, j) * permanent_ryser(minor);
  }
  const Complex direct = permanent_ryser(a);
  EXPECT_LE(std::abs(direct - expansion), 1e-9 * (1.0 + std::abs(expansion)));
}

TEST(Permanent, RowAndColumnPermutationInvariance) {
  const ComplexMatrix a = random_complex(5, 42);
  const Complex base = permanent_naive(a);
  ComplexMatrix rows_swapped = a;
  for (std::size_t c = 0; c < 5; ++c) {
    std::swap(rows_swapped(1, c), rows_swapped(3, c));
  }
  ComplexMatrix cols_swapped = a;
  for (std::size_t r = 0; r < 5; ++r) {
    std::swap(cols_swapped(r, 0), cols_swapped(r, 4));
  }
  EXPECT_TRUE(complex_near(permanent_naive(rows_swapped), base,
                           1e-12 * (1.0 + std::abs(base))));
  EXPECT_TRUE(complex_near(permanent_naive(cols_swapped), base,
                           1e-12 * (1.0 + std::abs(base))));
}

TEST(Permanent, MultilinearInRows) {
  const ComplexMatrix a = random_complex(4, 43);
  const Complex c(0.7, -1.3);
  ComplexMatrix scaled = a;
  for (std::size_t j = 0; j < 4; ++j) scaled(2, j) *= c;
  const Complex lhs = permanent_naive(scaled);
  const Complex rhs = c * permanent_naive(a);
  EXPECT_LE(std::abs(lhs - rhs), 1e-12 * (1.0 + std::abs(rhs)));
}

TEST(ReducedMatrix, AllOnesPatternsReturnInput) {
  const ComplexMatrix u = random_complex(3, 5);
  const OccupationPattern ones({1, 1, 1});
  const ComplexMatrix r = reduced_matrix(u, ones, ones);
  EXPECT_TRUE(bssim::testing::matrices_near(r, u, 0.0));
}

TEST(ReducedMatrix, SingleSurvivorPicksEntry) {
  const ComplexMatrix u = random_complex(2, 6);
  const ComplexMatrix r =
      reduced_matrix(u, OccupationPattern({0, 1}), OccupationPattern({1, 0}));
  ASSERT_EQ(r.rows(), 1u);
  EXPECT_EQ(r(0, 0), u(1, 0));
}

TEST(ReducedMatrix, RowRepetition) {
  const ComplexMatrix u = random_complex(2, 7);
  const ComplexMatrix r =
      reduced_matrix(u, OccupationPattern({2, 0}), OccupationPattern({1, 1}));
  ASSERT_EQ(r.rows(), 2u);
  EXPECT_EQ(r(0, 0), u(0, 0));
  EXPECT_EQ(r(0, 1), u(0, 1));
  EXPECT_EQ(r(1, 0), u(0, 0));
  EXPECT_EQ(r(1, 1), u(0, 1));
}

TEST(ReducedMatrix, ColumnRepetitionGeneralization) {
  const ComplexMatrix u = random_complex(2, 8);
  const ComplexMatrix r =
      reduced_matrix(u, OccupationPattern({1, 1}), OccupationPattern({0, 2}));
  ASSERT_EQ(r.cols(), 2u);
  EXPECT_EQ(r(0, 0), u(0, 1));
  EXPECT_EQ(r(0, 1), u(0, 1));
  EXPECT_EQ(r(1, 0), u(1, 1));
}

TEST(ReducedMatrix, MismatchedTotalsThrow) {
  const ComplexMatrix u = random_complex(2, 9);
  EXPECT_THROW(
      reduced_matrix(u, OccupationPattern({1, 0}), OccupationPattern({1, 1})),
      pattern_error);
  EXPECT_THROW(
      reduced_matrix(u, OccupationPattern({1}), OccupationPattern({1, 0})),
      dimension_error);
}
