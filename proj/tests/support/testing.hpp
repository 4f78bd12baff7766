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

#ifndef BSSIM_TESTS_SUPPORT_TESTING_HPP
#define BSSIM_TESTS_SUPPORT_TESTING_HPP

#include <complex>
#include <gtest/gtest.h>

#include "bssim/complex_matrix.hpp"

namespace bssim::testing {

inline ::testing::AssertionResult complex_near(std::complex<double> actual,
                                               std::complex<double> expected,
                                               double tol) {
  const double d = std::abs(actual - expected);
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure()
         << "expected " << expected.real() << "+" << expected.imag()
         << "i, got " << actual.real() << "+" << actual.imag()
         << "i (|diff| = " << d << ", tol = " << tol << ")";
}

inline ::testing::AssertionResult matrices_near(const ComplexMatrix& a,
                                                const ComplexMatrix& b,
                                                double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return ::testing::AssertionFailure() << "shape mismatch";
  }
  const double d = (a - b).max_abs();
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure()
         << "max entry deviation " << d << " exceeds " << tol;
}

}  // namespace bssim::testing

#endif  // BSSIM_TESTS_SUPPORT_TESTING_HPP
