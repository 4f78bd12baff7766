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

#ifndef BSSIM_RANDOM_UNITARY_HPP
#define BSSIM_RANDOM_UNITARY_HPP

#include <cmath>
#include <cstddef>

#include "bssim/complex_matrix.hpp"
#include "bssim/rng.hpp"

namespace bssim {

/// Haar-random unitary: complex Gaussian (Ginibre) matrix orthonormalized
/// column by column. Gram-Schmidt leaves the triangular factor with a
/// positive diagonal, which is exactly the phase convention that makes the
/// orthonormalized factor Haar distributed. A second orthogonalization pass
/// pushes the unitarity defect to machine precision.
inline ComplexMatrix haar_unitary(std::size_t dim, RandomSeed seed) {
  if (dim == 0) throw dimension_error("haar_unitary needs dim >= 1");
  const CounterRng rng(seed);
  ComplexMatrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      g(i, j) = rng.complex_normal(i * dim + j);
    }
  }

  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex proj(0.0, 0.0);
        for (std::size_t i = 0; i < dim; ++i) {
          proj += std::conj(g(i, k)) * g(i, j);
        }
        for (std::size_t i = 0; i < dim; ++i) g(i, j) -= proj * g(i, k);
      }
      double norm2 = 0.0;
      for (std::size_t i = 0; i < dim; ++i) norm2 += std::norm(g(i, j));
      const double inv = 1.0 / std::sqrt(norm2);
      for (std::size_t i = 0; i < dim; ++i) g(i, j) *= inv;
    }
  }
  return g;
}

}  // namespace bssim

#endif  // BSSIM_RANDOM_UNITARY_HPP
