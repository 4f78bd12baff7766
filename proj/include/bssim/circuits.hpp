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

#ifndef BSSIM_CIRCUITS_HPP
#define BSSIM_CIRCUITS_HPP

#include <cmath>
#include <cstddef>

#include "bssim/complex_matrix.hpp"

namespace bssim {

/// Balanced beam splitter, (1/sqrt2) [[1, 1], [-1, 1]].
inline ComplexMatrix beamsplitter_unitary() {
  const double s = 1.0 / std::sqrt(2.0);
  return ComplexMatrix{{s, s}, {-s, s}};
}

/// Routing layer of the two-sided squeezed-pair circuit: the two outputs of
/// pair i (modes 2i-1, 2i in 1-based counting) are sent to A-side mode i and
/// B-side mode M+i respectively.
inline ComplexMatrix pair_routing_permutation(std::size_t pairs) {
  ComplexMatrix p(2 * pairs, 2 * pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    p(i, 2 * i) = 1.0;              // upper pair output -> side A
    p(pairs + i, 2 * i + 1) = 1.0;  // lower pair output -> side B
  }
  return p;
}

/// 2M-mode unitary of the squeezed-vacuum sampling circuit: a layer of
/// balanced beam splitters on mode pairs, the pair routing above, then U_A
/// on the first M modes and U_B on the last M.
inline ComplexMatrix build_tsbs_unitary(const ComplexMatrix& u_a,
                                        const ComplexMatrix& u_b) {
  if (!u_a.is_square() || !u_b.is_square() || u_a.rows() != u_b.rows()) {
    throw dimension_error("side circuits must be square and of equal size");
  }
  if (!is_unitary(u_a, 1e-12) || !is_unitary(u_b, 1e-12)) {
    throw domain_error("side circuits must be unitary");
  }
  const std::size_t pairs = u_a.rows();
  ComplexMatrix bs_layer(2 * pairs, 2 * pairs);
  const ComplexMatrix bs = beamsplitter_unitary();
  for (std::size_t i = 0; i < pairs; ++i) {
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c)
        bs_layer(2 * i + r, 2 * i + c) = bs(r, c);
  }
  return direct_sum(u_a, u_b) * pair_routing_permutation(pairs) * bs_layer;
}

/// Alternating squeezing vector {+xi, -xi, ..., +xi, -xi} for M pairs:
/// odd modes carry +xi, even modes -xi (1-based).
inline std::vector<double> alternating_squeezings(std::size_t pairs, double xi) {
  std::vector<double> v(2 * pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    v[2 * i] = xi;
    v[2 * i + 1] = -xi;
  }
  return v;
}

}  // namespace bssim

#endif  // BSSIM_CIRCUITS_HPP
