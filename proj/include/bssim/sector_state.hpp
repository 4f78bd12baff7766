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

#ifndef BSSIM_SECTOR_STATE_HPP
#define BSSIM_SECTOR_STATE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "bssim/complex_matrix.hpp"
#include "bssim/occupation_pattern.hpp"
#include "bssim/permanent.hpp"

namespace bssim {

/// Fock-space amplitude of scattering `in` to `out` through the mode
/// unitary `u`:  Perm(u reduced by out/in) / sqrt(prod out_i! prod in_i!).
/// Photon number is conserved exactly; mismatched totals are an error.
inline Complex transition_amplitude(const ComplexMatrix& u,
                                    const OccupationPattern& out,
                                    const OccupationPattern& in) {
  if (out.modes() != u.rows() || in.modes() != u.cols()) {
    throw dimension_error("pattern length does not match unitary dimension");
  }
  if (out.total() != in.total()) {
    throw pattern_error("photon number not conserved between in and out");
  }
  if (in.total() == 0) return {1.0, 0.0};
  const Complex perm = permanent_ryser(reduced_matrix(u, out, in));
  return perm / std::sqrt(pattern_factorial(out) * pattern_factorial(in));
}

/// State vector restricted to a fixed total photon number. Amplitudes are
/// indexed by enumerate_patterns order. Linear optics never mixes sectors,
/// so this truncation is exact, not approximate.
class SectorState {
 public:
  SectorState(std::size_t modes, int photons)
      : modes_(modes),
        photons_(photons),
        amps_(pattern_count(modes, photons), Complex(0.0, 0.0)) {}

  /// Basis state |pattern>.
  static SectorState basis(const OccupationPattern& pattern) {
    SectorState s(pattern.modes(), pattern.total());
    s.amps_[pattern_rank(pattern)] = 1.0;
    return s;
  }

  std::size_t modes() const { return modes_; }
  int photons() const { return photons_; }
  std::size_t dim() const { return amps_.size(); }

  Complex& operator[](std::size_t i) { return amps_[i]; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  Complex amplitude(const OccupationPattern& p) const {
    return amps_[pattern_rank(p)];
  }
  void set_amplitude(const OccupationPattern& p, Complex a) {
    amps_[pattern_rank(p)] = a;
  }

  double norm() const {
    double n2 = 0.0;
    for (const auto& a : amps_) n2 += std::norm(a);
    return std::sqrt(n2);
  }

  SectorState& normalize() {
    const double n = norm();
    if (n == 0.0) throw domain_error("cannot normalize the zero state");
    for (auto& a : amps_) a /= n;
    return *this;
  }

 private:
  std::size_t modes_;
  int photons_;
  std::vector<Complex> amps_;
};

/// <a|b>.
inline Complex sector_overlap(const SectorState& a, const SectorState& b) {
  if (a.modes() != b.modes() || a.photons() != b.photons()) {
    throw pattern_error("overlap of states from different sectors");
  }
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    acc += std::conj(a[i]) * b[i];
  }
  return acc;
}

/// Exact dense action of a mode unitary on a sector state: every output
/// amplitude is the transition-amplitude-weighted sum over all input
/// patterns. Quadratic in the sector dimension, which is the point -- this
/// is the brute-force oracle the closed forms are checked against.
inline SectorState apply_interferometer(const SectorState& state,
                                        const ComplexMatrix& u) {
  if (u.rows() != state.modes() || !u.is_square()) {
    throw dimension_error("unitary dimension does not match mode count");
  }
  const auto patterns = enumerate_patterns(state.modes(), state.photons());
  SectorState out(state.modes(), state.photons());
  for (std::size_t k = 0; k < patterns.size(); ++k) {
    Complex acc(0.0, 0.0);
    for (std::size_t n = 0; n < patterns.size(); ++n) {
      if (state[n] == Complex(0.0, 0.0)) continue;
      acc += transition_amplitude(u, patterns[k], patterns[n]) * state[n];
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace bssim

#endif  // BSSIM_SECTOR_STATE_HPP
