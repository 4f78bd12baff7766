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

#ifndef BSSIM_GAUSSIAN_STATES_HPP
#define BSSIM_GAUSSIAN_STATES_HPP

// Fock-basis coefficients of the Gaussian states used throughout: two-mode
// squeezed vacuum, thermal marginals, squeezed vacuum and displaced squeezed
// vacuum. Operator conventions, fixed once for the whole library:
//
//   D(alpha) = exp(alpha b^dag - conj(alpha) b)
//   S(xi)    = exp[(xi/2) (b^dag^2 - b^2)],  xi real.
//
// With these, S(xi)|0> has the even-photon expansion
//   c_{2k} = sech(xi)^{1/2} tanh(xi)^k sqrt((2k)!) / (2^k k!),
// all coefficients real, c_2 > 0 for xi > 0. The sign pairing of the
// alternating squeezing vectors used by the circuit builders relies on this
// convention; the cross-checks against the operator-exponential oracle in
// the test suite pin it down behaviorally.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "bssim/errors.hpp"

namespace bssim {

/// Amplitude of |n>|n> in a two-mode squeezed vacuum of squeezing t:
/// sqrt(1 - t^2) t^n.
inline double tmss_coefficient(double t, int n) {
  if (t < 0.0 || t >= 1.0) throw domain_error("tmss squeezing outside [0,1)");
  if (n < 0) throw domain_error("negative photon number");
  return std::sqrt(1.0 - t * t) * std::pow(t, n);
}

/// Diagonal weight of |n><n| in the thermal state left after tracing one arm
/// of a two-mode squeezed vacuum: (1 - t^2) t^{2n}.
inline double thermal_diagonal(double t, int n) {
  if (t < 0.0 || t >= 1.0) throw domain_error("squeezing outside [0,1)");
  if (n < 0) throw domain_error("negative photon number");
  return (1.0 - t * t) * std::pow(t, 2 * n);
}

/// Fock coefficients c_0..c_nMax of S(xi)|0>. Odd coefficients vanish; the
/// closed-form c_0 = sech(xi)^{1/2} keeps the infinite state exactly
/// normalized, so the truncated vector carries 1 - sum |c_n|^2 of tail mass.
inline std::vector<double> squeezed_vacuum_coefficients(double xi, int n_max) {
  if (n_max < 0 || n_max % 2 != 0) {
    throw domain_error("squeezed-vacuum truncation must be even");
  }
  std::vector<double> c(n_max + 1, 0.0);
  const double lam = std::tanh(xi);
  c[0] = std::sqrt(1.0 / std::cosh(xi));
  for (int n = 0; n + 2 <= n_max; n += 2) {
    c[n + 2] = lam * std::sqrt(n + 1.0) / std::sqrt(n + 2.0) * c[n];
  }
  return c;
}

/// Fock coefficients of D(alpha)S(xi)|0>, by the eigenvalue recurrence of
/// mu b - nu b^dag (mu = cosh xi, nu = sinh xi), of which the state is an
/// eigenvector with eigenvalue mu alpha - nu conj(alpha):
///
///   mu sqrt(n+1) c_{n+1} = (mu alpha - nu conj(alpha)) c_n + nu sqrt(n) c_{n-1}
///
/// seeded by the closed-form overlap with the vacuum. Throws if the
/// truncation leaves more than ~1e-14 of probability in the last rungs.
inline std::vector<std::complex<double>> displaced_squeezed_coefficients(
    std::complex<double> alpha, double xi, int n_max) {
  if (n_max < 0) throw domain_error("negative truncation");
  const double mu = std::cosh(xi);
  const double nu = std::sinh(xi);
  std::vector<std::complex<double>> c(n_max + 1);
  c[0] = std::sqrt(1.0 / mu) *
         std::exp(-0.5 * std::norm(alpha) +
                  0.5 * std::conj(alpha) * std::conj(alpha) * std::tanh(xi));
  const std::complex<double> eigenvalue = mu * alpha - nu * std::conj(alpha);
  for (int n = 0; n < n_max; ++n) {
    std::complex<double> next = eigenvalue * c[n];
    if (n > 0) next += nu * std::sqrt(static_cast<double>(n)) * c[n - 1];
    c[n + 1] = next / (mu * std::sqrt(n + 1.0));
  }
  // Parity makes a single trailing coefficient uninformative at alpha = 0;
  // gate on the last two rungs.
  double edge = std::norm(c[n_max]);
  if (n_max >= 1) edge = std::max(edge, std::norm(c[n_max - 1]));
  if (edge >= 1e-14) {
    throw accuracy_error("displaced-squeezed truncation leaves visible tail mass");
  }
  return c;
}

/// Probability mass beyond a truncated coefficient vector (0 when the listed
/// coefficients already exhaust the state up to rounding).
template <typename Coeff>
inline double truncation_tail_mass(const std::vector<Coeff>& coeffs) {
  double captured = 0.0;
  for (const auto& c : coeffs) captured += std::norm(std::complex<double>(c));
  return std::max(0.0, 1.0 - captured);
}

/// Smallest even truncation for which D(alpha)S(xi)|0> passes the tail gate.
inline int displaced_squeezed_auto_cutoff(std::complex<double> alpha, double xi) {
  const double scale = std::norm(alpha) + std::abs(xi) * 4.0;
  int n = 24 + static_cast<int>(8.0 * scale);
  for (; n <= 512; n += 16) {
    try {
      displaced_squeezed_coefficients(alpha, xi, n);
      return n;
    } catch (const accuracy_error&) {
      continue;
    }
  }
  throw accuracy_error("no admissible truncation below 512 levels");
}

}  // namespace bssim

#endif  // BSSIM_GAUSSIAN_STATES_HPP
