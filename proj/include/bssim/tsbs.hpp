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

#ifndef BSSIM_TSBS_HPP
#define BSSIM_TSBS_HPP

// Photon-counting distributions of twofold scattershot sampling: M squeezed
// pair sources, one arm of each pair through circuit U_A, the other through
// U_B, counting coincidence patterns (k on side A, m on side B).
//
// With equal pair squeezing t the joint probability factorizes as
//
//   p(k and m) = (1-t^2)^M t^{2N} |sum_n <k|U_A|n><m|U_B|n>|^2,
//
// the herald marginal p(m) = (1-t^2)^M t^{2N} is circuit independent (a
// linear-optical circuit leaves the equal-temperature thermal marginal
// unchanged), and the conditional p(k|m) carries no squeezing dependence at
// all. Back-propagating side B turns the conditional into a single-circuit
// single-photon scattering probability: the Fock-basis transposition
// identity <n|W^T|m> = <m|W|n> collapses the two-sided sum onto the mode
// matrix U_A U_B^T, whose reduced permanents give p(k|m) directly.

#include <cmath>
#include <cstddef>
#include <vector>

#include "bssim/circuits.hpp"
#include "bssim/complex_matrix.hpp"
#include "bssim/gaussian_states.hpp"
#include "bssim/sector_state.hpp"

namespace bssim {

/// Source and circuit description of a twofold scattershot experiment.
struct TsbsConfig {
  ComplexMatrix u_a;
  ComplexMatrix u_b;
  std::vector<double> squeezings;  // per-pair t_j in [0, 1)

  TsbsConfig(ComplexMatrix ua, ComplexMatrix ub, std::vector<double> t)
      : u_a(std::move(ua)), u_b(std::move(ub)), squeezings(std::move(t)) {
    if (!u_a.is_square() || !u_b.is_square() || u_a.rows() != u_b.rows()) {
      throw dimension_error("side circuits must be square and equally sized");
    }
    if (squeezings.size() != u_a.rows()) {
      throw dimension_error("one squeezing parameter per pair required");
    }
    if (!is_unitary(u_a, 1e-12) || !is_unitary(u_b, 1e-12)) {
      throw domain_error("side circuits must be unitary");
    }
    for (double t : squeezings) {
      if (t < 0.0 || t >= 1.0) throw domain_error("squeezing outside [0,1)");
    }
  }

  static TsbsConfig equal_squeezing(ComplexMatrix ua, ComplexMatrix ub,
                                    double t) {
    const std::size_t m = ua.rows();
    return TsbsConfig(std::move(ua), std::move(ub),
                      std::vector<double>(m, t));
  }

  std::size_t modes() const { return u_a.rows(); }

  bool has_equal_squeezing() const {
    for (double t : squeezings) {
      if (t != squeezings[0]) return false;
    }
    return true;
  }
};

namespace detail {

// The squeezing-free two-sided amplitude sum_n <k|U_A|n><m|U_B|n> over the
// shared photon-number sector.
inline Complex two_sided_amplitude(const TsbsConfig& cfg,
                                   const OccupationPattern& k,
                                   const OccupationPattern& m) {
  const int photons = k.total();
  const auto patterns = enumerate_patterns(cfg.modes(), photons);
  Complex acc(0.0, 0.0);
  for (const auto& n : patterns) {
    acc += transition_amplitude(cfg.u_a, k, n) *
           transition_amplitude(cfg.u_b, m, n);
  }
  return acc;
}

inline void check_pattern_sizes(const TsbsConfig& cfg,
                                const OccupationPattern& k,
                                const OccupationPattern& m) {
  if (k.modes() != cfg.modes() || m.modes() != cfg.modes()) {
    throw pattern_error("pattern length does not match the mode count");
  }
}

}  // namespace detail

/// Herald marginal p(m) = prod_j (1-t^2) * t^{2 total(m)}. Exact for any
/// occupation pattern: the traced-out input is a thermal product state, and
/// equal temperatures make it invariant under the circuit.
inline double marginal_probability(const TsbsConfig& cfg,
                                   const OccupationPattern& m) {
  if (m.modes() != cfg.modes()) {
    throw pattern_error("pattern length does not match the mode count");
  }
  if (!cfg.has_equal_squeezing()) {
    throw closed_form_error(
        "closed-form marginal needs equal squeezing; sum the joint instead");
  }
  const double t = cfg.squeezings[0];
  double prefactor = 1.0;
  for (std::size_t j = 0; j < cfg.modes(); ++j) prefactor *= 1.0 - t * t;
  return prefactor * std::pow(t, 2 * m.total());
}

/// Conditional p(k|m) for equal squeezing. Carries no squeezing dependence;
/// conditioning on a zero-probability herald is an error rather than 0/0.
inline double conditional_probability(const TsbsConfig& cfg,
                                      const OccupationPattern& k,
                                      const OccupationPattern& m) {
  detail::check_pattern_sizes(cfg, k, m);
  if (!cfg.has_equal_squeezing()) {
    throw closed_form_error("conditional distribution needs equal squeezing");
  }
  if (k.total() != m.total()) return 0.0;
  if (cfg.squeezings[0] == 0.0 && m.total() > 0) {
    throw conditioning_error("herald pattern has probability zero at t = 0");
  }
  return std::norm(detail::two_sided_amplitude(cfg, k, m));
}

/// Joint probability of counting k on side A and m on side B. Equal
/// squeezing factorizes exactly into marginal * conditional; unequal
/// squeezing keeps the per-pattern monomial inside the sum.
inline double joint_probability_general(const TsbsConfig& cfg,
                                        const OccupationPattern& k,
                                        const OccupationPattern& m) {
  detail::check_pattern_sizes(cfg, k, m);
  if (k.total() != m.total()) return 0.0;  // photon conservation

  if (cfg.has_equal_squeezing()) {
    const double p_m = marginal_probability(cfg, m);
    if (p_m == 0.0) return 0.0;
    return p_m * std::norm(detail::two_sided_amplitude(cfg, k, m));
  }

  const int photons = k.total();
  double prefactor = 1.0;
  for (double t : cfg.squeezings) prefactor *= 1.0 - t * t;
  const auto patterns = enumerate_patterns(cfg.modes(), photons);
  Complex acc(0.0, 0.0);
  for (const auto& n : patterns) {
    double monomial = 1.0;
    for (std::size_t j = 0; j < cfg.modes(); ++j) {
      monomial *= std::pow(cfg.squeezings[j], n[j]);
    }
    acc += monomial * transition_amplitude(cfg.u_a, k, n) *
           transition_amplitude(cfg.u_b, m, n);
  }
  return prefactor * std::norm(acc);
}

/// Single-photon scattering probability of the time-unfolded setup: |m> fed
/// through the combined circuit U_A U_B^T, counted as pattern k. Transposing
/// (not conjugating) the B matrix is what reproduces the two-sided
/// conditional exactly.
inline double unfolded_probability(const ComplexMatrix& u_a,
                                   const ComplexMatrix& u_b,
                                   const OccupationPattern& k,
                                   const OccupationPattern& m) {
  if (k.total() != m.total()) {
    throw pattern_error("photon number not conserved between herald and output");
  }
  const ComplexMatrix combined = u_a * u_b.transpose();
  const Complex perm = permanent_ryser(reduced_matrix(combined, k, m));
  return std::norm(perm) / (pattern_factorial(k) * pattern_factorial(m));
}

namespace detail {

inline bool is_alternating(const std::vector<double>& xi) {
  if (xi.empty() || xi.size() % 2 != 0) return false;
  const double mag = std::abs(xi[0]);
  for (std::size_t i = 0; i < xi.size(); i += 2) {
    if (xi[i] != -xi[i + 1]) return false;
    if (std::abs(xi[i]) != mag) return false;
  }
  return true;
}

// Recover the side circuits from a composed 2M-mode squeezed-pair unitary:
// strip the beam-splitter layer and the routing, then read the diagonal
// blocks.
inline std::pair<ComplexMatrix, ComplexMatrix> split_tsbs_unitary(
    const ComplexMatrix& u2m) {
  if (!u2m.is_square() || u2m.rows() % 2 != 0 || u2m.rows() == 0) {
    throw dimension_error("composed circuit must be square of even size");
  }
  const std::size_t pairs = u2m.rows() / 2;
  ComplexMatrix bs_layer(2 * pairs, 2 * pairs);
  const ComplexMatrix bs = beamsplitter_unitary();
  for (std::size_t i = 0; i < pairs; ++i) {
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c)
        bs_layer(2 * i + r, 2 * i + c) = bs(r, c);
  }
  const ComplexMatrix sides = u2m * bs_layer.adjoint() *
                              pair_routing_permutation(pairs).transpose();
  ComplexMatrix u_a(pairs, pairs), u_b(pairs, pairs);
  double off_block = 0.0;
  for (std::size_t r = 0; r < pairs; ++r) {
    for (std::size_t c = 0; c < pairs; ++c) {
      u_a(r, c) = sides(r, c);
      u_b(r, c) = sides(pairs + r, pairs + c);
      off_block = std::max(off_block, std::abs(sides(r, pairs + c)));
      off_block = std::max(off_block, std::abs(sides(pairs + r, c)));
    }
  }
  if (off_block > 1e-10) {
    throw domain_error("matrix is not a composed squeezed-pair circuit");
  }
  return {std::move(u_a), std::move(u_b)};
}

}  // namespace detail

/// Product of single-mode squeezed vacua restricted to a fixed total photon
/// number. Exact projection: only this sector contributes to a photon count
/// with that total.
inline SectorState squeezed_input_sector(const std::vector<double>& xi,
                                         int total_photons) {
  const std::size_t modes = xi.size();
  std::vector<std::vector<double>> coeffs;
  coeffs.reserve(modes);
  const int cutoff = total_photons + (total_photons % 2);
  for (double x : xi) {
    coeffs.push_back(squeezed_vacuum_coefficients(x, cutoff));
  }
  SectorState state(modes, total_photons);
  const auto patterns = enumerate_patterns(modes, total_photons);
  for (std::size_t idx = 0; idx < patterns.size(); ++idx) {
    double amp = 1.0;
    for (std::size_t j = 0; j < modes; ++j) {
      amp *= coeffs[j][patterns[idx][j]];
    }
    state[idx] = amp;
  }
  return state;
}

/// Closed-form joint photon-counting probability of the squeezed-vacuum
/// sampling circuit (2M single-mode squeezed inputs of alternating sign,
/// pairwise beam splitters, side circuits): with t = tanh|xi|,
///
///   p(k and m) = (1-t^2)^M t^{2N} |Perm (U_A U_B^T)_{k,m}|^2 / (k! m!)
///
/// Cross-checkable against the sector-projected Fock oracle built from
/// squeezed_input_sector + apply_interferometer.
inline double squeezed_joint_probability(const ComplexMatrix& u2m,
                                         const std::vector<double>& xi,
                                         const OccupationPattern& k,
                                         const OccupationPattern& m) {
  if (!detail::is_alternating(xi)) {
    throw closed_form_error(
        "closed form needs alternating +xi/-xi squeezing of equal magnitude");
  }
  const auto [u_a, u_b] = detail::split_tsbs_unitary(u2m);
  if (xi.size() != u2m.rows()) {
    throw dimension_error("squeezing vector length must match mode count");
  }
  if (k.modes() != u_a.rows() || m.modes() != u_a.rows()) {
    throw pattern_error("pattern length does not match the pair count");
  }
  if (k.total() != m.total()) return 0.0;
  const double t = std::tanh(std::abs(xi[0]));
  const std::size_t pairs = u_a.rows();
  double prefactor = std::pow(t, 2 * k.total());
  for (std::size_t j = 0; j < pairs; ++j) prefactor *= 1.0 - t * t;
  return prefactor * unfolded_probability(u_a, u_b, k, m);
}

}  // namespace bssim

#endif  // BSSIM_TSBS_HPP
