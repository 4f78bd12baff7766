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

#ifndef BSSIM_HOMODYNE_HPP
#define BSSIM_HOMODYNE_HPP

// Eight-port homodyne measurement after a linear interferometer. Each output
// mode is mixed with vacuum on a beam splitter of reflectivity rho_i and
// transmissivity tau_i, and the rescaled quadratures q_i, p_i of the two
// emerging ports are read out. The measurement projects mode i onto the
// displaced squeezed state |alpha_i, xi_i> with alpha_i = (q_i + i p_i)/sqrt2
// and xi_i = ln(tau_i/rho_i), so the outcome density for Fock input `n`
// through circuit U_G is
//
//   p(q, p) = (2 pi)^{-modes} |<prod_i alpha_i, xi_i| U_G |n>|^2.
//
// The normalization constant comes from per-mode POVM completeness
// (1/pi) int d^2alpha |alpha,xi><alpha,xi| = 1 with d^2alpha = dq dp / 2;
// it is validated numerically by the test suite rather than assumed. Since
// the input has a definite photon number and the circuit conserves it, only
// the matching Fock sector of the measured product state contributes: the
// evaluation below is exact up to rounding, with truncation entering only
// through the per-mode tail-mass bookkeeping.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "bssim/circuits.hpp"
#include "bssim/complex_matrix.hpp"
#include "bssim/embedding.hpp"
#include "bssim/gaussian_states.hpp"
#include "bssim/parallel.hpp"
#include "bssim/permanent.hpp"
#include "bssim/quadrature.hpp"
#include "bssim/sector_state.hpp"

namespace bssim {

/// Per-mode beam-splitter parameters of the measurement layer.
class EightPortSpec {
 public:
  EightPortSpec(std::vector<double> rho, std::vector<double> tau)
      : rho_(std::move(rho)), tau_(std::move(tau)) {
    if (rho_.empty() || rho_.size() != tau_.size()) {
      throw dimension_error("one (rho, tau) pair per measured mode");
    }
    for (std::size_t i = 0; i < rho_.size(); ++i) {
      if (!(rho_[i] > 0.0 && rho_[i] < 1.0 && tau_[i] > 0.0 && tau_[i] < 1.0)) {
        throw domain_error("reflectivities must lie strictly inside (0, 1)");
      }
      if (std::abs(tau_[i] * tau_[i] + rho_[i] * rho_[i] - 1.0) > 1e-12) {
        throw domain_error("tau^2 + rho^2 must equal 1");
      }
    }
  }

  /// Spec with prescribed induced squeezings xi_i = ln(tau_i/rho_i).
  static EightPortSpec from_squeezings(const std::vector<double>& xi) {
    std::vector<double> rho(xi.size()), tau(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) {
      rho[i] = 1.0 / std::sqrt(1.0 + std::exp(2.0 * xi[i]));
      tau[i] = std::exp(xi[i]) * rho[i];
    }
    return EightPortSpec(std::move(rho), std::move(tau));
  }

  /// Alternating layout {+xi, -xi, ...} over `pairs` mode pairs; equivalent
  /// to choosing the reflectivities so that rho_i = tau_{i+1}.
  static EightPortSpec alternating(std::size_t pairs, double xi) {
    return from_squeezings(alternating_squeezings(pairs, xi));
  }

  std::size_t modes() const { return rho_.size(); }
  double rho(std::size_t i) const { return rho_[i]; }
  double tau(std::size_t i) const { return tau_[i]; }
  double xi(std::size_t i) const { return std::log(tau_[i] / rho_[i]); }

  std::vector<double> squeezings() const {
    std::vector<double> v(modes());
    for (std::size_t i = 0; i < modes(); ++i) v[i] = xi(i);
    return v;
  }

 private:
  std::vector<double> rho_;
  std::vector<double> tau_;
};

/// One continuous measurement record: the rescaled quadratures of every
/// measured mode.
struct HomodyneOutcome {
  std::vector<double> q;
  std::vector<double> p;

  static HomodyneOutcome origin(std::size_t modes) {
    return {std::vector<double>(modes, 0.0), std::vector<double>(modes, 0.0)};
  }

  std::complex<double> alpha0(std::size_t i) const {
    return std::complex<double>(q[i], p[i]) / std::sqrt(2.0);
  }
};

/// Half-open interval (lo, hi].
struct Interval {
  double lo;
  double hi;
  double length() const { return hi - lo; }
};

/// Segment w_j of the phase-space discretization: odd labels walk the
/// positive half-line, even labels the negative one, each of length
/// sqrt(eta); together they tile the real line without overlap.
inline Interval segment(int j, double eta) {
  if (eta <= 0.0) throw domain_error("box parameter eta must be positive");
  if (j < 0) throw domain_error("segment labels are nonnegative");
  const double half_step = std::sqrt(eta) / 2.0;
  if (j % 2 == 1) return {j * half_step, (j + 2) * half_step};
  return {(-j - 1) * half_step, (-j + 1) * half_step};
}

/// Box label: segment indices for every q and p axis plus the area
/// parameter. Per-mode box area is eta (side sqrt(eta) per quadrature).
struct BoxIndex {
  std::vector<int> r;  // q-axis segment labels
  std::vector<int> s;  // p-axis segment labels
  double eta = 0.0;

  static BoxIndex central(std::size_t modes, double eta) {
    return {std::vector<int>(modes, 0), std::vector<int>(modes, 0), eta};
  }
};

namespace detail {

// Per-mode constants of a measured displaced-squeezed projector.
struct MeasuredMode {
  double mu;         // cosh xi
  double nu;         // sinh xi
  double lambda;     // tanh xi
  double sqrt_sech;  // sech(xi)^{1/2}

  explicit MeasuredMode(double xi)
      : mu(std::cosh(xi)),
        nu(std::sinh(xi)),
        lambda(std::tanh(xi)),
        sqrt_sech(std::sqrt(1.0 / std::cosh(xi))) {}
};

// Fock coefficients of D(alpha)S(xi)|0>, grown until the captured
// probability mass reaches 1 - 1e-13 (the closed-form seed keeps the
// infinite state exactly normalized, so the partial sums converge to one).
// `levels_cap` bounds the truncation; hitting it is an accuracy error.
inline void measured_state_coefficients(const MeasuredMode& mode, Complex alpha,
                                        int min_levels, int levels_cap,
                                        std::vector<Complex>& c) {
  const Complex eigenvalue = mode.mu * alpha - mode.nu * std::conj(alpha);
  c.clear();
  c.push_back(mode.sqrt_sech *
              std::exp(-0.5 * std::norm(alpha) +
                       0.5 * std::conj(alpha) * std::conj(alpha) * mode.lambda));
  double captured = std::norm(c[0]);
  for (int n = 0;; ++n) {
    Complex next = eigenvalue * c[n];
    if (n > 0) next += mode.nu * std::sqrt(static_cast<double>(n)) * c[n - 1];
    c.push_back(next / (mode.mu * std::sqrt(n + 1.0)));
    const int top = n + 1;
    captured += std::norm(c[top]);
    if (top >= min_levels && captured > 1.0 - 1e-13) break;
    if (top >= levels_cap) {
      throw accuracy_error("measured-state truncation cap leaves tail mass");
    }
  }
}

inline std::vector<Complex> measured_state_coefficients(Complex alpha, double xi,
                                                        int min_levels,
                                                        int levels_cap) {
  std::vector<Complex> c;
  measured_state_coefficients(MeasuredMode(xi), alpha, min_levels, levels_cap, c);
  return c;
}

}  // namespace detail

/// Prepared outcome-density evaluator for one (measurement, circuit, input)
/// triple. The input state is evolved once; each outcome then costs one
/// coefficient recurrence per mode and one sector overlap.
class HomodyneDensity {
 public:
  HomodyneDensity(EightPortSpec spec, const ComplexMatrix& u_g,
                  OccupationPattern input, int levels_cap = 600)
      : spec_(std::move(spec)),
        levels_cap_(levels_cap),
        input_(std::move(input)),
        patterns_(enumerate_patterns(spec_.modes(), input_.total())),
        evolved_(apply_interferometer(SectorState::basis(input_), u_g)) {
    if (u_g.rows() != spec_.modes() || input_.modes() != spec_.modes()) {
      throw dimension_error("spec, circuit and input mode counts must agree");
    }
    norm_const_ = std::pow(2.0 * std::numbers::pi,
                           -static_cast<double>(spec_.modes()));
    modes_params_.reserve(spec_.modes());
    for (std::size_t i = 0; i < spec_.modes(); ++i) {
      modes_params_.emplace_back(spec_.xi(i));
    }
  }

  std::size_t modes() const { return spec_.modes(); }
  const EightPortSpec& spec() const { return spec_; }
  int total_photons() const { return input_.total(); }

  /// Density per unit prod_i dq_i dp_i at the given outcome.
  double operator()(const HomodyneOutcome& outcome) const {
    if (outcome.q.size() != modes() || outcome.p.size() != modes()) {
      throw dimension_error("outcome length does not match mode count");
    }
    const int total = input_.total();
    thread_local std::vector<std::vector<Complex>> coeffs;
    if (coeffs.size() < modes()) coeffs.resize(modes());
    for (std::size_t i = 0; i < modes(); ++i) {
      detail::measured_state_coefficients(modes_params_[i], outcome.alpha0(i),
                                          total, levels_cap_, coeffs[i]);
    }
    Complex overlap(0.0, 0.0);
    for (std::size_t idx = 0; idx < patterns_.size(); ++idx) {
      Complex bra(1.0, 0.0);
      for (std::size_t i = 0; i < modes(); ++i) {
        bra *= coeffs[i][patterns_[idx][i]];
      }
      overlap += std::conj(bra) * evolved_[idx];
    }
    return norm_const_ * std::norm(overlap);
  }

  double at_origin() const { return (*this)(HomodyneOutcome::origin(modes())); }

  /// Largest per-mode truncation tail of the measured product state at the
  /// given outcome (metadata for result reporting).
  double tail_mass(const HomodyneOutcome& outcome) const {
    double worst = 0.0;
    for (std::size_t i = 0; i < modes(); ++i) {
      const auto c = detail::measured_state_coefficients(
          outcome.alpha0(i), spec_.xi(i), input_.total(), levels_cap_);
      worst = std::max(worst, truncation_tail_mass(c));
    }
    if (worst > 1e-12) {
      throw accuracy_error("measured-state tail mass above 1e-12");
    }
    return worst;
  }

 private:
  EightPortSpec spec_;
  int levels_cap_;
  OccupationPattern input_;
  std::vector<OccupationPattern> patterns_;
  SectorState evolved_;
  double norm_const_;
  std::vector<detail::MeasuredMode> modes_params_;
};

/// One-shot density evaluation (see HomodyneDensity for repeated outcomes).
inline double outcome_density(const EightPortSpec& spec, const ComplexMatrix& u_g,
                              const OccupationPattern& input,
                              const HomodyneOutcome& outcome,
                              int levels_cap = 600) {
  return HomodyneDensity(spec, u_g, input, levels_cap)(outcome);
}

/// Density at the all-zero outcome for the coincidence input pattern (k, m).
inline double origin_density(const EightPortSpec& spec, const ComplexMatrix& u_g,
                             const OccupationPattern& k,
                             const OccupationPattern& m) {
  return HomodyneDensity(spec, u_g, k.concat(m)).at_origin();
}

/// Probability of one phase-space box by tensor-product Gauss-Legendre
/// quadrature. Restricted to a single mode pair (two measured modes, a
/// four-dimensional integral); larger instances are rejected as infeasible.
/// With `verify_convergence` the integral is recomputed at twice the order
/// and must move by less than 1e-8.
inline double box_probability(const HomodyneDensity& density, const BoxIndex& box,
                              int order = 16, bool verify_convergence = true) {
  if (density.modes() != 2) {
    throw feasibility_error(
        "box integration is limited to one mode pair (4 dimensions)");
  }
  if (box.r.size() != 2 || box.s.size() != 2) {
    throw dimension_error("box label length does not match mode count");
  }
  if (order < 16) throw domain_error("quadrature order below 16");

  auto integrate = [&](int ord) {
    const Interval iq0 = segment(box.r[0], box.eta);
    const Interval iq1 = segment(box.r[1], box.eta);
    const Interval ip0 = segment(box.s[0], box.eta);
    const Interval ip1 = segment(box.s[1], box.eta);
    const QuadratureRule q0 = gauss_legendre_on(ord, iq0.lo, iq0.hi);
    const QuadratureRule q1 = gauss_legendre_on(ord, iq1.lo, iq1.hi);
    const QuadratureRule p0 = gauss_legendre_on(ord, ip0.lo, ip0.hi);
    const QuadratureRule p1 = gauss_legendre_on(ord, ip1.lo, ip1.hi);
    // Outer axis fans out to workers; per-slice sums are combined in axis
    // order, so the value is independent of the worker count.
    return parallel_indexed_sum(ord, [&](std::size_t a) {
      HomodyneOutcome outcome{{q0.nodes[a], 0.0}, {0.0, 0.0}};
      double slice = 0.0;
      for (int b = 0; b < ord; ++b) {
        outcome.q[1] = q1.nodes[b];
        for (int c = 0; c < ord; ++c) {
          outcome.p[0] = p0.nodes[c];
          double inner = 0.0;
          for (int d = 0; d < ord; ++d) {
            outcome.p[1] = p1.nodes[d];
            inner += p1.weights[d] * density(outcome);
          }
          slice += q1.weights[b] * p0.weights[c] * inner;
        }
      }
      return q0.weights[a] * slice;
    });
  };

  const double coarse = integrate(order);
  if (!verify_convergence) return coarse;
  const double fine = integrate(2 * order);
  if (std::abs(fine - coarse) > 1e-8) {
    throw accuracy_error("box quadrature did not converge under order doubling");
  }
  return fine;
}

inline double box_probability(const EightPortSpec& spec, const ComplexMatrix& u_g,
                              const OccupationPattern& input, const BoxIndex& box,
                              int order = 16, bool verify_convergence = true) {
  return box_probability(HomodyneDensity(spec, u_g, input), box, order,
                         verify_convergence);
}

/// Small-box model of the central-box probability: leading volume term plus
/// the second-order correction assembled from the mixed quadrature
/// curvatures,  eta^modes * rho(0) + eta^(modes+2)/24 * quadSum.
inline double origin_box_expansion(double eta, std::size_t modes,
                                   double density0, double quad_sum) {
  return std::pow(eta, static_cast<double>(modes)) * density0 +
         std::pow(eta, static_cast<double>(modes) + 2.0) / 24.0 * quad_sum;
}

/// Mixed second derivative d^2 rho / dq_i dp_j at the origin by central
/// finite differences with one step-halving extrapolation.
inline double mixed_curvature(const HomodyneDensity& density, std::size_t i,
                              std::size_t j, double h = 0.05) {
  auto stencil = [&](double step) {
    HomodyneOutcome o = HomodyneOutcome::origin(density.modes());
    double acc = 0.0;
    for (int sq : {+1, -1}) {
      for (int sp : {+1, -1}) {
        o.q[i] = sq * step;
        o.p[j] = sp * step;
        acc += sq * sp * density(o);
      }
    }
    return acc / (4.0 * step * step);
  };
  const double coarse = stencil(h);
  const double fine = stencil(h / 2.0);
  return (4.0 * fine - coarse) / 3.0;
}

/// Sum of all mixed q-p curvatures at the origin. For the alternating
/// squeezed-pair configurations the individual terms are generally nonzero
/// but the full sum cancels; it is kept as the second-order coefficient of
/// the small-box model regardless.
inline double mixed_curvature_sum(const HomodyneDensity& density, double h = 0.05) {
  double total = 0.0;
  for (std::size_t i = 0; i < density.modes(); ++i) {
    for (std::size_t j = 0; j < density.modes(); ++j) {
      total += mixed_curvature(density, i, j, h);
    }
  }
  return total;
}

/// Numerical check that a single measured mode's outcome density integrates
/// to one. Escalates the tensor Gauss-Legendre order until the value is
/// stable to 1e-9.
inline double density_normalization_integral(const EightPortSpec& spec,
                                             const ComplexMatrix& u_g,
                                             const OccupationPattern& input,
                                             double half_width = 16.0) {
  if (spec.modes() != 1) {
    throw feasibility_error("normalization scan implemented for one mode");
  }
  const HomodyneDensity density(spec, u_g, input);
  double previous = -1.0;
  for (int order : {48, 64, 96, 128, 160}) {
    const QuadratureRule rule =
        gauss_legendre_on(order, -half_width, half_width);
    HomodyneOutcome o{{0.0}, {0.0}};
    double acc = 0.0;
    for (int a = 0; a < order; ++a) {
      o.q[0] = rule.nodes[a];
      double inner = 0.0;
      for (int b = 0; b < order; ++b) {
        o.p[0] = rule.nodes[b];
        inner += rule.weights[b] * density(o);
      }
      acc += rule.weights[a] * inner;
    }
    if (previous >= 0.0 && std::abs(acc - previous) < 1e-9) return acc;
    previous = acc;
  }
  throw accuracy_error("normalization integral did not stabilize");
}

/// Result of the embedded-matrix origin identity check.
struct EmbeddedOriginCheck {
  double p0 = 0.0;             // origin density from the full pipeline
  double reference = 0.0;      // prefactor * eps^{2N} Perm(X)^2
  double raw_reference = 0.0;  // eps^{2N} Perm(X)^2
  double prefactor = 0.0;      // (2 pi)^{-modes} (1-t^2)^pairs t^{2N}
  double epsilon = 0.0;
  double perm_x = 0.0;
};

/// Embed a real N x N matrix into the sampling pipeline and compare the
/// origin density for the pattern (1..1 0..0 | 1..1 0..0) against
/// eps^{2N} Perm(X)^2 times the analytic measurement constant. The dilation
/// plays side A with an identity side B, so the matrix lands verbatim in the
/// reduced submatrix the origin density is proportional to.
inline EmbeddedOriginCheck embedded_origin_check(const ComplexMatrix& x,
                                                 double xi) {
  if (!x.is_square()) throw dimension_error("embedded matrix must be square");
  const std::size_t n = x.rows();
  if (n > 3) throw feasibility_error("embedded origin check capped at N = 3");

  const EmbeddingResult embedded = embed_matrix(x);
  const std::size_t pairs = 2 * n;  // dilation size
  const ComplexMatrix u2m =
      build_tsbs_unitary(embedded.unitary, ComplexMatrix::identity(pairs));
  const ComplexMatrix u_g = u2m.adjoint();
  const EightPortSpec spec = EightPortSpec::alternating(pairs, xi);

  std::vector<int> half(pairs, 0);
  for (std::size_t i = 0; i < n; ++i) half[i] = 1;
  const OccupationPattern k(half), m(half);

  EmbeddedOriginCheck out;
  out.epsilon = embedded.epsilon;
  out.perm_x = std::abs(permanent_ryser(x));
  out.p0 = origin_density(spec, u_g, k, m);
  const double t = std::tanh(std::abs(xi));
  double prefactor = std::pow(2.0 * std::numbers::pi,
                              -static_cast<double>(2 * pairs)) *
                     std::pow(t, 2.0 * static_cast<double>(n));
  for (std::size_t j = 0; j < pairs; ++j) prefactor *= 1.0 - t * t;
  out.prefactor = prefactor;
  out.raw_reference =
      std::pow(out.epsilon, 2.0 * static_cast<double>(n)) * out.perm_x * out.perm_x;
  out.reference = prefactor * out.raw_reference;
  return out;
}

}  // namespace bssim

#endif  // BSSIM_HOMODYNE_HPP
