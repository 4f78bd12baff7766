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

#include "bssim/tsbs.hpp"

#include <gtest/gtest.h>

#include "bssim/random_unitary.hpp"
#include "support/fock_oracle.hpp"
#include "support/testing.hpp"

using namespace bssim;
using bssim::testing::two_sided_joint_oracle;

namespace {

TsbsConfig haar_config(std::size_t modes, double t, std::uint64_t seed) {
  return TsbsConfig::equal_squeezing(haar_unitary(modes, RandomSeed{seed}),
                                     haar_unitary(modes, RandomSeed{seed + 5000}),
                                     t);
}

}  // namespace

TEST(TsbsConfig, Validation) {
  const ComplexMatrix u = haar_unitary(2, RandomSeed{1});
  EXPECT_THROW(TsbsConfig(u, haar_unitary(3, RandomSeed{2}), {0.1, 0.1}),
               dimension_error);
  EXPECT_THROW(TsbsConfig(u, u.scaled(2.0), {0.1, 0.1}), domain_error);
  EXPECT_THROW(TsbsConfig(u, u, {0.1}), dimension_error);
  EXPECT_THROW(TsbsConfig(u, u, {0.1, 1.0}), domain_error);
  EXPECT_TRUE(TsbsConfig(u, u, {0.2, 0.2}).has_equal_squeezing());
  EXPECT_FALSE(TsbsConfig(u, u, {0.2, 0.3}).has_equal_squeezing());
}

TEST(JointProbability, VacuumCoincidenceIsThePrefactor) {
  const TsbsConfig cfg(haar_unitary(3, RandomSeed{10}),
                       haar_unitary(3, RandomSeed{11}), {0.2, 0.4, 0.6});
  const OccupationPattern vac = OccupationPattern::zeros(3);
  const double expected = (1 - 0.04) * (1 - 0.16) * (1 - 0.36);
  EXPECT_NEAR(joint_probability_general(cfg, vac, vac), expected, 1e-15);
}

TEST(JointProbability, ConservationMismatchIsExactlyZero) {
  const TsbsConfig cfg = haar_config(2, 0.5, 20);
  EXPECT_EQ(joint_probability_general(cfg, OccupationPattern({1, 0}),
                                      OccupationPattern({1, 1})),
            0.0);
}

TEST(JointProbability, PatternLengthMismatchThrows) {
  const TsbsConfig cfg = haar_config(2, 0.5, 21);
  EXPECT_THROW(joint_probability_general(cfg, OccupationPattern({1, 0, 0}),
                                         OccupationPattern({1, 0})),
               pattern_error);
}

// Equal squeezing against the bipartite state-evolution oracle.
TEST(JointProbability, MatchesTwoSidedOracleEqualSqueezing) {
  const TsbsConfig cfg = haar_config(2, 0.5, 22);
  const auto pats = enumerate_patterns(2, 1);
  for (const auto& k : pats) {
    for (const auto& m : pats) {
      const double lib = joint_probability_general(cfg, k, m);
      const double oracle = two_sided_joint_oracle(cfg, k, m);
      EXPECT_NEAR(lib, oracle, 1e-10) << k.str() << " | " << m.str();
    }
  }
}

// The general monomial path (unequal squeezing) against the same oracle.
TEST(JointProbability, MatchesTwoSidedOracleUnequalSqueezing) {
  const TsbsConfig cfg(haar_unitary(2, RandomSeed{23}),
                       haar_unitary(2, RandomSeed{24}), {0.3, 0.6});
  for (int photons : {1, 2}) {
    const auto pats = enumerate_patterns(2, photons);
    for (const auto& k : pats) {
      for (const auto& m : pats) {
        const double lib = joint_probability_general(cfg, k, m);
        const double oracle = two_sided_joint_oracle(cfg, k, m);
        EXPECT_NEAR(lib, oracle, 1e-10) << k.str() << " | " << m.str();
      }
    }
  }
}

TEST(MarginalProbability, ClosedFormMatchesBruteForceSumAndIgnoresUB) {
  const ComplexMatrix u_a = haar_unitary(3, RandomSeed{30});
  const OccupationPattern m({0, 1, 0});
  double first = -1.0;
  for (std::uint64_t ub_seed : {31, 32, 33}) {
    const TsbsConfig cfg = TsbsConfig::equal_squeezing(
        u_a, haar_unitary(3, RandomSeed{ub_seed}), 0.4);
    double brute = 0.0;
    for (const auto& k : enumerate_patterns(3, 1)) {
      brute += joint_probability_general(cfg, k, m);
    }
    const double closed = marginal_probability(cfg, m);
    EXPECT_NEAR(brute, closed, 1e-10 * closed);
    if (first < 0) {
      first = closed;
    } else {
      EXPECT_DOUBLE_EQ(first, closed);
    }
  }
}

TEST(MarginalProbability, VacuumAndZeroSqueezingLimits) {
  const TsbsConfig cfg = haar_config(3, 0.0, 40);
  EXPECT_DOUBLE_EQ(marginal_probability(cfg, OccupationPattern::zeros(3)), 1.0);
  EXPECT_DOUBLE_EQ(marginal_probability(cfg, OccupationPattern({1, 0, 0})), 0.0);
  const TsbsConfig cfg2 = haar_config(3, 0.5, 41);
  EXPECT_NEAR(marginal_probability(cfg2, OccupationPattern::zeros(3)),
              std::pow(0.75, 3), 1e-15);
}

TEST(MarginalProbability, UnequalSqueezingRejected) {
  const TsbsConfig cfg(haar_unitary(2, RandomSeed{42}),
                       haar_unitary(2, RandomSeed{43}), {0.2, 0.3});
  EXPECT_THROW(marginal_probability(cfg, OccupationPattern({1, 0})),
               closed_form_error);
}

TEST(ConditionalProbability, NormalizedOverOutputs) {
  const TsbsConfig cfg = haar_config(4, 0.5, 50);
  const OccupationPattern m({1, 1, 0, 0});
  double total = 0.0;
  for (const auto& k : enumerate_patterns(4, 2)) {
    total += conditional_probability(cfg, k, m);
  }
  EXPECT_NEAR(total, 1.0, 1e-10);
}

TEST(ConditionalProbability, IndependentOfSqueezing) {
  const ComplexMatrix ua = haar_unitary(3, RandomSeed{51});
  const ComplexMatrix ub = haar_unitary(3, RandomSeed{52});
  const OccupationPattern k({1, 1, 0}), m({0, 1, 1});
  const double at_03 =
      conditional_probability(TsbsConfig::equal_squeezing(ua, ub, 0.3), k, m);
  const double at_07 =
      conditional_probability(TsbsConfig::equal_squeezing(ua, ub, 0.7), k, m);
  EXPECT_LE(std::abs(at_03 - at_07), 1e-12);
}

TEST(ConditionalProbability, ZeroProbabilityHeraldThrows) {
  const TsbsConfig cfg = haar_config(2, 0.0, 53);
  EXPECT_THROW(conditional_probability(cfg, OccupationPattern({1, 0}),
                                       OccupationPattern({0, 1})),
               conditioning_error);
}

TEST(ConditionalProbability, UnequalSqueezingRejected) {
  const TsbsConfig cfg(haar_unitary(2, RandomSeed{54}),
                       haar_unitary(2, RandomSeed{55}), {0.2, 0.3});
  EXPECT_THROW(conditional_probability(cfg, OccupationPattern({1, 0}),
                                       OccupationPattern({0, 1})),
               closed_form_error);
}

// The central time-reversal equivalence: the two-sided conditional equals
// the single-photon scattering probability through U_A U_B^T.
TEST(UnfoldedProbability, CoincidesWithConditional) {
  for (std::uint64_t seed : {60, 61, 62}) {
    const TsbsConfig cfg = haar_config(4, 0.5, seed);
    const auto pats = enumerate_patterns(4, 2);
    double max_dev = 0.0;
    for (const auto& k : pats) {
      for (const auto& m : pats) {
        const double cond = conditional_probability(cfg, k, m);
        const double unf = unfolded_probability(cfg.u_a, cfg.u_b, k, m);
        max_dev = std::max(max_dev, std::abs(cond - unf));
      }
    }
    EXPECT_LT(max_dev, 1e-10) << "seed " << seed;
  }
}

// A real orthogonal circuit on both sides unfolds to the identity.
TEST(UnfoldedProbability, EqualRealSidesUnfoldToIdentity) {
  const ComplexMatrix bs = beamsplitter_unitary();
  const auto pats = enumerate_patterns(2, 2);
  for (const auto& k : pats) {
    for (const auto& m : pats) {
      const double p = unfolded_probability(bs, bs, k, m);
      EXPECT_NEAR(p, k == m ? 1.0 : 0.0, 1e-12);
    }
  }
}

// With the B circuit set to the identity the setup is plain heralded
// sampling through U_A alone.
TEST(UnfoldedProbability, ScattershotSpecialCase) {
  const ComplexMatrix u_a = haar_unitary(3, RandomSeed{63});
  const OccupationPattern k({2, 0, 0}), m({1, 1, 0});
  const double p = unfolded_probability(u_a, ComplexMatrix::identity(3), k, m);
  const Complex perm = permanent_naive(reduced_matrix(u_a, k, m));
  EXPECT_NEAR(p, std::norm(perm) / 2.0, 1e-13);  // k! = 2, m! = 1
}

TEST(UnfoldedProbability, MatchesSectorTransitionAmplitude) {
  const ComplexMatrix u_a = haar_unitary(4, RandomSeed{64});
  const ComplexMatrix u_b = haar_unitary(4, RandomSeed{65});
  const ComplexMatrix combined = u_a * u_b.transpose();
  const auto pats = enumerate_patterns(4, 2);
  for (const auto& k : pats) {
    for (const auto& m : pats) {
      const double via_perm = unfolded_probability(u_a, u_b, k, m);
      const double via_amp = std::norm(transition_amplitude(combined, k, m));
      EXPECT_LE(std::abs(via_perm - via_amp), 1e-12);
    }
  }
}

TEST(UnfoldedProbability, ConservationViolationThrows) {
  const ComplexMatrix u = haar_unitary(2, RandomSeed{66});
  EXPECT_THROW(unfolded_probability(u, u, OccupationPattern({1, 1}),
                                    OccupationPattern({1, 0})),
               pattern_error);
}

// Equal squeezing factorizes the joint exactly: the implementation computes
// it as marginal * conditional, so the identity holds to the last bit.
TEST(JointProbability, FactorizationIsExact) {
  const TsbsConfig cfg = haar_config(3, 0.45, 70);
  const auto pats = enumerate_patterns(3, 2);
  for (const auto& k : pats) {
    for (const auto& m : pats) {
      EXPECT_DOUBLE_EQ(joint_probability_general(cfg, k, m),
                       marginal_probability(cfg, m) *
                           conditional_probability(cfg, k, m));
    }
  }
}

// With unequal squeezing the factorization breaks: the renormalized joint
// no longer matches the squeezing-free conditional.
TEST(JointProbability, UnequalSqueezingBreaksFactorization) {
  const ComplexMatrix ua = haar_unitary(2, RandomSeed{71});
  const ComplexMatrix ub = haar_unitary(2, RandomSeed{72});
  const TsbsConfig unequal(ua, ub, {0.3, 0.8});
  const TsbsConfig equal = TsbsConfig::equal_squeezing(ua, ub, 0.5);
  const OccupationPattern m({1, 1});
  const auto ks = enumerate_patterns(2, 2);

  double joint_sum = 0.0;
  for (const auto& k : ks) joint_sum += joint_probability_general(unequal, k, m);
  ASSERT_GT(joint_sum, 0.0);

  double max_dev = 0.0;
  for (const auto& k : ks) {
    const double renorm = joint_probability_general(unequal, k, m) / joint_sum;
    max_dev = std::max(max_dev,
                       std::abs(renorm - conditional_probability(equal, k, m)));
  }
  EXPECT_GT(max_dev, 1e-4);
}

TEST(SqueezedJoint, VacuumWithZeroSqueezingIsCertain) {
  const ComplexMatrix u2m = build_tsbs_unitary(haar_unitary(2, RandomSeed{80}),
                                               haar_unitary(2, RandomSeed{81}));
  const OccupationPattern vac = OccupationPattern::zeros(2);
  EXPECT_NEAR(squeezed_joint_probability(u2m, alternating_squeezings(2, 0.0),
                                         vac, vac),
              1.0, 1e-15);
}

TEST(SqueezedJoint, ClosedFormMatchesSectorOracle) {
  for (std::uint64_t seed : {82, 83}) {
    const ComplexMatrix ua = haar_unitary(2, RandomSeed{seed});
    const ComplexMatrix ub = haar_unitary(2, RandomSeed{seed + 100});
    const ComplexMatrix u2m = build_tsbs_unitary(ua, ub);
    const auto xi = alternating_squeezings(2, 0.3);
    const auto pats = enumerate_patterns(2, 1);
    for (const auto& k : pats) {
      for (const auto& m : pats) {
        const double closed = squeezed_joint_probability(u2m, xi, k, m);
        const double oracle = bssim::testing::squeezed_joint_oracle(u2m, xi, k, m);
        EXPECT_NEAR(closed, oracle, 1e-8 * std::max(closed, 1e-6))
            << k.str() << " | " << m.str();
      }
    }
  }
}

TEST(SqueezedJoint, SummingOverOutputsRecoversHeraldMarginal) {
  const ComplexMatrix u2m = build_tsbs_unitary(haar_unitary(2, RandomSeed{84}),
                                               haar_unitary(2, RandomSeed{85}));
  const auto xi = alternating_squeezings(2, 0.4);
  const double t = std::tanh(0.4);
  const OccupationPattern m({0, 1});
  double total = 0.0;
  for (const auto& k : enumerate_patterns(2, 1)) {
    total += squeezed_joint_probability(u2m, xi, k, m);
  }
  const double expected = std::pow(1 - t * t, 2) * t * t;
  EXPECT_NEAR(total, expected, 1e-10 * expected);
}

TEST(SqueezedJoint, NonAlternatingSqueezingRejected) {
  const ComplexMatrix u2m = build_tsbs_unitary(haar_unitary(2, RandomSeed{86}),
                                               haar_unitary(2, RandomSeed{87}));
  EXPECT_THROW(squeezed_joint_probability(u2m, {0.3, 0.3, 0.3, -0.3},
                                          OccupationPattern({1, 0}),
                                          OccupationPattern({1, 0})),
               closed_form_error);
}

TEST(SqueezedJoint, NonComposedCircuitRejected) {
  EXPECT_THROW(
      squeezed_joint_probability(haar_unitary(4, RandomSeed{88}),
                                 alternating_squeezings(2, 0.3),
                                 OccupationPattern({1, 0}),
                                 OccupationPattern({1, 0})),
      domain_error);
}

TEST(SqueezedInputSector, AmplitudesAreSqueezedCoefficientProducts) {
  const auto xi = alternating_squeezings(1, 0.3);
  const SectorState s = squeezed_input_sector(xi, 2);
  const auto plus = squeezed_vacuum_coefficients(0.3, 2);
  const auto minus = squeezed_vacuum_coefficients(-0.3, 2);
  EXPECT_NEAR(std::abs(s.amplitude(OccupationPattern({2, 0})) - plus[2] * minus[0]),
              0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude(OccupationPattern({1, 1}))), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude(OccupationPattern({0, 2})) - plus[0] * minus[2]),
              0.0, 1e-15);
}
