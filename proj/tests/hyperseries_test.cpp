// Copyright 2026 The qharmonic Authors. All Rights Reserved.
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

#include "qharmonic/hyperseries.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "qharmonic/qtrig.hpp"

namespace qharmonic {
namespace {

using oracle::rel;

TEST(PhiRs, ZeroArgumentIsOne) {
  EXPECT_EQ(phi_rs(PhiSpec{{0.3, 0.2}, {0.7}, 0.5, 0.0}), 1.0);
  EXPECT_EQ(phi_rs(PhiSpec{{}, {0.1, 0.2}, 0.4, 0.0}), 1.0);
}

TEST(PhiRs, OnePhiOneIsTheQSquaredCosine) {
  const double q = 0.5, x = 0.375;  // q^2 x^2 is exact in double
  const auto got = phi_rs(PhiSpec{{0.0}, {q}, q * q, q * q * x * x});
  const oracle::BigFloat want = oracle::classical_cos(x, q);
  EXPECT_LT(rel(got.real(), want.to_double()), 1e-15);

  // Same comparison on the high-precision backend, to 1e-25.
  const Field<BigFloat> f{200};
  SeriesControl c;
  c.rel_tol = 1e-40;
  const auto big = phi_rs_series(f, PhiSpec{{0.0}, {q}, q * q, q * q * x * x}, c);
  const BigFloat err = abs(big.value.re - want) / abs(want);
  EXPECT_LT(err.to_double(), 1e-25);
}

TEST(PhiRs, TerminatingSeriesMatchesHandExpansion) {
  // 1phi1(q^-2; b; q; x) has three terms:
  //   1 + (1-q^-2) / ((1-b)(1-q)) (-1) x
  //     + (1-q^-2)(1-q^-1) / ((1-b)(1-bq)(1-q)(1-q^2)) q x^2.
  const double q = 0.5, b = 0.3, x = 0.7;
  const double a = 1.0 / (q * q);
  const double t1 = -(1 - a) / ((1 - b) * (1 - q)) * x;
  const double t2 = (1 - a) * (1 - a * q) / ((1 - b) * (1 - b * q) * (1 - q) * (1 - q * q)) * q * x * x;
  const PhiSpec spec{{a}, {b}, q, x};
  ASSERT_EQ(spec.terminating_index(), 2);
  EXPECT_LT(rel(phi_rs(spec).real(), 1 + t1 + t2), 1e-14);
}

TEST(PhiRs, TerminatingSeriesMatchesBruteForce) {
  oracle::Gen g(11);
  for (int i = 0; i < 60; ++i) {
    const double q = g.uniform(0.2, 0.8);
    const int n = g.integer(0, 9);
    const double a = std::pow(q, -n);
    const double b1 = g.uniform(-0.9, 0.9), b2 = g.uniform(-0.9, 0.9);
    const double c = g.uniform(-0.9, 0.9);
    const double x = g.uniform(-2.0, 2.0);
    const PhiSpec spec{{a, c}, {b1, b2}, q, x};
    const double want = oracle::phi({a, c}, {b1, b2}, q, x, n + 1).to_double();
    EXPECT_LE(std::fabs(phi_rs(spec).real() - want),
              1e-14 * std::max(1.0, std::fabs(want)))
        << "q=" << q << " n=" << n;
  }
}

TEST(PhiRs, NonTerminatingAgainstOracle) {
  // 2phi1 inside the unit disc and a 0phi1 (sign factor squared).
  const PhiSpec s21{{0.3, -0.4}, {0.6}, 0.5, 0.45};
  EXPECT_LT(rel(phi_rs(s21).real(),
                oracle::phi({0.3, -0.4}, {0.6}, 0.5, 0.45, 120).to_double()),
            1e-14);
  const PhiSpec s01{{}, {0.2}, 0.7, 3.0};
  EXPECT_LT(rel(phi_rs(s01).real(),
                oracle::phi({}, {0.2}, 0.7, 3.0, 120).to_double()),
            1e-13);
}

TEST(PhiRs, InvalidSpecs) {
  EXPECT_THROW(phi_rs(PhiSpec{{0.1, 0.2, 0.3}, {0.4}, 0.5, 0.1}), DomainError);
  EXPECT_THROW(phi_rs(PhiSpec{{0.1, 0.2}, {0.4}, 0.5, 1.5}), DomainError);
  EXPECT_THROW(phi_rs(PhiSpec{{0.1}, {4.0}, 0.5, 0.1}), DomainError);   // base^-2
  EXPECT_THROW(phi_rs(PhiSpec{{0.1}, {1.0}, 0.5, 0.1}), DomainError);   // base^0
  EXPECT_THROW(phi_rs(PhiSpec{{0.1}, {0.3}, 1.2, 0.1}), DomainError);
  // r = s+1 outside the disc is fine when terminating.
  EXPECT_NO_THROW(phi_rs(PhiSpec{{4.0, 0.2}, {0.4}, 0.5, 3.0}));
}

TEST(PhiRs, CapReached) {
  SeriesControl c;
  c.max_terms = 4;
  EXPECT_THROW(phi_rs(PhiSpec{{0.3}, {0.6}, 0.9, 0.8}, c), ConvergenceError);
}

TEST(PhiRs, LargeArgumentEscalatesPrecision) {
  // 1phi1(0; q; q^2; q^2 x^2) at x = 30 cancels ~40 bits in double.
  const double q = 0.5, x = 30.0;
  const auto got = phi_rs(PhiSpec{{0.0}, {q * q}, q * q, q * q * x * x});
  // mpmath: cos_0(30; q=0.5) = 51856.952752743646693...
  EXPECT_LT(rel(got.real(), 51856.952752743646693), 1e-14);
}

TEST(QBessel, Examples) {
  EXPECT_DOUBLE_EQ(q_bessel(0.0, 0.0, 0.5).real(), 1.0);
  EXPECT_EQ(q_bessel(1.0, 0.0, 0.5), std::complex<double>(0.0, 0.0));
  // mpmath: (q^{nu+1};q)/(q;q) x^nu 1phi1(0;q^{nu+1};q;q^2x^2), 40 digits.
  EXPECT_LT(rel(q_bessel(0.5, 0.2, 0.5).real(), 0.6657212508909003412394616848596630568723),
            1e-15);
}

TEST(QBessel, AgainstBruteForce) {
  for (double nu : {0.0, 0.5, 1.7}) {
    for (double x : {0.1, 0.8, 1.9}) {
      const double q = 0.6;
      const oracle::BigFloat pre =
          oracle::pochhammer_inf(oracle::qpow(q, nu + 1), q) /
          oracle::pochhammer_inf(oracle::big(q), q) *
          pow(oracle::big(x), oracle::big(nu));
      const double want =
          (pre * oracle::phi({0.0}, {std::pow(q, nu + 1)}, q, q * q * x * x, 80))
              .to_double();
      EXPECT_LT(rel(q_bessel(nu, x, q).real(), want), 1e-14) << nu << " " << x;
    }
  }
}

TEST(QBessel, BranchCut) {
  EXPECT_TRUE(q_bessel_on_branch_cut(0.5, -1.0));
  EXPECT_FALSE(q_bessel_on_branch_cut(1.0, -1.0));
  EXPECT_FALSE(q_bessel_on_branch_cut(0.5, 1.0));
  // Principal branch: (-x)^nu = x^nu e^{i pi nu}.
  const auto pos = q_bessel(0.5, 0.4, 0.5);
  const auto neg = q_bessel(0.5, -0.4, 0.5);
  EXPECT_LT(std::abs(neg - pos * std::polar(1.0, M_PI * 0.5)), 1e-15);
  EXPECT_THROW(q_bessel(-1.0, 0.4, 0.5), DomainError);
}

TEST(QBessel, BaseSquaredGivesShiftedCosine) {
  // With base q^2 the 1phi1 argument becomes q^4 x^2, so the normalized
  // Bessel function reproduces cos(qx; q^2) rather than cos(x; q^2).
  const double q = 0.5, q2 = q * q;
  const double pre = q_pochhammer_inf(q2, q2) / q_pochhammer_inf(q, q2);
  for (double x : {0.3, 1.0, 2.0}) {
    const double rhs = (pre * std::sqrt(x) * q_bessel(-0.5, x, q2)).real();
    EXPECT_LT(rel(rhs, oracle::classical_cos(q * x, q).to_double()), 1e-14);
    EXPECT_GT(rel(rhs, oracle::classical_cos(x, q).to_double()), 1e-3);
  }
}

}  // namespace
}  // namespace qharmonic
