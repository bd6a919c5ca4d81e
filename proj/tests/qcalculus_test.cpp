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

#include "qharmonic/qcalculus.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "oracles.hpp"
#include "qharmonic/qtrig.hpp"

namespace qharmonic {
namespace {

using cd = std::complex<double>;
using oracle::rel;

GridFunction random_grid(oracle::Gen& g, const QParams& p, const GridWindow& w,
                         bool dyadic) {
  std::vector<cd> pos, neg;
  for (int n = w.n_min; n <= w.n_max; ++n) {
    if (dyadic) {
      pos.emplace_back(g.dyadic(), g.dyadic());
      neg.emplace_back(g.dyadic(), g.dyadic());
    } else {
      pos.push_back(g.complex(-5, 5));
      neg.push_back(g.complex(-5, 5));
    }
  }
  return GridFunction(p, w, pos, neg);
}

TEST(GridFunction, Invariants) {
  const QParams p(0.5, 0.0);
  EXPECT_THROW(GridFunction(p, {0, 2}, std::vector<cd>(2), std::vector<cd>(3)),
               WindowError);
  EXPECT_THROW(GridFunction::zeros(p, {3, 2}), WindowError);
  std::vector<cd> bad(3);
  bad[1] = std::numeric_limits<double>::infinity();
  EXPECT_THROW(GridFunction(p, {0, 2}, bad, std::vector<cd>(3)), DomainError);
  const auto f = GridFunction::zeros(p, {-1, 1});
  EXPECT_THROW(f.pos(2), WindowError);
}

TEST(EvenOddParts, EvenInputHasNoOddPart) {
  const QParams p(0.5, 0.0);
  const auto f = GridFunction::sample(p, {-3, 3}, [](double x) { return cd(x * x, 1.0); });
  const auto parts = even_odd_parts(f);
  for (int n = -3; n <= 3; ++n) {
    EXPECT_EQ(parts.odd.pos(n), cd(0.0));
    EXPECT_EQ(parts.odd.neg(n), cd(0.0));
  }
}

TEST(EvenOddParts, OddInput) {
  const QParams p(0.5, 0.0);
  const auto f = GridFunction::sample(p, {-3, 3}, [](double x) { return cd(x); });
  const auto parts = even_odd_parts(f);
  for (int n = -3; n <= 3; ++n) {
    EXPECT_EQ(parts.even.pos(n), cd(0.0));
    EXPECT_EQ(parts.odd.pos(n), f.pos(n));
    EXPECT_EQ(parts.odd.neg(n), f.neg(n));
  }
}

TEST(EvenOddParts, SymmetryIsExact) {
  oracle::Gen g(21);
  const QParams p(0.5, 0.3);
  for (int i = 0; i < 50; ++i) {
    const auto parts = even_odd_parts(random_grid(g, p, {-5, 5}, false));
    for (int n = -5; n <= 5; ++n) {
      EXPECT_EQ(parts.even.pos(n), parts.even.neg(n));
      EXPECT_EQ(parts.odd.pos(n), -parts.odd.neg(n));
    }
  }
}

TEST(EvenOddParts, ReconstructionBitExactOnDyadicSamples) {
  oracle::Gen g(22);
  const QParams p(0.5, 0.3);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_grid(g, p, {-4, 4}, true);
    const auto parts = even_odd_parts(f);
    const auto back = parts.even + parts.odd;
    EXPECT_EQ(back.pos_values(), f.pos_values());
    EXPECT_EQ(back.neg_values(), f.neg_values());
  }
}

TEST(EvenOddParts, ReconstructionWithinOneRounding) {
  oracle::Gen g(23);
  const QParams p(0.5, 0.3);
  const double eps = std::numeric_limits<double>::epsilon();
  for (int i = 0; i < 200; ++i) {
    const auto f = random_grid(g, p, {-4, 4}, false);
    const auto parts = even_odd_parts(f);
    const auto back = parts.even + parts.odd;
    for (int n = -4; n <= 4; ++n) {
      const double scale = std::abs(f.pos(n)) + std::abs(f.neg(n));
      EXPECT_LE(std::abs(back.pos(n) - f.pos(n)), eps * scale);
      EXPECT_LE(std::abs(back.neg(n) - f.neg(n)), eps * scale);
    }
  }
}

TEST(QDerivative, IdentityAtMinusHalf) {
  const QParams p(0.5, -0.5);
  const auto f = GridFunction::sample(p, {-3, 3}, [](double x) { return cd(x); });
  const auto d = q_derivative_alpha(f);
  EXPECT_EQ(d.window(), (GridWindow{-2, 2}));
  for (int n = -2; n <= 2; ++n) {
    EXPECT_NEAR(d.pos(n).real(), 1.0, 1e-15);
    EXPECT_NEAR(d.neg(n).real(), 1.0, 1e-15);
  }
}

TEST(QDerivative, LinearFunctionGivesShiftedQNumber) {
  const QParams p(0.5, 0.3);
  const auto f = GridFunction::sample(p, {-3, 3}, [](double x) { return cd(x); });
  for (auto conv : {Convention::dunkl, Convention::literal}) {
    const auto d = q_derivative_alpha(f, conv);
    for (int n = -2; n <= 2; ++n) {
      EXPECT_LT(rel(d.pos(n), q_number(2.6, 0.5)), 1e-15);
      EXPECT_LT(rel(d.neg(n), q_number(2.6, 0.5)), 1e-15);
    }
  }
}

TEST(QDerivative, WindowTooSmall) {
  const QParams p(0.5, 0.0);
  EXPECT_THROW(q_derivative_alpha(GridFunction::zeros(p, {0, 1})), WindowError);
  EXPECT_NO_THROW(q_derivative_alpha(GridFunction::zeros(p, {0, 2})));
}

TEST(QDerivative, ExponentialEigenfunctionDouble) {
  // Well-conditioned part of the grid in double precision.
  const QParams p(0.5, 0.0);
  const auto f = GridFunction::sample(p, {-5, 7}, [&](double x) {
    return exp_alpha((1 - 0.5) * x, p);
  });
  const auto d = q_derivative_alpha(f);
  for (int n = -4; n <= 6; ++n) {
    EXPECT_LT(rel(d.pos(n), f.pos(n)), 1e-10) << n;
    EXPECT_LT(rel(d.neg(n), f.neg(n)), 1e-10) << n;
  }
}

TEST(QDerivative, EigenRelationsHighPrecision) {
  const Field<BigFloat> field{192};
  SeriesControl ctrl;
  ctrl.precision_bits = 192;
  using BG = BasicGridFunction<BigFloat>;
  using BC = BasicComplex<BigFloat>;
  for (double a : {-0.5, 0.0, 1.0}) {
    const QParams p(0.8, a);
    const double t = 1.0 / 0.8;
    auto arg = [&](const BigFloat& x) {
      return BC{(field(1.0) - field(0.8)) * field(t) * x, field(0.0)};
    };
    const BG c = BG::sample(p, {-5, 13}, [&](const BigFloat& x) {
      return cos_alpha_series(field, arg(x), p, ctrl).value;
    }, field);
    const BG s = BG::sample(p, {-5, 13}, [&](const BigFloat& x) {
      return sin_alpha_series(field, arg(x), p, ctrl).value;
    }, field);
    const BG dc = q_derivative_alpha(c);
    const BG ds = q_derivative_alpha(s);
    for (int n = -4; n <= 12; ++n) {
      for (int sign : {1, -1}) {
        const BC want_c = s.at(sign, n) * field(-t);
        const BC want_s = c.at(sign, n) * field(t);
        EXPECT_LT((abs(dc.at(sign, n) - want_c) / abs(want_c)).to_double(), 1e-40);
        EXPECT_LT((abs(ds.at(sign, n) - want_s) / abs(want_s)).to_double(), 1e-40);
      }
    }
  }
}

TEST(QDerivative, LiteralConventionBreaksCosineRelation) {
  // With q^{2a+1} on the even part, d cos_a picks up
  // (1 - q^{2a+1}) cos_a(x) / ((1-q) x) for a != -1/2.
  const QParams p(0.5, 0.0);
  const auto c = GridFunction::sample(p, {-1, 5}, [&](double x) {
    return cos_alpha(0.5 * x, p);
  });
  const auto s = GridFunction::sample(p, {-1, 5}, [&](double x) {
    return sin_alpha(0.5 * x, p);
  });
  const auto d = q_derivative_alpha(c, Convention::literal);
  for (int n = 0; n <= 4; ++n) {
    const double x = std::pow(0.5, n);
    const cd extra = (1 - 0.5) * c.pos(n) / (0.5 * x);
    EXPECT_LT(rel(d.pos(n), -s.pos(n) + extra), 1e-12);
  }
}

TEST(QDerivative, MinusHalfIsClassicalQDerivativeOnPolynomials) {
  // Monomials: x^{2k} -> q^{-2k} [2k]_q x^{2k-1}, x^{2k+1} -> [2k+1]_q x^{2k}.
  oracle::Gen g(31);
  for (int trial = 0; trial < 20; ++trial) {
    const double q = g.uniform(0.3, 0.9);
    const QParams p(q, -0.5);
    std::vector<double> coef(7);
    for (auto& c : coef) c = g.uniform(-2, 2);
    auto poly = [&](double x) {
      double s = 0;
      for (int k = 6; k >= 0; --k) s = s * x + coef[k];
      return cd(s);
    };
    auto dpoly = [&](double x) {
      double s = 0;
      for (int j = 1; j <= 6; ++j) {
        const double factor = j % 2 ? q_number(j, q) : std::pow(q, -j) * q_number(j, q);
        s += coef[j] * factor * std::pow(x, j - 1);
      }
      return s;
    };
    const auto d = q_derivative_alpha(GridFunction::sample(p, {-2, 6}, poly));
    for (int n = -1; n <= 5; ++n) {
      const double x = std::pow(q, n);
      EXPECT_NEAR(d.pos(n).real(), dpoly(x), 1e-11 * (1 + std::fabs(dpoly(x))));
      EXPECT_NEAR(d.neg(n).real(), dpoly(-x), 1e-11 * (1 + std::fabs(dpoly(-x))));
    }
  }
}

TEST(QDerivativeFn, Constants) {
  auto c = [](double) { return cd(3.0); };
  for (double x : {0.3, -1.0, 7.0}) {
    EXPECT_EQ(q_derivative_alpha_fn(c, x, QParams(0.5, -0.5)), cd(0.0));
    EXPECT_EQ(q_derivative_alpha_fn(c, x, QParams(0.5, 0.0)), cd(0.0));
  }
  // The printed operator does not annihilate constants for a != -1/2.
  EXPECT_NEAR(q_derivative_alpha_fn(c, 1.0, QParams(0.5, 0.0), Convention::literal).real(),
              3.0, 1e-15);
}

TEST(QDerivativeFn, SineToCosine) {
  const QParams p(0.5, 0.0);
  auto f = [&](double x) { return sin_alpha((1 - 0.5) * x, p); };
  const double x = 0.25;
  const cd got = q_derivative_alpha_fn(f, x, p);
  EXPECT_LT(rel(got, cos_alpha((1 - 0.5) * x, p)), 1e-10);
}

TEST(QDerivativeFn, Origin) {
  auto f = [](double x) { return cd(std::sin(x)); };
  const QParams p(0.5, 0.3);
  EXPECT_THROW(q_derivative_alpha_fn(f, 0.0, p), DomainError);
  EXPECT_LT(rel(q_derivative_alpha_fn(f, 0.0, p, Convention::dunkl, cd(1.0)),
                q_number(2.6, 0.5)),
            1e-15);
  // Near the origin the operator approaches [2a+2]_q f'(0).
  EXPECT_NEAR(q_derivative_alpha_fn(f, 1e-6, p).real(), q_number(2.6, 0.5), 1e-5);
}

TEST(Jackson, HalfLineExamples) {
  const QParams p(0.5, 0.0);
  EXPECT_EQ(jackson_integral_0_inf(GridFunction::zeros(p, {-3, 3})).value, cd(0.0));
  std::vector<cd> pos(7), neg(7);
  pos[3 - (-3)] = cd(2.0, -1.0);
  const auto mass = jackson_integral_0_inf(GridFunction(p, {-3, 3}, pos, neg));
  EXPECT_EQ(mass.value, cd(0.125, -0.0625));
  const auto ramp = GridFunction::sample(p, {0, 60}, [](double x) {
    return cd(x <= 1 ? x : 0.0);
  });
  const auto r = jackson_integral_0_inf(ramp);
  EXPECT_NEAR(r.value.real(), 2.0 / 3.0, 1e-15);
  // The flag looks at both window edges; here the lower edge carries the
  // jump at x = 1, so it is raised even though nothing is truncated.
  EXPECT_TRUE(r.window_warning);
  const auto decaying = GridFunction::sample(p, {-40, 60}, [](double x) {
    return cd(x * std::exp(-std::fabs(x)));
  });
  EXPECT_FALSE(jackson_integral_0_inf(decaying).window_warning);
}

TEST(Jackson, WarningWhenBoundaryMatters) {
  const QParams p(0.5, 0.0);
  const auto flat = GridFunction::sample(p, {0, 5}, [](double) { return cd(1.0); });
  const auto r = jackson_integral_0_inf(flat);
  EXPECT_TRUE(r.window_warning);
  EXPECT_NEAR(r.tail_estimate, 0.5 + 0.5 * std::pow(0.5, 5), 1e-15);
}

TEST(Jackson, WholeLineExamples) {
  const QParams p(0.5, 0.0);
  std::vector<cd> pos(3), neg(3);
  pos[1] = neg[1] = 1.0;
  EXPECT_EQ(jackson_integral_R(GridFunction(p, {-1, 1}, pos, neg)).value, cd(1.0));
}

TEST(Jackson, OddVanishesAndEvenDoubles) {
  oracle::Gen g(41);
  const QParams p(0.7, 0.2);
  for (int i = 0; i < 50; ++i) {
    std::vector<cd> pos, neg, neg_even;
    for (int n = -6; n <= 10; ++n) {
      pos.push_back(g.complex(-1, 1));
      neg.push_back(-pos.back());
      neg_even.push_back(pos.back());
    }
    EXPECT_EQ(jackson_integral_R(GridFunction(p, {-6, 10}, pos, neg)).value, cd(0.0));
    const GridFunction even(p, {-6, 10}, pos, neg_even);
    const cd whole = jackson_integral_R(even).value;
    const cd half = jackson_integral_0_inf(even).value;
    EXPECT_LT(std::abs(whole - 2.0 * half), 1e-15 * std::abs(whole));
  }
}

TEST(LpNorm, Examples) {
  const QParams p(0.5, 0.7);
  EXPECT_EQ(lp_norm(GridFunction::zeros(p, {-2, 2}), 2.0), 0.0);
  std::vector<cd> pos(5), neg(5);
  pos[2] = 1.0;
  const GridFunction mass(p, {-2, 2}, pos, neg);
  EXPECT_NEAR(lp_norm(mass, 2.0), std::sqrt(0.5), 1e-16);
  EXPECT_NEAR(lp_norm(mass, 1.0), 0.5, 1e-16);
  EXPECT_EQ(lp_norm(mass, std::numeric_limits<double>::infinity()), 1.0);
  EXPECT_THROW(lp_norm(mass, 0.5), DomainError);
}

TEST(LpNorm, Homogeneity) {
  oracle::Gen g(51);
  const QParams p(0.6, -0.3);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_grid(g, p, {-3, 8}, false);
    const cd c = g.complex(-3, 3);
    EXPECT_LT(rel(lp_norm(c * f, 2.0), std::abs(c) * lp_norm(f, 2.0)), 1e-14);
  }
}

TEST(LpNorm, SquareIsWeightedJacksonIntegral) {
  oracle::Gen g(52);
  for (int i = 0; i < 50; ++i) {
    const QParams p(g.uniform(0.2, 0.9), g.uniform(-0.9, 2.0));
    const auto f = random_grid(g, p, {-4, 9}, false);
    std::vector<cd> pos, neg;
    for (int n = -4; n <= 9; ++n) {
      const double w = std::pow(std::pow(p.q(), n), 2 * p.alpha() + 1);
      pos.emplace_back(std::norm(f.pos(n)) * w);
      neg.emplace_back(std::norm(f.neg(n)) * w);
    }
    const double want = jackson_integral_R(GridFunction(p, {-4, 9}, pos, neg)).value.real();
    const double got = lp_norm(f, 2.0);
    EXPECT_LE(std::fabs(got * got - want), 1e-14 * want);
  }
}

}  // namespace
}  // namespace qharmonic
