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

#include "qharmonic/verify.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <string>

namespace qharmonic {
namespace {

TEST(Report, PassedIffWithinTolerance) {
  VerifyReport r("demo", 1e-3);
  r.add("a", 1.0, 1.0005);
  EXPECT_TRUE(r.passed);
  EXPECT_NEAR(r.max_error, 5e-4, 1e-12);
  r.add("b", 2.0, 2.01);
  EXPECT_FALSE(r.passed);
  EXPECT_NEAR(r.cases.back().error, 5e-3, 1e-12);
  EXPECT_NEAR(r.cases.back().abs_error, 1e-2, 1e-12);
}

TEST(Report, AbsoluteMetricAndScale) {
  VerifyReport a("abs", 1e-2, "absolute");
  a.add("x", 100.0, 100.005);
  EXPECT_NEAR(a.max_error, 5e-3, 1e-9);
  VerifyReport s("rel", 1e-2);
  s.add("x", 1e-3, 2e-3, 1.0);
  EXPECT_NEAR(s.max_error, 1e-3, 1e-15);
}

TEST(Report, NanFails) {
  VerifyReport r("nan", 1.0);
  r.add("x", 1.0, std::numeric_limits<double>::quiet_NaN());
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(std::isinf(r.max_error));
}

TEST(Report, JsonFields) {
  VerifyReport r("demo", 1e-6);
  r.add("a", 1.0, 1.0);
  r.diagnostics.push_back("note");
  const auto j = to_json(r);
  EXPECT_EQ(j["suite"], "demo");
  EXPECT_EQ(j["tolerance"], 1e-6);
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["cases"].size(), 1u);
  EXPECT_EQ(j["cases"][0]["label"], "a");
  EXPECT_EQ(j["diagnostics"][0], "note");
}

TEST(VerificationWindow, Rule) {
  EXPECT_EQ(verification_window(0.5, {0, 6}), (GridWindow{-12, 40}));
  EXPECT_EQ(verification_window(solve_q(1), {0, 6}), (GridWindow{-15, 58}));
}

TEST(Suites, UnknownName) {
  EXPECT_THROW(run_suite("nope"), DomainError);
  EXPECT_EQ(suite_names().size(), 7u);
}

TEST(Suites, SmallRunsPass) {
  SuiteOptions o;
  o.cases = 5;
  for (const auto& name : suite_names()) {
    const VerifyReport r = run_suite(name, o);
    EXPECT_TRUE(r.passed) << name << " max_error " << r.max_error;
    EXPECT_FALSE(r.cases.empty()) << name;
  }
}

TEST(Suites, TightToleranceFails) {
  SuiteOptions o;
  o.cases = 3;
  o.qs = {0.5};
  o.alphas = {0.0};
  o.tolerance = 1e-300;
  EXPECT_FALSE(verify_plancherel(o).passed);
}

TEST(Suites, SeedIsDeterministic) {
  SuiteOptions o;
  o.cases = 3;
  o.qs = {0.5};
  o.alphas = {0.0};
  const auto a = verify_inversion(o);
  const auto b = verify_inversion(o);
  ASSERT_EQ(a.cases.size(), b.cases.size());
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    EXPECT_EQ(a.cases[i].actual, b.cases[i].actual);
  }
}

}  // namespace
}  // namespace qharmonic
